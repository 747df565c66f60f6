// Copyright 2026 The mpor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mpor/audit_stats.hpp"

using namespace mpor;
using doctest::Approx;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

TEST_CASE("binomial CDF") {
  CHECK(binom_cdf(10, 0.0, 0) == 1.0);
  CHECK(binom_cdf(10, 1.0, 9) == 0.0);
  CHECK(binom_cdf(10, 0.3, 10) == 1.0);
  CHECK(close(binom_cdf(1000, 0.1, 100), 0.5265990813, 1e-6));
  CHECK(close(binom_cdf(100, 0.01, 0), 0.3660323413, 1e-9));
  CHECK(close(binom_cdf(4, 0.5, 1), 5.0 / 16.0, 1e-15));
  CHECK_THROWS_AS(binom_cdf(10, 0.5, 11), std::invalid_argument);
  CHECK_THROWS_AS(binom_cdf(10, 1.5, 1), std::invalid_argument);
}

TEST_CASE("Poisson-binomial CDF") {
  const std::vector<double> zero(5, 0.0);
  CHECK(poisson_binomial_cdf(zero, 200, 0) == 1.0);
  const std::vector<double> skew = {0.2, 0.01, 0.02, 0.03, 0.04};
  CHECK(close(poisson_binomial_cdf(skew, 200, 50), 0.09020056727, 1e-8));
  CHECK(close(poisson_binomial_cdf(skew, 200, 20), 2.098695875e-10, 1e-18));
  const std::vector<double> mixed = {0.01, 0.01, 0.03, 0.04, 0.05};
  CHECK(close(poisson_binomial_cdf(mixed, 200, 10), 0.00006809921297, 1e-10));
  const std::vector<double> bad = {0.5, -0.1};
  CHECK_THROWS_AS(poisson_binomial_cdf(bad, 2, 1), std::invalid_argument);
}

TEST_CASE("Poisson-binomial with equal rates is binomial") {
  for (double f : {0.001, 0.01, 0.1, 0.37, 0.9}) {
    const std::vector<double> v(5, f);
    for (std::uint64_t b : {0, 3, 10, 50, 150}) {
      CHECK(close(poisson_binomial_cdf(v, 40, b), binom_cdf(200, f, b), 1e-12));
    }
  }
}

TEST_CASE("Poisson CDF") {
  CHECK(close(poisson_cdf(2.0, 0), 0.1353352833, 1e-9));
  CHECK(close(poisson_cdf(1.0, 0), 0.3678794412, 1e-9));
  CHECK(poisson_cdf(0.0, 0) == 1.0);
  for (double lambda : {1.0, 3.0, 20.0, 63.29}) {
    CHECK(close(poisson_cdf(lambda, static_cast<std::uint64_t>(20 * lambda)), 1.0, 1e-12));
  }
  CHECK_THROWS_AS(poisson_cdf(-1.0, 3), std::invalid_argument);
}

TEST_CASE("exact versus Poisson report") {
  const std::vector<double> f01(5, 0.01);
  const std::uint64_t b10[] = {10};
  const auto rows = poisson_vs_exact_report(f01, 200, b10);
  CHECK(close(rows[0].exact, 0.5830408032, 1e-9));
  CHECK(close(rows[0].poisson, 0.5830397512, 2e-9));
  CHECK(rows[0].gap == Approx(std::fabs(rows[0].exact - rows[0].poisson)));

  const std::vector<double> f1(5, 0.1);
  const std::uint64_t b50[] = {50};
  const auto tail = poisson_vs_exact_report(f1, 200, b50);
  CHECK(tail[0].exact == Approx(5.995167631e-9).epsilon(1e-8));
  CHECK(tail[0].poisson == Approx(2.401592276e-8).epsilon(1e-8));

  const std::vector<double> zero(5, 0.0);
  const std::uint64_t b0[] = {0};
  const auto z = poisson_vs_exact_report(zero, 200, b0);
  CHECK(z[0].exact == 1.0);
  CHECK(z[0].poisson == 1.0);

  const std::vector<double> big(5, 0.1);
  CHECK_THROWS_AS(poisson_vs_exact_report(big, 20001, b0), std::invalid_argument);
}

TEST_CASE("Poisson gap shrinks as failure rates shrink at fixed lambda") {
  double previous = 1.0;
  for (auto [f, t] : {std::pair{0.1, 20}, std::pair{0.01, 200}, std::pair{0.001, 2000}}) {
    const std::vector<double> v(5, f);
    const std::uint64_t b[] = {10};
    const double gap = poisson_vs_exact_report(v, t, b)[0].gap;
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(close(previous, 1.04363e-8, 1e-12));
}

TEST_CASE("regularized upper incomplete gamma") {
  CHECK(gamma_q(0.5, 0.1) == Approx(0.65472084601857702).epsilon(1e-13));
  CHECK(gamma_q(2.5, 1.3) == Approx(0.7613652678450139).epsilon(1e-13));
  CHECK(gamma_q(10, 30) == Approx(7.1217508628155771e-6).epsilon(1e-12));
  CHECK(gamma_q(51, 63.29) == Approx(0.049963392027564124).epsilon(1e-12));
  CHECK(gamma_q(3, 0.0001) == Approx(0.99999999999983335).epsilon(1e-14));
  CHECK(gamma_q(100, 90) == Approx(0.84177901081356983).epsilon(1e-12));
  CHECK(gamma_q(1, 0) == 1.0);
  CHECK_THROWS_AS(gamma_q(0, 1), std::invalid_argument);
  CHECK(chi2_quantile(0.95, 4) == Approx(9.4877290367811566).epsilon(1e-12));
}

TEST_CASE("Poisson CDF equals the chi-squared upper tail") {
  for (double lambda : {0.5, 1.0, 2.0, 5.0, 20.0, 63.29}) {
    for (std::uint64_t b = 0; b <= 60; ++b) {
      CHECK(close(poisson_cdf(lambda, b), chi2_sf(2 * lambda, 2.0 * b + 2), 1e-9));
    }
  }
}

TEST_CASE("upper confidence bound") {
  CHECK(close(lambda_upper(50, 0.05), 63.29, 0.01));
  CHECK(lambda_upper(50, 0.05) == Approx(63.2870740957472).epsilon(1e-10));
  CHECK(close(lambda_upper(0, 0.05), -std::log(0.05), 1e-9));
  CHECK(lambda_upper(1, 0.05) == Approx(4.74386451839058).epsilon(1e-10));
  CHECK(lambda_upper(10, 0.01) == Approx(20.1446802187969).epsilon(1e-10));
  double previous = 0.0;
  for (std::uint64_t b = 0; b <= 100; ++b) {
    const double chi = lambda_upper(b, 0.05, LambdaMethod::ChiSquared);
    const double bis = lambda_upper(b, 0.05, LambdaMethod::Bisection);
    CHECK(std::fabs(chi - bis) <= 1e-6 * chi);
    CHECK(chi > previous);
    CHECK(poisson_cdf(chi, b) <= 0.05 + 1e-12);
    previous = chi;
  }
  CHECK_THROWS_AS(lambda_upper(3, 0.0), std::invalid_argument);
}

TEST_CASE("hypothesis test") {
  const TestOutcome a = audit_hypothesis_test(50, 200, 5, 0.9);
  CHECK(a.decision == Decision::RejectH0);
  CHECK(a.lambda_u == Approx(63.287).epsilon(1e-4));
  CHECK(a.expected_failures == Approx(100.0));
  CHECK(audit_hypothesis_test(50, 200, 5, 0.95).decision == Decision::FailToRejectH0);
  CHECK(audit_hypothesis_test(0, 200, 5, 1.0).decision == Decision::FailToRejectH0);
  CHECK_THROWS_AS(audit_hypothesis_test(1001, 200, 5, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(audit_hypothesis_test(1, 0, 5, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(audit_hypothesis_test(1, 10, 5, 1.2), std::invalid_argument);
  CHECK(to_string(Decision::RejectH0) == "reject_h0");
}

TEST_CASE("transcript counts") {
  CHECK_THROWS_WITH_AS(transcript_to_counts({}), "empty transcript", std::invalid_argument);
  AuditTranscript t;
  std::uint64_t rejected = 0;
  for (std::size_t p = 1; p <= 5; ++p) {
    for (Challenge c = 0; c < 7; ++c) {
      const bool ok = (p * 7 + c) % 3 != 0;
      rejected += ok ? 0 : 1;
      t.push_back({p, c, {}, ok});
    }
  }
  const TranscriptCounts counts = transcript_to_counts(t);
  CHECK(counts.b == rejected);
  CHECK(counts.c == 7);
  CHECK(counts.rho == 5);
  t.pop_back();
  CHECK_THROWS_AS(transcript_to_counts(t), std::invalid_argument);
}
