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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpor/mpor.hpp"

namespace mpor {

// Pr[X <= b] for X ~ B(t, p). Throws std::invalid_argument unless 0 <= p <= 1 and b <= t.
double binom_cdf(std::uint64_t t, double p, std::uint64_t b);

// Pr[B <= b] where B sums t independent Bernoulli(f_i) trials for every i.
// Dynamic programme over the count distribution, truncated at b.
double poisson_binomial_cdf(std::span<const double> f, std::uint64_t t, std::uint64_t b);

// Pr[Y <= b] for Y ~ Poisson(lambda). Throws if lambda < 0.
double poisson_cdf(double lambda, std::uint64_t b);

struct PoissonComparisonRow {
  std::uint64_t b = 0;
  double exact = 0;
  double poisson = 0;  // lambda = t * sum f_i
  double gap = 0;      // |exact - poisson|
};

// Throws if rho * t > 10^5.
std::vector<PoissonComparisonRow> poisson_vs_exact_report(std::span<const double> f, std::uint64_t t,
                                                          std::span<const std::uint64_t> b_values);

// Regularized upper incomplete gamma Q(a, x), series for x < a + 1 and a
// Lentz continued fraction otherwise.
double gamma_q(double a, double x);
// Pr[chi^2_k > x].
double chi2_sf(double x, double k);
// The x with Pr[chi^2_k <= x] = p, by bisection on chi2_sf.
double chi2_quantile(double p, double k);

enum class LambdaMethod { Bisection, ChiSquared };

// inf { lambda : poisson_cdf(lambda, b) < alpha }, either by bisection on the
// Poisson CDF or as half the (1 - alpha) quantile of chi^2 with 2b + 2 degrees.
double lambda_upper(std::uint64_t b, double alpha, LambdaMethod method = LambdaMethod::ChiSquared);

enum class Decision { RejectH0, FailToRejectH0 };
std::string to_string(Decision d);

struct TestOutcome {
  std::uint64_t b = 0;
  double alpha = 0.05;
  double lambda_u = 0;         // interval is [0, lambda_u)
  double expected_failures = 0;  // (1 - eta) * rho * c
  Decision decision = Decision::FailToRejectH0;
};

// H0: mean success below eta. Rejects iff (1 - eta) * rho * c >= lambda_upper(b, alpha).
TestOutcome audit_hypothesis_test(std::uint64_t b, std::uint64_t c, std::uint64_t rho, double eta,
                                  double alpha = 0.05);

struct TranscriptCounts {
  std::uint64_t b = 0;    // rejected responses
  std::uint64_t c = 0;    // challenges per prover
  std::uint64_t rho = 0;  // provers in the transcript
};

// Throws "empty transcript" or, when provers were audited unequally often,
// "unequal challenge counts per prover".
TranscriptCounts transcript_to_counts(const AuditTranscript& transcript);

}  // namespace mpor
