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

#include "mpor/audit_stats.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace mpor {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

constexpr int kMaxIterations = 10000;
constexpr double kEps = 1e-16;

double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Smallest x in [0, inf) with decreasing g(x) < target, to machine precision.
template <class F>
double bisect_decreasing(F g, double target) {
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) >= target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("bisection failed to bracket");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) >= target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

double binom_cdf(std::uint64_t t, double p, std::uint64_t b) {
  check_probability(p, "p");
  if (b > t) throw std::invalid_argument("b must not exceed t");
  if (b == t || p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double lt = std::lgamma(static_cast<double>(t) + 1);
  double acc = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i <= b; ++i) {
    const double di = static_cast<double>(i);
    const double term = lt - std::lgamma(di + 1) - std::lgamma(static_cast<double>(t - i) + 1) + di * lp +
                        static_cast<double>(t - i) * lq;
    acc = log_sum_exp(acc, term);
  }
  return std::min(1.0, std::exp(acc));
}

double poisson_binomial_cdf(std::span<const double> f, std::uint64_t t, std::uint64_t b) {
  for (double fi : f) check_probability(fi, "failure probability");
  // dist[j] = Pr[count = j] for j <= b; mass above b is dropped.
  std::vector<double> dist(b + 1, 0.0);
  dist[0] = 1.0;
  std::uint64_t trials = 0;
  for (double fi : f) {
    for (std::uint64_t r = 0; r < t; ++r) {
      ++trials;
      const std::uint64_t top = std::min<std::uint64_t>(b, trials);
      for (std::uint64_t j = top; j > 0; --j) dist[j] = dist[j] * (1.0 - fi) + dist[j - 1] * fi;
      dist[0] *= 1.0 - fi;
    }
  }
  double total = 0.0;
  for (double v : dist) total += v;
  return std::min(1.0, total);
}

double poisson_cdf(double lambda, std::uint64_t b) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
  if (lambda == 0.0) return 1.0;
  const double ll = std::log(lambda);
  double acc = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i <= b; ++i) {
    const double di = static_cast<double>(i);
    acc = log_sum_exp(acc, -lambda + di * ll - std::lgamma(di + 1));
  }
  return std::min(1.0, std::exp(acc));
}

std::vector<PoissonComparisonRow> poisson_vs_exact_report(std::span<const double> f, std::uint64_t t,
                                                          std::span<const std::uint64_t> b_values) {
  if (static_cast<double>(f.size()) * static_cast<double>(t) > 1e5) {
    throw std::invalid_argument("rho * t exceeds 10^5");
  }
  double sum = 0.0;
  for (double fi : f) sum += fi;
  const double lambda = static_cast<double>(t) * sum;
  std::vector<PoissonComparisonRow> rows;
  for (auto b : b_values) {
    PoissonComparisonRow row{b, poisson_binomial_cdf(f, t, b), poisson_cdf(lambda, b), 0};
    row.gap = std::fabs(row.exact - row.poisson);
    rows.push_back(row);
  }
  return rows;
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw std::invalid_argument("gamma_q needs a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi2_sf(double x, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
  if (x <= 0.0) return 1.0;
  return gamma_q(0.5 * k, 0.5 * x);
}

double chi2_quantile(double p, double k) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile level must lie in (0, 1)");
  return bisect_decreasing([k](double x) { return chi2_sf(x, k); }, 1.0 - p);
}

double lambda_upper(std::uint64_t b, double alpha, LambdaMethod method) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (method == LambdaMethod::Bisection) {
    return bisect_decreasing([b](double lambda) { return poisson_cdf(lambda, b); }, alpha);
  }
  return 0.5 * chi2_quantile(1.0 - alpha, 2.0 * static_cast<double>(b) + 2.0);
}

std::string to_string(Decision d) { return d == Decision::RejectH0 ? "reject_h0" : "fail_to_reject_h0"; }

TestOutcome audit_hypothesis_test(std::uint64_t b, std::uint64_t c, std::uint64_t rho, double eta, double alpha) {
  if (c == 0 || rho == 0) throw std::invalid_argument("need at least one prover and one challenge");
  if (b > c * rho) throw std::invalid_argument("failures exceed rho * c");
  check_probability(eta, "eta");
  TestOutcome out;
  out.b = b;
  out.alpha = alpha;
  out.lambda_u = lambda_upper(b, alpha);
  out.expected_failures = (1.0 - eta) * static_cast<double>(rho) * static_cast<double>(c);
  out.decision = out.expected_failures >= out.lambda_u ? Decision::RejectH0 : Decision::FailToRejectH0;
  return out;
}

TranscriptCounts transcript_to_counts(const AuditTranscript& transcript) {
  if (transcript.empty()) throw std::invalid_argument("empty transcript");
  std::map<std::size_t, std::uint64_t> per_prover;
  TranscriptCounts out;
  for (const auto& rec : transcript) {
    ++per_prover[rec.prover];
    if (!rec.accepted) ++out.b;
  }
  out.c = per_prover.begin()->second;
  for (const auto& [prover, count] : per_prover) {
    if (count != out.c) throw std::invalid_argument("unequal challenge counts per prover");
  }
  out.rho = per_prover.size();
  return out;
}

}  // namespace mpor
