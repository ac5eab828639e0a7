#include "gw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "gw/errors.hpp"
#include "gw/primes.hpp"

namespace gw {

double log_gamma(double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw out_of_range_error("log_gamma requires a positive argument");
  }
  // Gamma(x) = Gamma(x+1)/x lifts small arguments to where the series holds.
  double shift = 0.0;
  while (x < 10.0) {
    shift += std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli terms B_2k / (2k(2k-1) x^{2k-1}) for k = 1..6.
  const double series =
      inv * (1.0 / 12 +
             inv2 * (-1.0 / 360 +
                     inv2 * (1.0 / 1260 +
                             inv2 * (-1.0 / 1680 +
                                     inv2 * (1.0 / 1188 + inv2 * (-691.0 / 360360))))));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series -
         shift;
}

double eval_word_log(const GammaWord& w, double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw out_of_range_error("word evaluation requires x > 0");
  }
  double total = 0.0;
  for (std::int64_t a : w.upper()) total += log_gamma(static_cast<double>(a) * x + 1.0);
  for (std::int64_t b : w.lower()) total -= log_gamma(static_cast<double>(b) * x + 1.0);
  return total;
}

namespace {

constexpr std::int64_t kFactorialCap = 100000000;

// Calls fn(p) for every prime p <= limit; plain sieve, limit is capped well
// below anything that would strain memory.
template <typename F>
void for_each_prime_up_to(std::int64_t limit, F&& fn) {
  if (limit < 2) return;
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (!composite[static_cast<std::size_t>(p)]) fn(p);
  }
}

}  // namespace

double exact_log_word(const GammaWord& w, std::int64_t n) {
  if (n < 1) throw out_of_range_error("exact evaluation requires n >= 1");
  // Net weight per factorial argument; cancelling equal arguments up front.
  std::map<std::int64_t, std::int64_t> weights;
  for (std::int64_t a : w.upper()) weights[a * n] += 1;
  for (std::int64_t b : w.lower()) weights[b * n] -= 1;
  std::int64_t max_m = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->second == 0) {
      it = weights.erase(it);
      continue;
    }
    if (it->first > kFactorialCap) {
      std::ostringstream msg;
      msg << "factorial argument " << it->first << " exceeds cap " << kFactorialCap;
      throw out_of_range_error(msg.str());
    }
    max_m = std::max(max_m, it->first);
    ++it;
  }
  double total = 0.0;
  double carry = 0.0;
  for_each_prime_up_to(max_m, [&weights, &total, &carry](std::int64_t p) {
    std::int64_t exponent = 0;
    for (const auto& [m, weight] : weights) {
      if (m >= p) exponent += weight * factorial_prime_exponent(m, p);
    }
    if (exponent == 0) return;
    double term = static_cast<double>(exponent) * std::log(static_cast<double>(p)) - carry;
    double next = total + term;
    carry = (next - total) - term;
    total = next;
  });
  return total;
}

double log_profile(const AsymptoticProfile& profile, double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw out_of_range_error("profile evaluation requires x > 0");
  }
  return 0.5 * profile.csq.log_value() +
         0.5 * static_cast<double>(profile.half_pow) * std::log(2.0 * std::numbers::pi * x) +
         static_cast<double>(profile.lin_coef) * x * (std::log(x) - 1.0) +
         x * profile.exp_base.log_value();
}

ConvergenceReport convergence_report(const GammaWord& w, const std::vector<std::int64_t>& xs) {
  LimitConstant limit = limit_constant(w);  // throws not_in_h on divergent words
  if (xs.empty()) throw out_of_range_error("convergence report needs at least one point");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || (i > 0 && xs[i] <= xs[i - 1])) {
      throw out_of_range_error("convergence points must be positive and strictly increasing");
    }
  }
  ConvergenceReport report;
  report.word = w;
  report.limit = limit.value;
  const double log_limit = 0.5 * limit.csq.log_value();
  for (std::int64_t x : xs) {
    ConvergenceRow row;
    row.x = x;
    row.log_value = exact_log_word(w, x);
    row.deviation = std::expm1(row.log_value - log_limit);
    report.rows.push_back(row);
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (std::abs(report.rows[i].deviation) >= std::abs(report.rows[i - 1].deviation)) {
      report.strictly_decreasing = false;
      break;
    }
  }
  return report;
}

}  // namespace gw
