#pragma once

#include <cstdint>
#include <vector>

#include "gw/words.hpp"

namespace gw {

// Stirling series with Bernoulli corrections through 1/x^11, after shifting
// the argument above 10. Relative error stays below 1e-12 on [0.5, 1e7].
double log_gamma(double x);

// log of the word's value at x: sum log_gamma(a x + 1) - sum log_gamma(b x + 1).
double eval_word_log(const GammaWord& w, double x);

// Exact evaluation at integer argument n: the word's value is the factorial
// ratio prod (a n)! / prod (b n)!, factored by counting prime powers in each
// factorial, so only the final log rounds. All a*n, b*n capped at 1e8.
double exact_log_word(const GammaWord& w, std::int64_t n);

// log of the profile's right-hand side at x.
double log_profile(const AsymptoticProfile& profile, double x);

struct ConvergenceRow {
  std::int64_t x = 0;
  double log_value = 0.0;
  double deviation = 0.0;  // value/limit - 1
};

struct ConvergenceReport {
  GammaWord word;
  double limit = 1.0;
  std::vector<ConvergenceRow> rows;
  bool strictly_decreasing = false;  // |deviation| strictly falls along rows
};

// Exact deviations of a kernel word from its limit at each x. xs must be
// nonempty and strictly increasing; the word must be in the kernel.
ConvergenceReport convergence_report(const GammaWord& w, const std::vector<std::int64_t>& xs);

}  // namespace gw
