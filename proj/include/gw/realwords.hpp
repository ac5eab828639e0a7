#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gw {

// Gamma word with positive real indices. Same shape as GammaWord but the
// multisets hold doubles and reduction cancels indices equal within kTol.
class RealGammaWord {
 public:
  static constexpr double kTol = 1e-9;

  RealGammaWord() = default;
  RealGammaWord(std::vector<double> upper, std::vector<double> lower);

  const std::vector<double>& upper() const { return upper_; }
  const std::vector<double>& lower() const { return lower_; }
  bool empty() const { return upper_.empty() && lower_.empty(); }

  std::string str() const;

 private:
  std::vector<double> upper_;
  std::vector<double> lower_;
};

RealGammaWord reduce(const RealGammaWord& w);
RealGammaWord multiply(const RealGammaWord& w1, const RealGammaWord& w2);
RealGammaWord invert(const RealGammaWord& w);

// Both roots of x^x = eta in (0, 1), bracketing 1/e.
struct XxRootPair {
  double eta = 0.0;
  double theta1 = 0.0;  // < 1/e
  double theta2 = 0.0;  // > 1/e
};

// Solves x^x = eta for eta strictly inside (e^{-1/e}, 1), margin 1e-12 on
// each side; bisection on x ln x. Root residuals stay below 1e-12. Throws
// out_of_range_error outside the interval (the double root included).
XxRootPair solve_xx(double eta);

// Extension of phi to real indices. The third component is computed in log
// space; when its log exceeds 700 in absolute value only the log is usable
// and log_only is set (power is NaN).
struct RealPhiImage {
  std::int64_t d = 0;
  double sum_diff = 0.0;
  double log_power = 0.0;
  bool log_only = false;
  double power = 1.0;
};

RealPhiImage phi_real(const RealGammaWord& w);

// Builds a real word w with phi_real(w) = (d, x, y) up to (exact, 1e-9,
// relative 1e-9): one real index on the branch t >= 1 of t^t = y (or 1/y),
// 1-index padding for d, then pairs [theta2]/[theta1] of x^x = eta root
// words, each moving the sum by theta2 - theta1 < 1, to land on x. The
// residual is split into equal steps below 0.9 so a single eta bisection is
// reused for every step. Requires y > 0 and |x| <= 1e6.
RealGammaWord construct_preimage_real(std::int64_t d, double x, double y);

}  // namespace gw
