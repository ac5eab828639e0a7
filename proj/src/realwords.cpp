#include "gw/realwords.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "gw/errors.hpp"

namespace gw {

namespace {

constexpr double kEulerInv = 0.36787944117144233;  // 1/e

double x_log_x(double x) { return x * std::log(x); }

// Kahan-compensated sum of f(v) over a vector, subtracting for the lower side.
template <typename F>
void accumulate(const std::vector<double>& values, double sign, F f, double& sum, double& carry) {
  for (double v : values) {
    double term = sign * f(v) - carry;
    double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
}

}  // namespace

RealGammaWord::RealGammaWord(std::vector<double> upper, std::vector<double> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  for (const auto* side : {&upper_, &lower_}) {
    for (double v : *side) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw out_of_range_error("real word indices must be positive finite reals");
      }
    }
  }
  std::sort(upper_.begin(), upper_.end(), std::greater<>());
  std::sort(lower_.begin(), lower_.end(), std::greater<>());
}

std::string RealGammaWord::str() const {
  std::ostringstream out;
  out.precision(12);
  auto emit = [&out](const std::vector<double>& values) {
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ',';
      out << values[i];
    }
    out << ']';
  };
  emit(upper_);
  out << '/';
  emit(lower_);
  return out.str();
}

RealGammaWord reduce(const RealGammaWord& w) {
  std::vector<double> upper;
  std::vector<double> lower;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& u = w.upper();
  const auto& l = w.lower();
  while (i < u.size() && j < l.size()) {
    if (std::abs(u[i] - l[j]) <= RealGammaWord::kTol) {
      ++i;
      ++j;
    } else if (u[i] > l[j]) {
      upper.push_back(u[i++]);
    } else {
      lower.push_back(l[j++]);
    }
  }
  upper.insert(upper.end(), u.begin() + i, u.end());
  lower.insert(lower.end(), l.begin() + j, l.end());
  return RealGammaWord(std::move(upper), std::move(lower));
}

RealGammaWord multiply(const RealGammaWord& w1, const RealGammaWord& w2) {
  std::vector<double> upper = w1.upper();
  upper.insert(upper.end(), w2.upper().begin(), w2.upper().end());
  std::vector<double> lower = w1.lower();
  lower.insert(lower.end(), w2.lower().begin(), w2.lower().end());
  return reduce(RealGammaWord(std::move(upper), std::move(lower)));
}

RealGammaWord invert(const RealGammaWord& w) {
  return RealGammaWord(w.lower(), w.upper());
}

XxRootPair solve_xx(double eta) {
  const double eta_min = std::exp(-kEulerInv);  // minimum of x^x on (0, 1)
  if (!std::isfinite(eta) || !(eta > eta_min + 1e-12) || !(eta < 1.0 - 1e-12)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "eta " << eta << " outside the open interval (" << eta_min << ", 1)";
    throw out_of_range_error(msg.str());
  }
  const double target = std::log(eta);

  // x ln x is strictly decreasing on (0, 1/e] and increasing on [1/e, 1].
  auto bisect = [target](double lo, double hi, bool decreasing) {
    for (int iter = 0; iter < 200; ++iter) {
      double mid = 0.5 * (lo + hi);
      bool above = x_log_x(mid) > target;
      if (above == decreasing) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  XxRootPair pair;
  pair.eta = eta;
  pair.theta1 = bisect(1e-300, kEulerInv, true);
  pair.theta2 = bisect(kEulerInv, 1.0, false);
  return pair;
}

RealPhiImage phi_real(const RealGammaWord& w) {
  RealPhiImage image;
  image.d = static_cast<std::int64_t>(w.upper().size()) -
            static_cast<std::int64_t>(w.lower().size());
  double carry_sum = 0.0;
  accumulate(w.upper(), 1.0, [](double v) { return v; }, image.sum_diff, carry_sum);
  accumulate(w.lower(), -1.0, [](double v) { return v; }, image.sum_diff, carry_sum);
  double carry_log = 0.0;
  accumulate(w.upper(), 1.0, x_log_x, image.log_power, carry_log);
  accumulate(w.lower(), -1.0, x_log_x, image.log_power, carry_log);
  image.log_only = std::abs(image.log_power) > 700.0;
  image.power = image.log_only ? std::numeric_limits<double>::quiet_NaN()
                               : std::exp(image.log_power);
  return image;
}

namespace {

// Inverse of t ln t on the increasing branch t >= 1; target >= 0.
double solve_t_log_t(double target) {
  if (target <= 0.0) return 1.0;
  double hi = 2.0;
  while (x_log_x(hi) < target) hi *= 2.0;
  double lo = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    (x_log_x(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Root pair whose gap theta2 - theta1 equals `gap`; the gap grows
// continuously from 0 to 1 as eta sweeps the admissible interval.
XxRootPair solve_gap(double gap) {
  const double eta_min = std::exp(-kEulerInv);
  double lo = eta_min + 2e-12;
  double hi = 1.0 - 2e-12;
  for (int iter = 0; iter < 120; ++iter) {
    double mid = 0.5 * (lo + hi);
    XxRootPair pair = solve_xx(mid);
    (pair.theta2 - pair.theta1 < gap ? lo : hi) = mid;
  }
  return solve_xx(0.5 * (lo + hi));
}

}  // namespace

RealGammaWord construct_preimage_real(std::int64_t d, double x, double y) {
  if (!std::isfinite(y) || !(y > 0.0)) {
    throw out_of_range_error("preimage target y must be a positive real");
  }
  if (!std::isfinite(x) || std::abs(x) > 1e6) {
    throw out_of_range_error("preimage target x must satisfy |x| <= 1e6");
  }

  std::vector<double> upper;
  std::vector<double> lower;
  double log_y = std::log(y);
  if (log_y != 0.0) {
    // One index t >= 1 with t^t = y (upper side) or t^t = 1/y (lower side).
    (log_y > 0.0 ? upper : lower).push_back(solve_t_log_t(std::abs(log_y)));
  }
  std::int64_t count_gap = d - (static_cast<std::int64_t>(upper.size()) -
                                static_cast<std::int64_t>(lower.size()));
  auto& pad_side = count_gap > 0 ? upper : lower;
  for (std::int64_t i = 0; i < std::abs(count_gap); ++i) pad_side.push_back(1.0);

  double sum = 0.0;
  for (double v : upper) sum += v;
  for (double v : lower) sum -= v;
  double delta = x - sum;

  auto push_gap_factors = [&upper, &lower](double gap, bool forward, std::int64_t copies) {
    XxRootPair pair = solve_gap(gap);
    auto& gain = forward ? upper : lower;
    auto& give = forward ? lower : upper;
    for (std::int64_t i = 0; i < copies; ++i) {
      gain.push_back(pair.theta2);
      give.push_back(pair.theta1);
    }
  };

  if (std::abs(delta) > 1e-12) {
    bool forward = delta > 0.0;
    if (std::abs(delta) < 0.01) {
      // Too small for a single well-conditioned root gap: overshoot by a
      // half-unit factor and walk back with another.
      push_gap_factors(std::abs(delta) + 0.5, forward, 1);
      push_gap_factors(0.5, !forward, 1);
    } else {
      std::int64_t steps = static_cast<std::int64_t>(std::ceil(std::abs(delta) / 0.9));
      push_gap_factors(std::abs(delta) / static_cast<double>(steps), forward, steps);
    }
  }
  return RealGammaWord(std::move(upper), std::move(lower));
}

}  // namespace gw
