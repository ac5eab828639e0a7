#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gw/factored.hpp"

namespace gw {

// Formal quotient of gamma factors: prod Gamma(a_k x + 1) over prod
// Gamma(b_k x + 1). upper holds the a_k, lower the b_k, each a multiset kept
// sorted weakly decreasing. Indices are 1..1000000.
class GammaWord {
 public:
  static constexpr std::int64_t kMaxIndex = 1000000;

  GammaWord() = default;  // identity element
  GammaWord(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower);

  // Grammar: "[a,a,...]/[b,b,...]", whitespace-insensitive, e.g.
  // "[9,8,1]/[12,3,3]". Result is canonical (sorted) but not reduced.
  static GammaWord parse(const std::string& text);

  const std::vector<std::int64_t>& upper() const { return upper_; }
  const std::vector<std::int64_t>& lower() const { return lower_; }
  bool empty() const { return upper_.empty() && lower_.empty(); }

  std::string str() const;

  // Multiset equality of both sides; group-level equality is equality of
  // reduced forms.
  bool operator==(const GammaWord& rhs) const {
    return upper_ == rhs.upper_ && lower_ == rhs.lower_;
  }
  bool operator!=(const GammaWord& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::int64_t> upper_;
  std::vector<std::int64_t> lower_;
};

// Image of the triple homomorphism: d is the factor-count difference s - t,
// l the index-sum difference, y the product a^a / b^b in factored form.
struct PhiImage {
  std::int64_t d = 0;
  std::int64_t l = 0;
  FactoredRational y;

  bool operator==(const PhiImage& rhs) const {
    return d == rhs.d && l == rhs.l && y == rhs.y;
  }
  bool operator!=(const PhiImage& rhs) const { return !(*this == rhs); }
};

// The four factors of the growth law
//   g(x) ~ sqrt(csq) * (2 pi x)^(half_pow/2) * (x/e)^(x*lin_coef) * exp_base^x.
struct AsymptoticProfile {
  FactoredRational csq;       // product of upper over product of lower
  std::int64_t half_pow = 0;  // s - t
  std::int64_t lin_coef = 0;  // sum upper - sum lower
  FactoredRational exp_base;  // same value as phi's y
};

struct LimitConstant {
  FactoredRational csq;  // exact square of the limit
  double value = 1.0;    // sqrt(csq)
};

// Cancels common indices of upper and lower; idempotent.
GammaWord reduce(const GammaWord& w);

GammaWord multiply(const GammaWord& w1, const GammaWord& w2);
GammaWord invert(const GammaWord& w);

PhiImage phi(const GammaWord& w);

// Kernel test: the word tends to a nonzero constant iff phi(w) = (0, 0, 1).
bool is_in_H(const GammaWord& w);

// Limit of a kernel word: sqrt(prod upper / prod lower). Throws not_in_h
// when the word does not converge to a nonzero constant.
LimitConstant limit_constant(const GammaWord& w);

AsymptoticProfile asymptotic_profile(const GammaWord& w);

// psi sends index k to the k-th prime: prod p_{a_i} / prod p_{b_j}, computed
// on the reduced form. Multiplicative; 1 exactly when reduce(w) is empty.
FactoredRational iso_psi(const GammaWord& w);

// Rational invariant of the coset of w modulo the kernel: 1 exactly on
// kernel words, multiplicative, and equal on w, w' iff w * w'^-1 is in the
// kernel. Built from phi by dividing each exponent of y by its prime and
// then twice shifting prime indices to make room for l and d.
FactoredRational coset_fingerprint(const GammaWord& w);

// Builds a word w with phi(w) = (d, l, y) exactly: |e_p|/p copies of index p
// on the side matching the sign of e_p, 1-index padding to fix d, then
// copies of [4,3,3]/[6,2,1] (whose phi is (0,1,1)) to fix l. Output reduced;
// not length-minimal. Throws invalid_pp_element unless every exponent e_p of
// y is divisible by p.
GammaWord construct_preimage_int(std::int64_t d, std::int64_t l, const FactoredRational& y);

}  // namespace gw
