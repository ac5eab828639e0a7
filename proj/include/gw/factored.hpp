#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace gw {

// Positive rational kept in fully factored form: a map from prime to nonzero
// (possibly negative) exponent. Arithmetic never materializes the numerator
// or denominator, so values like 45^45/28^28 stay cheap and exact.
class FactoredRational {
 public:
  FactoredRational() = default;  // the rational 1

  static FactoredRational one();
  static FactoredRational from_integer(std::int64_t n);
  static FactoredRational from_ratio(std::int64_t numerator, std::int64_t denominator);
  // Keys must be prime; zero exponents are dropped.
  static FactoredRational from_exponents(std::map<std::int64_t, std::int64_t> exponents);
  // Accepts "n" or "n/d" with positive integers.
  static FactoredRational parse(const std::string& text);

  // n^n for n >= 1, i.e. exponent n * v_p(n) at each prime p dividing n.
  static FactoredRational self_power(std::int64_t n);

  bool is_one() const { return exponents_.empty(); }
  std::int64_t exponent(std::int64_t p) const;
  const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }

  FactoredRational operator*(const FactoredRational& rhs) const;
  FactoredRational& operator*=(const FactoredRational& rhs);
  FactoredRational inverse() const;
  FactoredRational pow(std::int64_t k) const;

  bool operator==(const FactoredRational& rhs) const { return exponents_ == rhs.exponents_; }
  bool operator!=(const FactoredRational& rhs) const { return !(*this == rhs); }

  // True when every prime p in the support has p dividing its exponent,
  // i.e. the value lies in the subgroup generated by the p^p.
  bool is_pp_element() const;

  // Divides each exponent by its prime: sends p^p to p. Throws
  // invalid_pp_element unless is_pp_element().
  FactoredRational pp_root() const;

  // (numerator, denominator) in lowest terms. Throws out_of_range_error when
  // either side overflows a signed 64-bit integer.
  std::pair<std::int64_t, std::int64_t> as_ratio() const;

  // "874/925" when as_ratio fits, with "/1" omitted for integers.
  std::string str() const;

  // Product of prime powers like "2^3 * 3^-1 * 7^2"; "1" when empty.
  std::string factored_str() const;

  // Natural log, as sum of exponent * log(prime).
  double log_value() const;

 private:
  void strip_zeros();

  std::map<std::int64_t, std::int64_t> exponents_;
};

}  // namespace gw
