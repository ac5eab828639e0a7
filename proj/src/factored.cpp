#include "gw/factored.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "gw/errors.hpp"
#include "gw/primes.hpp"

namespace gw {

namespace {

std::int64_t parse_positive_int(const std::string& text) {
  if (text.empty()) throw parse_error("empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw parse_error("invalid integer '" + text + "'");
  }
  errno = 0;
  char* end = nullptr;
  long long value = std::strtoll(text.c_str(), &end, 10);
  if (errno == ERANGE || end != text.c_str() + text.size()) {
    throw parse_error("invalid integer '" + text + "'");
  }
  if (value < 1) throw parse_error("integer must be positive: '" + text + "'");
  return value;
}

// result *= p^e with overflow detection; e >= 1.
void checked_multiply_power(std::int64_t& result, std::int64_t p, std::int64_t e) {
  for (std::int64_t i = 0; i < e; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / p) {
      throw out_of_range_error("rational does not fit in 64-bit integers");
    }
    result *= p;
  }
}

}  // namespace

void FactoredRational::strip_zeros() {
  for (auto it = exponents_.begin(); it != exponents_.end(); ) {
    if (it->second == 0) {
      it = exponents_.erase(it);
    } else {
      ++it;
    }
  }
}

FactoredRational FactoredRational::one() { return FactoredRational{}; }

FactoredRational FactoredRational::from_integer(std::int64_t n) {
  if (n < 1) throw out_of_range_error("from_integer requires n >= 1");
  FactoredRational r;
  for (const auto& [p, e] : PrimeTable::factor(n)) r.exponents_[p] = e;
  return r;
}

FactoredRational FactoredRational::from_ratio(std::int64_t numerator, std::int64_t denominator) {
  if (numerator < 1 || denominator < 1) {
    throw out_of_range_error("from_ratio requires positive numerator and denominator");
  }
  FactoredRational r = from_integer(numerator);
  for (const auto& [p, e] : PrimeTable::factor(denominator)) r.exponents_[p] -= e;
  r.strip_zeros();
  return r;
}

FactoredRational FactoredRational::from_exponents(std::map<std::int64_t, std::int64_t> exponents) {
  for (const auto& [p, e] : exponents) {
    if (!PrimeTable::is_prime(p)) {
      std::ostringstream msg;
      msg << "exponent key " << p << " is not prime";
      throw out_of_range_error(msg.str());
    }
  }
  FactoredRational r;
  r.exponents_ = std::move(exponents);
  r.strip_zeros();
  return r;
}

FactoredRational FactoredRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return from_integer(parse_positive_int(text));
  return from_ratio(parse_positive_int(text.substr(0, slash)),
                    parse_positive_int(text.substr(slash + 1)));
}

FactoredRational FactoredRational::self_power(std::int64_t n) {
  if (n < 1) throw out_of_range_error("self_power requires n >= 1");
  FactoredRational r;
  for (const auto& [p, e] : PrimeTable::factor(n)) r.exponents_[p] = n * e;
  return r;
}

std::int64_t FactoredRational::exponent(std::int64_t p) const {
  auto it = exponents_.find(p);
  return it == exponents_.end() ? 0 : it->second;
}

FactoredRational FactoredRational::operator*(const FactoredRational& rhs) const {
  FactoredRational r = *this;
  r *= rhs;
  return r;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& rhs) {
  for (const auto& [p, e] : rhs.exponents_) exponents_[p] += e;
  strip_zeros();
  return *this;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational r;
  for (const auto& [p, e] : exponents_) r.exponents_[p] = -e;
  return r;
}

FactoredRational FactoredRational::pow(std::int64_t k) const {
  FactoredRational r;
  if (k == 0) return r;
  for (const auto& [p, e] : exponents_) r.exponents_[p] = e * k;
  return r;
}

bool FactoredRational::is_pp_element() const {
  for (const auto& [p, e] : exponents_) {
    if (e % p != 0) return false;
  }
  return true;
}

FactoredRational FactoredRational::pp_root() const {
  FactoredRational r;
  for (const auto& [p, e] : exponents_) {
    if (e % p != 0) {
      std::ostringstream msg;
      msg << "exponent of " << p << " is " << e << ", not a multiple of " << p;
      throw invalid_pp_element(msg.str());
    }
    r.exponents_[p] = e / p;
  }
  return r;
}

std::pair<std::int64_t, std::int64_t> FactoredRational::as_ratio() const {
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (const auto& [p, e] : exponents_) {
    if (e > 0) {
      checked_multiply_power(num, p, e);
    } else {
      checked_multiply_power(den, p, -e);
    }
  }
  return {num, den};
}

std::string FactoredRational::str() const {
  auto [num, den] = as_ratio();
  std::ostringstream out;
  out << num;
  if (den != 1) out << '/' << den;
  return out.str();
}

std::string FactoredRational::factored_str() const {
  if (exponents_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : exponents_) {
    if (!first) out << " * ";
    first = false;
    out << p;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

double FactoredRational::log_value() const {
  double total = 0.0;
  for (const auto& [p, e] : exponents_) {
    total += static_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return total;
}

}  // namespace gw
