#include "gw/words.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "gw/errors.hpp"
#include "gw/primes.hpp"

namespace gw {

namespace {

void validate_indices(const std::vector<std::int64_t>& indices, const char* side) {
  for (std::int64_t v : indices) {
    if (v < 1 || v > GammaWord::kMaxIndex) {
      std::ostringstream msg;
      msg << side << " index " << v << " outside 1.." << GammaWord::kMaxIndex;
      throw out_of_range_error(msg.str());
    }
  }
}

// Parses "[a,a,...]" starting at pos (whitespace already stripped); advances
// pos past the closing bracket.
std::vector<std::int64_t> parse_list(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') throw parse_error("expected '[' in word");
  ++pos;
  std::vector<std::int64_t> values;
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
    return values;
  }
  while (true) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected index in word");
    if (pos - start > 7) throw parse_error("index too large in word");
    values.push_back(std::stoll(s.substr(start, pos - start)));
    if (pos >= s.size()) throw parse_error("unterminated list in word");
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == ']') {
      ++pos;
      return values;
    }
    throw parse_error("unexpected character in word");
  }
}

std::string format_list(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

GammaWord::GammaWord(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  validate_indices(upper_, "upper");
  validate_indices(lower_, "lower");
  std::sort(upper_.begin(), upper_.end(), std::greater<>());
  std::sort(lower_.begin(), lower_.end(), std::greater<>());
}

GammaWord GammaWord::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::size_t pos = 0;
  std::vector<std::int64_t> upper = parse_list(s, pos);
  if (pos >= s.size() || s[pos] != '/') throw parse_error("expected '/' in word");
  ++pos;
  std::vector<std::int64_t> lower = parse_list(s, pos);
  if (pos != s.size()) throw parse_error("trailing characters in word");
  for (std::int64_t v : upper) {
    if (v < 1) throw parse_error("word index must be >= 1");
  }
  for (std::int64_t v : lower) {
    if (v < 1) throw parse_error("word index must be >= 1");
  }
  try {
    return GammaWord(std::move(upper), std::move(lower));
  } catch (const out_of_range_error& e) {
    throw parse_error(e.what());
  }
}

std::string GammaWord::str() const {
  return format_list(upper_) + "/" + format_list(lower_);
}

GammaWord reduce(const GammaWord& w) {
  // Both sides are sorted descending, so a single merge pass cancels common
  // elements with multiplicity.
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> lower;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& u = w.upper();
  const auto& l = w.lower();
  while (i < u.size() && j < l.size()) {
    if (u[i] == l[j]) {
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
  return GammaWord(std::move(upper), std::move(lower));
}

GammaWord multiply(const GammaWord& w1, const GammaWord& w2) {
  std::vector<std::int64_t> upper = w1.upper();
  upper.insert(upper.end(), w2.upper().begin(), w2.upper().end());
  std::vector<std::int64_t> lower = w1.lower();
  lower.insert(lower.end(), w2.lower().begin(), w2.lower().end());
  return reduce(GammaWord(std::move(upper), std::move(lower)));
}

GammaWord invert(const GammaWord& w) {
  return GammaWord(w.lower(), w.upper());
}

PhiImage phi(const GammaWord& w) {
  PhiImage image;
  image.d = static_cast<std::int64_t>(w.upper().size()) -
            static_cast<std::int64_t>(w.lower().size());
  std::map<std::int64_t, std::int64_t> exponents;
  for (std::int64_t a : w.upper()) {
    image.l += a;
    for (const auto& [p, e] : PrimeTable::factor(a)) exponents[p] += a * e;
  }
  for (std::int64_t b : w.lower()) {
    image.l -= b;
    for (const auto& [p, e] : PrimeTable::factor(b)) exponents[p] -= b * e;
  }
  image.y = FactoredRational::from_exponents(std::move(exponents));
  return image;
}

bool is_in_H(const GammaWord& w) {
  PhiImage image = phi(w);
  return image.d == 0 && image.l == 0 && image.y.is_one();
}

LimitConstant limit_constant(const GammaWord& w) {
  if (!is_in_H(w)) {
    throw not_in_h("word does not converge to a nonzero constant: " + w.str());
  }
  LimitConstant limit;
  for (std::int64_t a : w.upper()) limit.csq *= FactoredRational::from_integer(a);
  for (std::int64_t b : w.lower()) limit.csq *= FactoredRational::from_integer(b).inverse();
  limit.value = std::exp(0.5 * limit.csq.log_value());
  return limit;
}

AsymptoticProfile asymptotic_profile(const GammaWord& w) {
  AsymptoticProfile profile;
  for (std::int64_t a : w.upper()) profile.csq *= FactoredRational::from_integer(a);
  for (std::int64_t b : w.lower()) profile.csq *= FactoredRational::from_integer(b).inverse();
  PhiImage image = phi(w);
  profile.half_pow = image.d;
  profile.lin_coef = image.l;
  profile.exp_base = image.y;
  return profile;
}

FactoredRational iso_psi(const GammaWord& w) {
  GammaWord r = reduce(w);
  FactoredRational result;
  for (std::int64_t a : r.upper()) {
    result *= FactoredRational::from_exponents({{PrimeTable::nth_prime(a), 1}});
  }
  for (std::int64_t b : r.lower()) {
    result *= FactoredRational::from_exponents({{PrimeTable::nth_prime(b), -1}});
  }
  return result;
}

namespace {

// Shifts every prime one index up (p_k to p_{k+1}) and installs n as the new
// exponent of 2, folding one integer into the rational.
FactoredRational index_shift_embed(std::int64_t n, const FactoredRational& q) {
  std::map<std::int64_t, std::int64_t> shifted;
  for (const auto& [p, e] : q.exponents()) {
    shifted[PrimeTable::nth_prime(PrimeTable::index_of_prime(p) + 1)] = e;
  }
  if (n != 0) shifted[2] = n;
  return FactoredRational::from_exponents(std::move(shifted));
}

}  // namespace

FactoredRational coset_fingerprint(const GammaWord& w) {
  PhiImage image = phi(w);
  return index_shift_embed(image.d, index_shift_embed(image.l, image.y.pp_root()));
}

GammaWord construct_preimage_int(std::int64_t d, std::int64_t l, const FactoredRational& y) {
  FactoredRational root = y.pp_root();  // throws unless y is a p^p product
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> lower;
  for (const auto& [p, m] : root.exponents()) {
    if (p > GammaWord::kMaxIndex) {
      std::ostringstream msg;
      msg << "prime " << p << " exceeds the index cap";
      throw out_of_range_error(msg.str());
    }
    auto& side = m > 0 ? upper : lower;
    for (std::int64_t i = 0; i < std::abs(m); ++i) side.push_back(p);
  }
  std::int64_t count_gap = d - (static_cast<std::int64_t>(upper.size()) -
                                static_cast<std::int64_t>(lower.size()));
  auto& pad_side = count_gap > 0 ? upper : lower;
  for (std::int64_t i = 0; i < std::abs(count_gap); ++i) pad_side.push_back(1);

  std::int64_t sum = 0;
  for (std::int64_t a : upper) sum += a;
  for (std::int64_t b : lower) sum -= b;
  std::int64_t steps = l - sum;
  // Each copy of [4,3,3]/[6,2,1] moves the index sum by one and nothing else.
  auto& gain_side = steps > 0 ? upper : lower;
  auto& give_side = steps > 0 ? lower : upper;
  for (std::int64_t i = 0; i < std::abs(steps); ++i) {
    gain_side.insert(gain_side.end(), {4, 3, 3});
    give_side.insert(give_side.end(), {6, 2, 1});
  }
  return reduce(GammaWord(std::move(upper), std::move(lower)));
}

}  // namespace gw
