#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gw {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  static constexpr std::int64_t kMaxPart = 1000000000;

  Partition() = default;
  explicit Partition(std::vector<std::int64_t> parts);

  // "12,3,3", whitespace-insensitive.
  static Partition parse(const std::string& text);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
  std::int64_t size() const;  // sum of parts

  std::string str() const;

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
  bool operator!=(const Partition& rhs) const { return !(*this == rhs); }
  // Lexicographic on the descending part sequences.
  bool operator<(const Partition& rhs) const;

 private:
  std::vector<std::int64_t> parts_;
};

// Exact prime factorization of the product of parts raised to themselves:
// the exponent of p is sum over parts v of v * v_p(v).
struct PowerFingerprint {
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;  // (prime, exponent), primes ascending

  bool operator==(const PowerFingerprint& rhs) const { return entries == rhs.entries; }
  bool operator!=(const PowerFingerprint& rhs) const { return !(*this == rhs); }

  std::string str() const;  // "2^24 * 3^18", "1" when empty
};

PowerFingerprint power_fingerprint(const Partition& p);

// The three-condition test: equal lengths, equal sizes, equal part-power
// products (compared in factored form).
bool is_solution(const Partition& lambda, const Partition& mu);

// Verified pair satisfying all three conditions, stored with lambda >= mu
// lexicographically. Construction throws invalid_solution otherwise.
class SolutionPair {
 public:
  SolutionPair(Partition lambda, Partition mu);

  // "12,3,3 ; 9,8,1".
  static SolutionPair parse(const std::string& text);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  std::int64_t length() const { return lambda_.length(); }
  std::int64_t size() const { return lambda_.size(); }

  std::string str() const;

  bool operator==(const SolutionPair& rhs) const {
    return lambda_ == rhs.lambda_ && mu_ == rhs.mu_;
  }
  bool operator!=(const SolutionPair& rhs) const { return !(*this == rhs); }
  bool operator<(const SolutionPair& rhs) const;

 private:
  Partition lambda_;
  Partition mu_;
};

// Multiplies every part by k; the result is again a solution.
SolutionPair scale(const SolutionPair& s, std::int64_t k);

// Multiset union on both sides; the result is a solution decomposable into
// the two operands.
SolutionPair oplus(const SolutionPair& s1, const SolutionPair& s2);

// gcd of all parts across both partitions when it is >= 2 (the pair is then
// that multiple of a smaller solution), otherwise nullopt.
std::optional<std::int64_t> is_multiple(const SolutionPair& s);

// Nonempty proper sub-solution: sigma from lambda's parts, tau from mu's,
// themselves a solution; the complements then form one too.
struct DecompositionWitness {
  Partition sigma;
  Partition tau;
};

inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 26;

// Finds a sub-solution witness or proves none exists. Candidate sigmas are
// generated as weakly decreasing sequences in ascending lexicographic order
// (prefixes before extensions), pruned against the reachable (length, sum)
// set of mu's submultisets; tau is the first exact match in the same order,
// so the returned witness is deterministic and lexicographically least.
// Throws budget_exhausted when the node budget runs out; the default budget
// handles total length (lambda plus mu) up to 24 exhaustively.
std::optional<DecompositionWitness> is_decomposable(const SolutionPair& s,
                                                    std::int64_t budget = kDefaultBudget);

enum class PrimitivityStatus { Trivial, Multiple, Decomposable, Primitive, Unknown };

struct PrimitivityVerdict {
  PrimitivityStatus status = PrimitivityStatus::Unknown;
  std::int64_t multiple_k = 0;                    // set when status == Multiple
  std::optional<DecompositionWitness> witness;    // set when status == Decomposable
};

// Classification order: trivial, then multiple, then a shared-part shortcut
// (a common part x yields the witness ((x);(x))), then the full
// decomposability search; budget exhaustion reports Unknown, never a guess.
PrimitivityVerdict is_primitive(const SolutionPair& s, std::int64_t budget = kDefaultBudget);

struct SearchOptions {
  std::int64_t max_size = 0;
  std::int64_t max_length = 0;
  bool primitive_only = false;
  int threads = 0;  // 0: GAMMAWORD_THREADS env var, else hardware concurrency
  std::int64_t budget = kDefaultBudget;
};

struct SearchEntry {
  SolutionPair pair;
  std::optional<PrimitivityVerdict> verdict;  // present when classification ran
};

struct SearchResult {
  std::vector<SearchEntry> entries;
  bool any_unknown = false;
};

// Enumerates, for every (size, length) cell in range, all partitions of that
// shape, buckets them by fingerprint, and pairs up each bucket. With
// primitive_only, pairs are classified and only Primitive (plus flagged
// Unknown) entries are kept. Output sorted by (size, length, lambda, mu);
// identical across thread counts. max_size capped at 10^4.
SearchResult search(const SearchOptions& options);

// Length-3 sweep: all nontrivial solutions (a>=b>=c) with size <= max_size,
// via additive 64-bit fingerprint hashing per size with exact verification
// of hash matches. Same cap and determinism guarantees as search.
SearchResult search_length3(std::int64_t max_size, int threads = 0);

// The power-of-two family: lambda = (2^n, 2^{n-2}, 2^{n-2}, 2 x (3*2^{n-2})
// copies), mu = (2^{n-1} x 3 copies, 4 x 2^{n-2} copies, 1 x 2^{n-1}
// copies); length 3*2^{n-2}+3, size 3*2^n, both part-power products equal to
// 2^(2^{n-1}(3n+1)). Requires 3 <= n <= 20 (n = 2 degenerates to a trivial
// pair; larger n would materialize oversized partitions).
SolutionPair family_pair(std::int64_t n);

// Multiplicity profile of a family sub-solution: a, b, c count lambda's
// parts 2^n, 2^{n-2}, 2; d, e, f count mu's parts 2^{n-1}, 4, 1.
struct FamilyProfile {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  bool operator==(const FamilyProfile& rhs) const {
    return a == rhs.a && b == rhs.b && c == rhs.c && d == rhs.d && e == rhs.e && f == rhs.f;
  }
};

// Solves the three family decomposition equations over (a <= 1, b <= 2,
// d <= 3) with (c, e, f) obtained by exact integer elimination; returns the
// first nontrivial, non-full, in-bounds profile in (a, b, d) lexicographic
// order, or nullopt when the family pair admits no such sub-solution.
// Requires 3 <= n <= 45 (64-bit range).
std::optional<FamilyProfile> family_decomposition_check(std::int64_t n);

// The two blocks (8,2^8; 4^5,1^4) and (32,8,2^16; 16^3,4^3,1^12) whose
// oplus is family_pair(5).
std::pair<SolutionPair, SolutionPair> n5_decomposition();

}  // namespace gw
