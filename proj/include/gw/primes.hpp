#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace gw {

// Shared prime table, grown lazily and safe for concurrent readers.
//
// Readers take an immutable snapshot of the current prime list; growing the
// table swaps in a longer list without touching snapshots already handed out.
class PrimeTable {
 public:
  // k-th prime, 1-indexed: nth_prime(1) == 2.
  static std::int64_t nth_prime(std::int64_t k);

  // Inverse of nth_prime. Throws out_of_range_error if p is not prime.
  static std::int64_t index_of_prime(std::int64_t p);

  // Prime factorization of n >= 1, as prime -> exponent. factor(1) is empty.
  static std::map<std::int64_t, std::int64_t> factor(std::int64_t n);

  static bool is_prime(std::int64_t n);

  // All primes <= limit, in increasing order.
  static std::vector<std::int64_t> primes_up_to(std::int64_t limit);

 private:
  static std::shared_ptr<const std::vector<std::int64_t>> snapshot_with_last_at_least(
      std::int64_t bound);
  static std::shared_ptr<const std::vector<std::int64_t>> snapshot_with_count_at_least(
      std::size_t count);

  static std::mutex mutex_;
  static std::shared_ptr<const std::vector<std::int64_t>> primes_;
};

// Exponent of prime p in m! by Legendre's formula: sum of floor(m / p^i).
std::int64_t factorial_prime_exponent(std::int64_t m, std::int64_t p);

}  // namespace gw
