#include "gw/primes.hpp"

#include <algorithm>
#include <sstream>

#include "gw/errors.hpp"

namespace gw {

std::mutex PrimeTable::mutex_;
std::shared_ptr<const std::vector<std::int64_t>> PrimeTable::primes_;

namespace {

// Extends `primes` (already holding all primes <= old bound, or empty) so it
// holds every prime <= bound, by segmented trial division on odd candidates.
void extend_to_bound(std::vector<std::int64_t>& primes, std::int64_t bound) {
  if (primes.empty()) primes = {2, 3};
  std::int64_t candidate = primes.back() + 2;
  while (primes.back() < bound) {
    bool composite = false;
    for (std::int64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        composite = true;
        break;
      }
    }
    if (!composite) primes.push_back(candidate);
    candidate += 2;
  }
}

}  // namespace

std::shared_ptr<const std::vector<std::int64_t>> PrimeTable::snapshot_with_last_at_least(
    std::int64_t bound) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!primes_ || primes_->empty() || primes_->back() < bound) {
    std::vector<std::int64_t> grown = primes_ ? *primes_ : std::vector<std::int64_t>{};
    // Grow past the request to amortize repeated small extensions.
    extend_to_bound(grown, std::max<std::int64_t>(bound, 2 * (grown.empty() ? 16 : grown.back())));
    primes_ = std::make_shared<const std::vector<std::int64_t>>(std::move(grown));
  }
  return primes_;
}

std::shared_ptr<const std::vector<std::int64_t>> PrimeTable::snapshot_with_count_at_least(
    std::size_t count) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!primes_ || primes_->size() < count) {
    std::vector<std::int64_t> grown = primes_ ? *primes_ : std::vector<std::int64_t>{};
    if (grown.empty()) grown = {2, 3};
    std::int64_t candidate = grown.back() + 2;
    while (grown.size() < 2 * count) {
      bool composite = false;
      for (std::int64_t p : grown) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          composite = true;
          break;
        }
      }
      if (!composite) grown.push_back(candidate);
      candidate += 2;
    }
    primes_ = std::make_shared<const std::vector<std::int64_t>>(std::move(grown));
  }
  return primes_;
}

std::int64_t PrimeTable::nth_prime(std::int64_t k) {
  if (k < 1) throw out_of_range_error("prime index must be >= 1");
  auto snap = snapshot_with_count_at_least(static_cast<std::size_t>(k));
  return (*snap)[static_cast<std::size_t>(k - 1)];
}

std::int64_t PrimeTable::index_of_prime(std::int64_t p) {
  if (p < 2) throw out_of_range_error("not a prime");
  auto snap = snapshot_with_last_at_least(p);
  auto it = std::lower_bound(snap->begin(), snap->end(), p);
  if (it == snap->end() || *it != p) {
    std::ostringstream msg;
    msg << p << " is not prime";
    throw out_of_range_error(msg.str());
  }
  return static_cast<std::int64_t>(it - snap->begin()) + 1;
}

bool PrimeTable::is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  std::int64_t root = 1;
  while ((root + 1) * (root + 1) <= n) ++root;
  auto snap = snapshot_with_last_at_least(root);
  for (std::int64_t p : *snap) {
    if (p > root) break;
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> PrimeTable::primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  auto snap = snapshot_with_last_at_least(limit);
  for (std::int64_t p : *snap) {
    if (p > limit) break;
    out.push_back(p);
  }
  return out;
}

std::map<std::int64_t, std::int64_t> PrimeTable::factor(std::int64_t n) {
  if (n < 1) throw out_of_range_error("factor requires n >= 1");
  std::map<std::int64_t, std::int64_t> result;
  if (n == 1) return result;
  std::int64_t remaining = n;
  std::int64_t root = 1;
  while ((root + 1) * (root + 1) <= n) ++root;
  auto snap = snapshot_with_last_at_least(std::max<std::int64_t>(root, 2));
  for (std::int64_t p : *snap) {
    if (p * p > remaining) break;
    while (remaining % p == 0) {
      ++result[p];
      remaining /= p;
    }
  }
  if (remaining > 1) ++result[remaining];
  return result;
}

std::int64_t factorial_prime_exponent(std::int64_t m, std::int64_t p) {
  if (m < 0) throw out_of_range_error("factorial_prime_exponent requires m >= 0");
  if (p < 2) throw out_of_range_error("factorial_prime_exponent requires a prime p >= 2");
  std::int64_t total = 0;
  for (std::int64_t q = p; q <= m; ) {
    total += m / q;
    if (q > m / p) break;  // next power would overflow past m anyway
    q *= p;
  }
  return total;
}

}  // namespace gw
