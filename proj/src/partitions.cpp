#include "gw/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "gw/errors.hpp"
#include "gw/primes.hpp"

namespace gw {

namespace {

std::int64_t parse_part(const std::string& text) {
  if (text.empty()) throw parse_error("empty part in partition");
  for (char c : text) {
    if (c < '0' || c > '9') throw parse_error("invalid part '" + text + "'");
  }
  if (text.size() > 10) throw parse_error("part too large: '" + text + "'");
  return std::stoll(text);
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::int64_t v : parts_) {
    if (v < 1 || v > kMaxPart) {
      std::ostringstream msg;
      msg << "partition part " << v << " outside 1.." << kMaxPart;
      throw out_of_range_error(msg.str());
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw parse_error("empty partition");
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    parts.push_back(parse_part(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const out_of_range_error& e) {
    throw parse_error(e.what());
  }
}

std::int64_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

bool Partition::operator<(const Partition& rhs) const {
  return std::lexicographical_compare(parts_.begin(), parts_.end(), rhs.parts_.begin(),
                                      rhs.parts_.end());
}

std::string PowerFingerprint::str() const {
  if (entries.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << " * ";
    out << entries[i].first << '^' << entries[i].second;
  }
  return out.str();
}

namespace {

void add_power_exponents(std::map<std::int64_t, std::int64_t>& exponents, std::int64_t part,
                         std::int64_t sign) {
  for (const auto& [p, e] : PrimeTable::factor(part)) exponents[p] += sign * part * e;
}

PowerFingerprint to_fingerprint(const std::map<std::int64_t, std::int64_t>& exponents) {
  PowerFingerprint fp;
  for (const auto& [p, e] : exponents) {
    if (e != 0) fp.entries.emplace_back(p, e);
  }
  return fp;
}

}  // namespace

PowerFingerprint power_fingerprint(const Partition& p) {
  std::map<std::int64_t, std::int64_t> exponents;
  for (std::int64_t v : p.parts()) add_power_exponents(exponents, v, 1);
  return to_fingerprint(exponents);
}

bool is_solution(const Partition& lambda, const Partition& mu) {
  return lambda.length() == mu.length() && lambda.size() == mu.size() &&
         power_fingerprint(lambda) == power_fingerprint(mu);
}

SolutionPair::SolutionPair(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (lambda_.length() < 1) throw invalid_solution("solution pair must have positive length");
  if (!is_solution(lambda_, mu_)) {
    throw invalid_solution("not a solution pair: " + lambda_.str() + " ; " + mu_.str());
  }
  if (lambda_ < mu_) std::swap(lambda_, mu_);
}

SolutionPair SolutionPair::parse(const std::string& text) {
  std::size_t semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos) {
    throw parse_error("expected 'lambda ; mu'");
  }
  return SolutionPair(Partition::parse(text.substr(0, semi)),
                      Partition::parse(text.substr(semi + 1)));
}

std::string SolutionPair::str() const { return lambda_.str() + " ; " + mu_.str(); }

bool SolutionPair::operator<(const SolutionPair& rhs) const {
  if (size() != rhs.size()) return size() < rhs.size();
  if (length() != rhs.length()) return length() < rhs.length();
  if (lambda_ != rhs.lambda_) return lambda_ < rhs.lambda_;
  return mu_ < rhs.mu_;
}

SolutionPair scale(const SolutionPair& s, std::int64_t k) {
  if (k < 1) throw out_of_range_error("scale factor must be >= 1");
  auto scaled = [k](const Partition& p) {
    std::vector<std::int64_t> parts = p.parts();
    for (std::int64_t& v : parts) v *= k;
    return Partition(std::move(parts));
  };
  return SolutionPair(scaled(s.lambda()), scaled(s.mu()));
}

SolutionPair oplus(const SolutionPair& s1, const SolutionPair& s2) {
  auto merged = [](const Partition& a, const Partition& b) {
    std::vector<std::int64_t> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
  };
  return SolutionPair(merged(s1.lambda(), s2.lambda()), merged(s1.mu(), s2.mu()));
}

std::optional<std::int64_t> is_multiple(const SolutionPair& s) {
  std::int64_t g = 0;
  for (std::int64_t v : s.lambda().parts()) g = std::gcd(g, v);
  for (std::int64_t v : s.mu().parts()) g = std::gcd(g, v);
  if (g >= 2) return g;
  return std::nullopt;
}

namespace {

struct DistinctParts {
  std::vector<std::int64_t> values;  // ascending
  std::vector<std::int64_t> mults;
};

DistinctParts distinct_ascending(const Partition& p) {
  DistinctParts d;
  const auto& parts = p.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!d.values.empty() && d.values.back() == *it) {
      ++d.mults.back();
    } else {
      d.values.push_back(*it);
      d.mults.push_back(1);
    }
  }
  return d;
}

Partition from_counts(const DistinctParts& d, const std::vector<std::int64_t>& counts) {
  std::vector<std::int64_t> parts;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    parts.insert(parts.end(), static_cast<std::size_t>(counts[i]), d.values[i]);
  }
  return Partition(std::move(parts));
}

// Depth-first witness search. Sigma candidates are weakly decreasing
// sequences over lambda's parts visited in ascending lexicographic preorder
// (each node extends by a value no larger than its last, smaller values
// first), so the first hit is the least witness.
class Decomposer {
 public:
  Decomposer(const SolutionPair& s, std::int64_t budget)
      : lam_(distinct_ascending(s.lambda())),
        mu_(distinct_ascending(s.mu())),
        total_length_(s.length()),
        total_size_(s.size()),
        budget_(budget) {
    // Reachable (length, sum) pairs over submultisets of mu, used to discard
    // sigma candidates no tau can match. Cost is charged against the budget
    // up front so oversized inputs fail fast instead of stalling here.
    charge(total_length_ * (total_size_ + 1));
    reach_.assign(static_cast<std::size_t>(total_length_ + 1),
                  std::vector<char>(static_cast<std::size_t>(total_size_ + 1), 0));
    reach_[0][0] = 1;
    for (std::size_t i = 0; i < mu_.values.size(); ++i) {
      for (std::int64_t copy = 0; copy < mu_.mults[i]; ++copy) {
        for (std::int64_t len = total_length_ - 1; len >= 0; --len) {
          for (std::int64_t sum = total_size_ - mu_.values[i]; sum >= 0; --sum) {
            if (reach_[len][sum]) reach_[len + 1][sum + mu_.values[i]] = 1;
          }
        }
      }
    }
  }

  std::optional<DecompositionWitness> run() {
    sigma_counts_.assign(lam_.values.size(), 0);
    tau_counts_.assign(mu_.values.size(), 0);
    if (dfs_sigma(static_cast<std::int64_t>(lam_.values.size()) - 1, 0, 0)) {
      return DecompositionWitness{from_counts(lam_, sigma_counts_),
                                  from_counts(mu_, tau_counts_)};
    }
    return std::nullopt;
  }

 private:
  void charge(std::int64_t nodes) {
    budget_ -= nodes;
    if (budget_ < 0) throw budget_exhausted("decomposability search budget exhausted");
  }

  bool dfs_sigma(std::int64_t max_index, std::int64_t len, std::int64_t sum) {
    if (len >= 1 && reach_[len][sum] && try_match(len, sum)) return true;
    if (len >= total_length_ - 1) return false;
    for (std::int64_t i = 0; i <= max_index; ++i) {
      if (sigma_counts_[i] == lam_.mults[i]) continue;
      charge(1);
      ++sigma_counts_[i];
      if (dfs_sigma(i, len + 1, sum + lam_.values[i])) return true;
      --sigma_counts_[i];
    }
    return false;
  }

  bool try_match(std::int64_t len, std::int64_t sum) {
    target_fp_.clear();
    for (std::size_t i = 0; i < lam_.values.size(); ++i) {
      for (std::int64_t c = 0; c < sigma_counts_[i]; ++c) {
        add_power_exponents(target_fp_, lam_.values[i], 1);
      }
    }
    for (auto it = target_fp_.begin(); it != target_fp_.end();) {
      it = it->second == 0 ? target_fp_.erase(it) : std::next(it);
    }
    tau_fp_.clear();
    return dfs_tau(static_cast<std::int64_t>(mu_.values.size()) - 1, len, sum);
  }

  // Exact match on remaining (length, sum) and on the exponent map; partial
  // exponents only grow, so any overshoot prunes the branch.
  bool dfs_tau(std::int64_t max_index, std::int64_t len_left, std::int64_t sum_left) {
    if (len_left == 0) return sum_left == 0 && tau_matches_target();
    for (std::int64_t i = 0; i <= max_index; ++i) {
      std::int64_t v = mu_.values[i];
      if (tau_counts_[i] == mu_.mults[i]) continue;
      if (sum_left < len_left * mu_.values[0] || sum_left > len_left * v) continue;
      charge(1);
      ++tau_counts_[i];
      add_power_exponents(tau_fp_, v, 1);
      bool ok = !tau_overshoots(v) && dfs_tau(i, len_left - 1, sum_left - v);
      if (ok) return true;
      add_power_exponents(tau_fp_, v, -1);
      --tau_counts_[i];
    }
    return false;
  }

  bool tau_overshoots(std::int64_t added_value) const {
    for (const auto& [p, e] : PrimeTable::factor(added_value)) {
      (void)e;
      auto it = tau_fp_.find(p);
      if (it == tau_fp_.end()) continue;
      auto target = target_fp_.find(p);
      std::int64_t cap = target == target_fp_.end() ? 0 : target->second;
      if (it->second > cap) return true;
    }
    return false;
  }

  bool tau_matches_target() const {
    for (const auto& [p, e] : tau_fp_) {
      if (e == 0) continue;
      auto it = target_fp_.find(p);
      if (it == target_fp_.end() || it->second != e) return false;
    }
    for (const auto& [p, e] : target_fp_) {
      auto it = tau_fp_.find(p);
      if ((it == tau_fp_.end() ? 0 : it->second) != e) return false;
    }
    return true;
  }

  DistinctParts lam_;
  DistinctParts mu_;
  std::int64_t total_length_;
  std::int64_t total_size_;
  std::int64_t budget_;
  std::vector<std::vector<char>> reach_;
  std::vector<std::int64_t> sigma_counts_;
  std::vector<std::int64_t> tau_counts_;
  std::map<std::int64_t, std::int64_t> target_fp_;
  std::map<std::int64_t, std::int64_t> tau_fp_;
};

}  // namespace

std::optional<DecompositionWitness> is_decomposable(const SolutionPair& s, std::int64_t budget) {
  if (s.length() < 2) return std::nullopt;  // no proper nonempty sub-pair exists
  return Decomposer(s, budget).run();
}

PrimitivityVerdict is_primitive(const SolutionPair& s, std::int64_t budget) {
  PrimitivityVerdict verdict;
  if (s.lambda() == s.mu()) {
    verdict.status = PrimitivityStatus::Trivial;
    return verdict;
  }
  if (auto k = is_multiple(s)) {
    verdict.status = PrimitivityStatus::Multiple;
    verdict.multiple_k = *k;
    return verdict;
  }
  // A shared part x splits off the trivial sub-solution ((x);(x)).
  {
    const auto& lp = s.lambda().parts();
    const auto& mp = s.mu().parts();
    std::vector<std::int64_t> common;
    std::set_intersection(lp.rbegin(), lp.rend(), mp.rbegin(), mp.rend(),
                          std::back_inserter(common));
    if (!common.empty()) {
      verdict.status = PrimitivityStatus::Decomposable;
      verdict.witness = DecompositionWitness{Partition({common.front()}),
                                             Partition({common.front()})};
      return verdict;
    }
  }
  try {
    if (auto witness = is_decomposable(s, budget)) {
      verdict.status = PrimitivityStatus::Decomposable;
      verdict.witness = std::move(witness);
    } else {
      verdict.status = PrimitivityStatus::Primitive;
    }
  } catch (const budget_exhausted&) {
    verdict.status = PrimitivityStatus::Unknown;
  }
  return verdict;
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 256);
  if (const char* env = std::getenv("GAMMAWORD_THREADS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) return std::min(parsed, 256);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 16u)) : 4;
}

// Partitions of n into exactly s parts, each at most cap, descending.
template <typename F>
void enum_fixed_length(std::int64_t n, std::int64_t s, std::int64_t cap,
                       std::vector<std::int64_t>& current, F&& emit) {
  if (s == 0) {
    if (n == 0) emit(current);
    return;
  }
  if (n < s || n > s * cap) return;
  std::int64_t hi = std::min(cap, n - s + 1);
  std::int64_t lo = (n + s - 1) / s;
  for (std::int64_t v = hi; v >= lo; --v) {
    current.push_back(v);
    enum_fixed_length(n - v, s - 1, v, current, emit);
    current.pop_back();
  }
}

// Runs fn(i) for i in [0, count) across `threads` workers; rethrows the
// first worker exception after joining.
template <typename Fn>
void parallel_for(std::int64_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  int workers = static_cast<int>(std::min<std::int64_t>(threads, count));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          fn(i, w);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<SolutionPair> pairs_in_cell(std::int64_t n, std::int64_t s) {
  std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, std::vector<Partition>> buckets;
  std::vector<std::int64_t> current;
  enum_fixed_length(n, s, n, current, [&buckets](const std::vector<std::int64_t>& parts) {
    Partition p{std::vector<std::int64_t>(parts)};
    buckets[power_fingerprint(p).entries].push_back(std::move(p));
  });
  std::vector<SolutionPair> found;
  for (const auto& [fp, members] : buckets) {
    (void)fp;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        found.emplace_back(members[i], members[j]);
      }
    }
  }
  return found;
}

}  // namespace

SearchResult search(const SearchOptions& options) {
  if (options.max_size < 1 || options.max_size > 10000) {
    throw out_of_range_error("search max_size must be in 1..10000");
  }
  if (options.max_length < 1) throw out_of_range_error("search max_length must be >= 1");
  int threads = resolve_threads(options.threads);

  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t n = 2; n <= options.max_size; ++n) {
    for (std::int64_t s = 2; s <= std::min(options.max_length, n); ++s) {
      cells.emplace_back(n, s);
    }
  }

  std::vector<std::vector<SolutionPair>> per_cell(cells.size());
  parallel_for(static_cast<std::int64_t>(cells.size()), threads, [&](std::int64_t i, int) {
    per_cell[static_cast<std::size_t>(i)] =
        pairs_in_cell(cells[static_cast<std::size_t>(i)].first,
                      cells[static_cast<std::size_t>(i)].second);
  });

  std::vector<SolutionPair> pairs;
  for (auto& cell : per_cell) {
    pairs.insert(pairs.end(), std::make_move_iterator(cell.begin()),
                 std::make_move_iterator(cell.end()));
  }
  std::sort(pairs.begin(), pairs.end());

  SearchResult result;
  if (!options.primitive_only) {
    for (auto& p : pairs) result.entries.push_back({std::move(p), std::nullopt});
    return result;
  }

  std::vector<PrimitivityVerdict> verdicts(pairs.size());
  parallel_for(static_cast<std::int64_t>(pairs.size()), threads, [&](std::int64_t i, int) {
    verdicts[static_cast<std::size_t>(i)] =
        is_primitive(pairs[static_cast<std::size_t>(i)], options.budget);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (verdicts[i].status == PrimitivityStatus::Primitive) {
      result.entries.push_back({std::move(pairs[i]), std::move(verdicts[i])});
    } else if (verdicts[i].status == PrimitivityStatus::Unknown) {
      result.any_unknown = true;
      result.entries.push_back({std::move(pairs[i]), std::move(verdicts[i])});
    }
  }
  return result;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Triple {
  std::uint64_t hash;
  std::int32_t b;
  std::int32_t c;
};

}  // namespace

SearchResult search_length3(std::int64_t max_size, int threads) {
  if (max_size < 1 || max_size > 10000) {
    throw out_of_range_error("search3 max_size must be in 1..10000");
  }
  int workers = resolve_threads(threads);

  // Additive per-part hash of the power fingerprint: the exponent vector of
  // v^v weighted by a fixed 64-bit mix of each prime. Equal partitions sum
  // to equal hashes; collisions are removed by exact verification below.
  std::vector<std::uint64_t> part_hash(static_cast<std::size_t>(max_size + 1), 0);
  for (std::int64_t v = 2; v <= max_size; ++v) {
    std::uint64_t h = 0;
    for (const auto& [p, e] : PrimeTable::factor(v)) {
      h += static_cast<std::uint64_t>(v * e) * mix64(static_cast<std::uint64_t>(p));
    }
    part_hash[static_cast<std::size_t>(v)] = h;
  }

  std::vector<std::vector<SolutionPair>> per_size(static_cast<std::size_t>(max_size + 1));
  parallel_for(max_size + 1, workers, [&](std::int64_t n, int) {
    if (n < 6) return;  // smallest distinct 3-part pair needs n >= 6 anyway
    std::vector<Triple> triples;
    for (std::int64_t c = 1; c * 3 <= n; ++c) {
      for (std::int64_t b = c; b * 2 <= n - c; ++b) {
        std::int64_t a = n - b - c;
        triples.push_back({part_hash[static_cast<std::size_t>(a)] +
                               part_hash[static_cast<std::size_t>(b)] +
                               part_hash[static_cast<std::size_t>(c)],
                           static_cast<std::int32_t>(b), static_cast<std::int32_t>(c)});
      }
    }
    std::sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) {
      if (x.hash != y.hash) return x.hash < y.hash;
      if (x.b != y.b) return x.b < y.b;
      return x.c < y.c;
    });
    auto& found = per_size[static_cast<std::size_t>(n)];
    std::size_t run_start = 0;
    while (run_start < triples.size()) {
      std::size_t run_end = run_start + 1;
      while (run_end < triples.size() && triples[run_end].hash == triples[run_start].hash) {
        ++run_end;
      }
      if (run_end - run_start >= 2) {
        std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, std::vector<Partition>>
            exact;
        for (std::size_t i = run_start; i < run_end; ++i) {
          Partition p({n - triples[i].b - triples[i].c, triples[i].b, triples[i].c});
          exact[power_fingerprint(p).entries].push_back(std::move(p));
        }
        for (const auto& [fp, members] : exact) {
          (void)fp;
          for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
              found.emplace_back(members[i], members[j]);
            }
          }
        }
      }
      run_start = run_end;
    }
  });

  SearchResult result;
  std::vector<SolutionPair> pairs;
  for (auto& block : per_size) {
    pairs.insert(pairs.end(), std::make_move_iterator(block.begin()),
                 std::make_move_iterator(block.end()));
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto& p : pairs) result.entries.push_back({std::move(p), std::nullopt});
  return result;
}

SolutionPair family_pair(std::int64_t n) {
  if (n < 3) throw out_of_range_error("family requires n >= 3 (n = 2 degenerates)");
  if (n > 20) throw out_of_range_error("family pairs above n = 20 are not materialized");
  std::int64_t q = std::int64_t{1} << (n - 2);  // 2^{n-2}
  std::vector<std::int64_t> lambda;
  lambda.push_back(std::int64_t{1} << n);
  lambda.insert(lambda.end(), 2, q);
  lambda.insert(lambda.end(), static_cast<std::size_t>(3 * q), 2);
  std::vector<std::int64_t> mu;
  mu.insert(mu.end(), 3, 2 * q);
  mu.insert(mu.end(), static_cast<std::size_t>(q), 4);
  mu.insert(mu.end(), static_cast<std::size_t>(2 * q), 1);
  return SolutionPair(Partition(std::move(lambda)), Partition(std::move(mu)));
}

std::optional<FamilyProfile> family_decomposition_check(std::int64_t n) {
  if (n < 3) throw out_of_range_error("family check requires n >= 3");
  if (n > 45) throw out_of_range_error("family check above n = 45 would overflow");
  const std::int64_t p_n = std::int64_t{1} << n;
  const std::int64_t p_n1 = p_n / 2;  // 2^{n-1}
  const std::int64_t p_n2 = p_n / 4;  // 2^{n-2}
  const std::int64_t c_max = 3 * p_n2;
  const std::int64_t e_max = p_n2;
  const std::int64_t f_max = p_n1;

  for (std::int64_t a = 0; a <= 1; ++a) {
    for (std::int64_t b = 0; b <= 2; ++b) {
      for (std::int64_t d = 0; d <= 3; ++d) {
        // Eliminate (c, e, f) from
        //   c - e - f           = r1
        //   2c - 4e - f         = r2
        //   2c - 8e             = r3
        std::int64_t r1 = d - a - b;
        std::int64_t r2 = p_n1 * d - p_n * a - p_n2 * b;
        std::int64_t r3 = (n - 1) * p_n1 * d - n * p_n * a - (n - 2) * p_n2 * b;
        std::int64_t e = -r1 + r2 - r3 / 2;  // r3 is even for n >= 3
        std::int64_t f = 4 * e - r2 + r3;
        std::int64_t c = r1 + e + f;
        if (c < 0 || c > c_max || e < 0 || e > e_max || f < 0 || f > f_max) continue;
        bool all_zero = a == 0 && b == 0 && c == 0 && d == 0 && e == 0 && f == 0;
        bool full = a == 1 && b == 2 && c == c_max && d == 3 && e == e_max && f == f_max;
        if (all_zero || full) continue;
        // The elimination is exact; re-check all three equations anyway.
        if (a + b + c != d + e + f) continue;
        if (p_n * a + p_n2 * b + 2 * c != p_n1 * d + 4 * e + f) continue;
        if (n * p_n * a + (n - 2) * p_n2 * b + 2 * c != (n - 1) * p_n1 * d + 8 * e) continue;
        return FamilyProfile{a, b, c, d, e, f};
      }
    }
  }
  return std::nullopt;
}

std::pair<SolutionPair, SolutionPair> n5_decomposition() {
  std::vector<std::int64_t> l1{8};
  l1.insert(l1.end(), 8, 2);
  std::vector<std::int64_t> m1;
  m1.insert(m1.end(), 5, 4);
  m1.insert(m1.end(), 4, 1);

  std::vector<std::int64_t> l2{32, 8};
  l2.insert(l2.end(), 16, 2);
  std::vector<std::int64_t> m2;
  m2.insert(m2.end(), 3, 16);
  m2.insert(m2.end(), 3, 4);
  m2.insert(m2.end(), 12, 1);

  return {SolutionPair(Partition(std::move(l1)), Partition(std::move(m1))),
          SolutionPair(Partition(std::move(l2)), Partition(std::move(m2)))};
}

}  // namespace gw
