#pragma once

// Exhaustive minimum-call search.
//
// Iterative deepening over sequence length with a memo of refuted states.
// The call dynamics only ever merge knowledge sets and never look at which
// person holds which set, so a state is determined up to person relabeling
// by the multiset of its knowledge sets; the memo is keyed on that sorted
// multiset. Persons who have not called yet are interchangeable (swapping
// two of them, together with their gossips, fixes the state), so only the
// lowest-numbered uncalled persons are tried. A call between two persons
// with equal knowledge changes nothing and can be deleted from any shortest
// schedule, so such calls are skipped.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <list>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/functional/hash.hpp>

#include "gossip/core.hpp"

namespace gossip::oracle {

struct SearchConfig {
  std::size_t max_depth = 64;
  bool canonicalize = true;
  bool prune_noop_calls = true;
  std::chrono::duration<double> time_budget{60.0};
  std::size_t memo_capacity = std::size_t{1} << 22;
};

struct SearchResult {
  std::optional<std::size_t> min_calls;   // empty on timeout or depth exhaustion
  std::optional<Schedule> witness;        // a schedule of min_calls calls
  std::optional<std::size_t> refuted_through;  // no schedule with this many calls or fewer
  bool timed_out = false;
  std::uint64_t nodes = 0;
};

/// Bounded map with least-recently-used eviction.
template <class Key, class Value, class Hash = std::hash<Key>>
class LruMap {
 public:
  explicit LruMap(std::size_t capacity) : capacity_(std::max<std::size_t>(capacity, 1)) {}

  const Value* find(const Key& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return &it->second->second;
  }

  void put(const Key& key, Value value) {
    if (auto it = index_.find(key); it != index_.end()) {
      it->second->second = std::move(value);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    if (index_.size() == capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
    order_.emplace_front(key, std::move(value));
    index_.emplace(order_.front().first, order_.begin());
  }

  std::size_t size() const noexcept { return index_.size(); }

 private:
  std::size_t capacity_;
  std::list<std::pair<Key, Value>> order_;
  std::unordered_map<Key, typename std::list<std::pair<Key, Value>>::iterator, Hash> index_;
};

namespace detail {

struct MaskVectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

struct Timeout {};

class MinCallSearch {
 public:
  MinCallSearch(std::size_t n, std::size_t k, const SearchConfig& cfg)
      : n_(n), k_(static_cast<int>(k)), cfg_(cfg), memo_(cfg.memo_capacity),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(cfg.time_budget)) {}

  SearchResult run() {
    SearchResult result;
    std::vector<std::uint64_t> know(n_);
    masks::reset(know);
    try {
      for (std::size_t depth = 0; depth <= cfg_.max_depth; ++depth) {
        path_.clear();
        if (dfs(know, depth)) {
          result.min_calls = depth;
          std::vector<Call> calls(path_.begin(), path_.end());
          result.witness = Schedule(n_, std::move(calls));
          break;
        }
        result.refuted_through = depth;
      }
    } catch (const Timeout&) {
      result.timed_out = true;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  int deficient(const std::vector<std::uint64_t>& know) const {
    int d = 0;
    for (std::uint64_t m : know) d += masks::count(m) < k_ ? 1 : 0;
    return d;
  }

  std::vector<std::uint64_t> key_of(const std::vector<std::uint64_t>& know) const {
    std::vector<std::uint64_t> key(know);
    if (cfg_.canonicalize) std::sort(key.begin(), key.end());
    return key;
  }

  void candidates(const std::vector<std::uint64_t>& know, std::vector<Call>& out) const {
    out.clear();
    if (!cfg_.canonicalize) {
      for (PersonId a = 0; a < n_; ++a) {
        for (PersonId b = a + 1; b < n_; ++b) {
          if (cfg_.prune_noop_calls && know[a] == know[b]) continue;
          out.emplace_back(a, b);
        }
      }
      return;
    }
    std::vector<PersonId> reps;
    std::vector<PersonId> uncalled;
    std::optional<Call> twin;  // a no-op pair, if any exists
    for (PersonId p = 0; p < n_; ++p) {
      if (know[p] == (std::uint64_t{1} << p)) {
        if (uncalled.size() < 2) uncalled.push_back(p);
        continue;
      }
      auto same = std::find_if(reps.begin(), reps.end(), [&](PersonId r) { return know[r] == know[p]; });
      if (same == reps.end()) {
        reps.push_back(p);
      } else if (!twin) {
        twin = Call(*same, p);
      }
    }
    for (std::size_t x = 0; x < reps.size(); ++x) {
      for (std::size_t y = x + 1; y < reps.size(); ++y) out.emplace_back(reps[x], reps[y]);
    }
    if (!uncalled.empty()) {
      for (PersonId r : reps) out.emplace_back(r, uncalled[0]);
      if (uncalled.size() == 2) out.emplace_back(uncalled[0], uncalled[1]);
    }
    if (!cfg_.prune_noop_calls && twin) out.push_back(*twin);
    // Larger merges first: finds witnesses sooner, never affects completeness.
    std::stable_sort(out.begin(), out.end(), [&](const Call& l, const Call& r) {
      return masks::count(know[l.a] | know[l.b]) > masks::count(know[r.a] | know[r.b]);
    });
  }

  bool dfs(std::vector<std::uint64_t>& know, std::size_t remaining) {
    if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    const int d = deficient(know);
    if (d == 0) return true;
    if (remaining == 0) return false;
    if (static_cast<std::size_t>((d + 1) / 2) > remaining) return false;
    auto key = key_of(know);
    if (const std::size_t* refuted = memo_.find(key); refuted && *refuted >= remaining) return false;

    std::vector<Call> moves;
    candidates(know, moves);
    for (const Call& c : moves) {
      const std::uint64_t ka = know[c.a];
      const std::uint64_t kb = know[c.b];
      know[c.a] = know[c.b] = ka | kb;
      path_.push_back(c);
      const bool found = dfs(know, remaining - 1);
      know[c.a] = ka;
      know[c.b] = kb;
      if (found) return true;
      path_.pop_back();
    }
    memo_.put(std::move(key), remaining);
    return false;
  }

  std::size_t n_;
  int k_;
  SearchConfig cfg_;
  LruMap<std::vector<std::uint64_t>, std::size_t, MaskVectorHash> memo_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Call> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact minimum number of calls after which all n persons know at least k
/// gossips. Never returns a wrong number: on budget exhaustion min_calls is
/// empty and refuted_through tells how far the refutation got.
inline SearchResult min_calls_bruteforce(std::size_t n, std::size_t k, const SearchConfig& cfg = {}) {
  if (k < 2 || k > n || n > masks::kMaxPersons) {
    throw DomainError("search needs 2 <= k <= n <= 64");
  }
  if (cfg.time_budget.count() <= 0) throw DomainError("time budget must be positive");
  return detail::MinCallSearch(n, k, cfg).run();
}

/// Largest k for which the schedule is k-informing.
inline std::size_t max_informing_level(const Schedule& s) { return min_awareness(simulate(s)); }

inline std::size_t max_informing_level(const AugmentedSchedule& s) {
  return min_awareness(apply_preliminary(s));
}

}  // namespace gossip::oracle
