#pragma once

// Calls, schedules and the gossip-spreading semantics.
//
// Persons are dense 0-based ids; gossip g is the message person g starts
// with. A call merges the two participants' knowledge. Calls are strictly
// sequential.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gossip/errors.hpp"

namespace gossip {

using PersonId = std::uint32_t;

/// An unordered pair of distinct persons, stored with a < b.
struct Call {
  PersonId a = 0;
  PersonId b = 1;

  Call() = default;
  Call(PersonId x, PersonId y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) {
      throw ValidationError("self-call on person " + std::to_string(x));
    }
  }

  bool involves(PersonId p) const noexcept { return a == p || b == p; }

  friend auto operator<=>(const Call&, const Call&) = default;
  friend bool operator==(const Call&, const Call&) = default;
};

/// Person count plus a chronological call sequence. Repeated pairs are legal.
class Schedule {
 public:
  Schedule() = default;

  explicit Schedule(std::size_t persons, std::vector<Call> calls = {})
      : n_(persons), calls_(std::move(calls)) {
    if (n_ == 0) throw ValidationError("schedule needs at least one person");
    for (std::size_t t = 0; t < calls_.size(); ++t) {
      if (calls_[t].b >= n_) {
        throw ValidationError("call " + std::to_string(t) + " references person " +
                              std::to_string(calls_[t].b) + " but n = " + std::to_string(n_));
      }
    }
  }

  std::size_t persons() const noexcept { return n_; }
  const std::vector<Call>& calls() const noexcept { return calls_; }
  std::size_t size() const noexcept { return calls_.size(); }
  bool empty() const noexcept { return calls_.empty(); }
  const Call& operator[](std::size_t t) const { return calls_.at(t); }

  Schedule prefix(std::size_t m) const {
    if (m > calls_.size()) throw DomainError("prefix longer than schedule");
    return Schedule(n_, {calls_.begin(), calls_.begin() + static_cast<std::ptrdiff_t>(m)});
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::size_t n_ = 1;
  std::vector<Call> calls_;
};

/// Preliminary calls executed before a base schedule. Preliminary calls may
/// involve persons that never appear in the base calls; the universe is
/// base.persons().
struct AugmentedSchedule {
  std::vector<Call> preliminary;
  Schedule base;

  AugmentedSchedule() = default;
  AugmentedSchedule(std::vector<Call> prelim, Schedule base_schedule)
      : preliminary(std::move(prelim)), base(std::move(base_schedule)) {
    for (const Call& c : preliminary) {
      if (c.b >= base.persons()) {
        throw ValidationError("preliminary call references person " + std::to_string(c.b) +
                              " but n = " + std::to_string(base.persons()));
      }
    }
  }

  std::size_t persons() const noexcept { return base.persons(); }

  /// Preliminary calls followed by base calls, as one schedule.
  Schedule flattened() const {
    std::vector<Call> all = preliminary;
    all.insert(all.end(), base.calls().begin(), base.calls().end());
    return Schedule(base.persons(), std::move(all));
  }

  friend bool operator==(const AugmentedSchedule&, const AugmentedSchedule&) = default;
};

using GossipSet = boost::dynamic_bitset<std::uint64_t>;

/// Per-person set of known gossips.
class KnowledgeState {
 public:
  /// Initial state: everyone knows only their own gossip.
  explicit KnowledgeState(std::size_t persons) : know_(persons, GossipSet(persons)) {
    for (std::size_t p = 0; p < persons; ++p) know_[p].set(p);
  }

  std::size_t persons() const noexcept { return know_.size(); }
  const GossipSet& known_by(PersonId p) const { return know_.at(p); }
  bool knows(PersonId p, PersonId g) const { return know_.at(p).test(g); }
  std::size_t awareness(PersonId p) const { return know_.at(p).count(); }

  void apply(const Call& c) {
    if (c.b >= know_.size()) throw ValidationError("call outside knowledge state");
    know_[c.a] |= know_[c.b];
    know_[c.b] = know_[c.a];
  }

  void apply(std::span<const Call> calls) {
    for (const Call& c : calls) apply(c);
  }

  friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;

 private:
  std::vector<GossipSet> know_;
};

inline KnowledgeState simulate(const Schedule& s) {
  KnowledgeState ks(s.persons());
  ks.apply(s.calls());
  return ks;
}

inline KnowledgeState apply_preliminary(const AugmentedSchedule& aug) {
  KnowledgeState ks(aug.persons());
  ks.apply(aug.preliminary);
  ks.apply(aug.base.calls());
  return ks;
}

inline std::vector<std::size_t> awareness(const KnowledgeState& ks) {
  std::vector<std::size_t> out(ks.persons());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = ks.awareness(static_cast<PersonId>(p));
  return out;
}

inline std::size_t min_awareness(const KnowledgeState& ks) {
  const auto aw = awareness(ks);
  return aw.empty() ? 0 : *std::min_element(aw.begin(), aw.end());
}

namespace detail {
inline void check_level(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw ValidationError("awareness level " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
}
}  // namespace detail

inline bool is_k_informing(const KnowledgeState& ks, std::size_t k) {
  detail::check_level(k, ks.persons());
  return min_awareness(ks) >= k;
}

inline bool is_exact_k_informing(const KnowledgeState& ks, std::size_t k) {
  detail::check_level(k, ks.persons());
  const auto aw = awareness(ks);
  return std::all_of(aw.begin(), aw.end(), [k](std::size_t a) { return a == k; });
}

inline bool is_k_informing(const Schedule& s, std::size_t k) {
  return is_k_informing(simulate(s), k);
}
inline bool is_exact_k_informing(const Schedule& s, std::size_t k) {
  return is_exact_k_informing(simulate(s), k);
}
inline bool is_k_informing(const AugmentedSchedule& s, std::size_t k) {
  return is_k_informing(apply_preliminary(s), k);
}
inline bool is_exact_k_informing(const AugmentedSchedule& s, std::size_t k) {
  return is_exact_k_informing(apply_preliminary(s), k);
}

/// Word-sized knowledge masks for n <= 64. Used by the search and the lemma
/// harnesses where millions of short schedules are simulated.
namespace masks {

inline constexpr std::size_t kMaxPersons = 64;

inline void reset(std::span<std::uint64_t> know) {
  for (std::size_t p = 0; p < know.size(); ++p) know[p] = std::uint64_t{1} << p;
}

inline void apply(std::span<std::uint64_t> know, std::span<const Call> calls) {
  for (const Call& c : calls) {
    const std::uint64_t u = know[c.a] | know[c.b];
    know[c.a] = u;
    know[c.b] = u;
  }
}

inline int count(std::uint64_t m) noexcept { return __builtin_popcountll(m); }

}  // namespace masks

}  // namespace gossip
