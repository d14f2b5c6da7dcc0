#pragma once

// Empirical checks of the structural lower bounds over generated schemes.
//
// Every check has the form observed >= required. For the vertex-count bounds
// observed is the number of persons and required is the bound; for the
// awareness-gain bound (L2) observed is the number of preliminary calls and
// required is the largest gain; for the informed-count bound (L6s1) observed
// is j and required is the number of informed persons. `bound_offset` is
// added to every required value; offset 1 is the negative control and must
// produce violations wherever the bound is attained.
//
// Instance sources, per lemma:
//   L1a, L1b  tree schemes, n <= 6 exhaustive, n = 7..8 sampled, plus
//             hand-built witnesses.
//   L1c       unicyclic schemes, n <= 6 exhaustive, n = 7..8 sampled.
//   L2        every call sequence on n <= 5 persons of total length <= 6,
//             split into a preliminary prefix (1..3 calls) and a base suffix;
//             plus witnesses.
//   L3        exact k-informing trees (k >= 3, n > k) from the tree sources,
//             with every preliminary list of 1..3 calls among the tree's
//             persons (sampled when the list space exceeds the cap).
//   L4a       tree sources with 0..3 preliminary calls among tree persons.
//   L4b, L5a  tree sources with 0..3 preliminary calls that may involve new
//             persons (outsiders).
//   L5b       unicyclic sources with preliminary calls as in L4b.
//   L6s1      all call sequences on n <= 6 persons, explored as person-sorted
//             knowledge states by breadth-first search, plus witnesses.
// Exhaustive tree/unicyclic sources are combined with preliminary lists only
// while preliminary + base calls <= max_total_calls.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gossip/constructions.hpp"
#include "gossip/core.hpp"
#include "gossip/fixtures.hpp"
#include "gossip/formulas.hpp"
#include "gossip/io.hpp"
#include "gossip/oracle/enumerate.hpp"
#include "gossip/oracle/search.hpp"

namespace gossip::oracle {

enum class LemmaId { L1a, L1b, L1c, L2, L3, L4a, L4b, L5a, L5b, L6s1 };

inline constexpr std::array<LemmaId, 10> kAllLemmas{LemmaId::L1a, LemmaId::L1b, LemmaId::L1c, LemmaId::L2,
                                                    LemmaId::L3,  LemmaId::L4a, LemmaId::L4b, LemmaId::L5a,
                                                    LemmaId::L5b, LemmaId::L6s1};

inline std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1a: return "L1a";
    case LemmaId::L1b: return "L1b";
    case LemmaId::L1c: return "L1c";
    case LemmaId::L2: return "L2";
    case LemmaId::L3: return "L3";
    case LemmaId::L4a: return "L4a";
    case LemmaId::L4b: return "L4b";
    case LemmaId::L5a: return "L5a";
    case LemmaId::L5b: return "L5b";
    case LemmaId::L6s1: return "L6s1";
  }
  return "?";
}

inline std::optional<LemmaId> parse_lemma_id(std::string_view s) {
  for (LemmaId id : kAllLemmas) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

struct LemmaParams {
  std::size_t n_max_exhaustive = 6;  // tree / unicyclic sources, at most 6
  std::size_t n_max_sampled = 8;     // at most 8
  std::size_t samples = 2000;        // per sampled n
  std::size_t max_prelim = 3;
  std::size_t max_total_calls = 7;
  std::size_t sequence_n_max = 5;        // L2
  std::size_t sequence_length_max = 6;   // L2
  std::size_t state_n_max = 6;           // L6s1
  std::size_t prelim_exhaustive_cap = 300000;
  std::size_t prelim_samples = 64;
  std::uint64_t seed = 1;
  std::int64_t bound_offset = 0;
  bool include_witnesses = true;
  std::size_t max_recorded = 32;
};

struct Violation {
  AugmentedSchedule instance;
  std::int64_t expected_bound = 0;
  std::int64_t observed_n = 0;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::L1a;
  std::size_t instances_checked = 0;
  std::vector<Violation> violations;  // the first max_recorded
  std::size_t violation_count = 0;
  std::optional<std::int64_t> min_slack;  // min of observed - required

  bool ok() const noexcept { return violation_count == 0; }
};

inline io::Json to_json(const LemmaReport& r) {
  io::Json j;
  j["lemma"] = to_string(r.lemma);
  j["checked"] = r.instances_checked;
  io::Json vs = io::Json::array();
  for (const Violation& v : r.violations) {
    io::Json e;
    e["instance"] = io::to_json(v.instance);
    e["expected_bound"] = v.expected_bound;
    e["observed_n"] = v.observed_n;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  j["violation_count"] = r.violation_count;
  if (r.min_slack) j["min_slack"] = *r.min_slack;
  else j["min_slack"] = nullptr;
  return j;
}

namespace detail {

using formulas::t_value;
using formulas::detail::pow2;

class Recorder {
 public:
  Recorder(LemmaId id, const LemmaParams& p) : offset_(p.bound_offset), max_recorded_(p.max_recorded) {
    report_.lemma = id;
  }

  template <class MakeInstance>
  void check(std::int64_t observed, std::int64_t bound, MakeInstance&& make) {
    ++report_.instances_checked;
    const std::int64_t required = bound + offset_;
    const std::int64_t slack = observed - required;
    if (!report_.min_slack || slack < *report_.min_slack) report_.min_slack = slack;
    if (slack >= 0) return;
    ++report_.violation_count;
    if (report_.violations.size() < max_recorded_) report_.violations.push_back({make(), required, observed});
  }

  LemmaReport take() { return std::move(report_); }

 private:
  std::int64_t offset_;
  std::size_t max_recorded_;
  LemmaReport report_;
};

enum class Origin { Exhaustive, Sampled, Witness };

using KnowBuffer = std::array<std::uint64_t, masks::kMaxPersons>;

inline std::span<std::uint64_t> run(KnowBuffer& buf, std::size_t n, std::span<const Call> prelim,
                                    std::span<const Call> base) {
  std::span<std::uint64_t> know(buf.data(), n);
  masks::reset(know);
  masks::apply(know, prelim);
  masks::apply(know, base);
  return know;
}

inline int min_count(std::span<const std::uint64_t> know) {
  int m = 64;
  for (std::uint64_t x : know) m = std::min(m, masks::count(x));
  return m;
}

inline std::vector<Schedule> witness_trees() {
  return {fixtures::minimal_tree_k4(), fixtures::twelve_person_tree_two_preliminary().base,
          fixtures::ten_person_tree_two_preliminary().base, fixtures::pendant_extended_tree_one_preliminary().base};
}

inline std::vector<AugmentedSchedule> witness_augmented() {
  return {fixtures::minimal_tree_k4_one_preliminary(), fixtures::twelve_person_tree_two_preliminary(),
          fixtures::ten_person_tree_two_preliminary(), fixtures::pendant_extended_tree_one_preliminary(),
          fixtures::two_unicyclic_three_preliminary(), fixtures::unicyclic_plus_tree_three_preliminary()};
}

template <class F>
void for_each_tree_source(const LemmaParams& p, F&& f) {
  const std::size_t exh = std::min(p.n_max_exhaustive, kMaxExhaustiveTreeN);
  for (std::size_t n = 2; n <= exh; ++n) {
    for_each_tree_scheme(n, 0, p.seed, [&](const Schedule& s) { f(s, Origin::Exhaustive); });
  }
  for (std::size_t n = kMaxExhaustiveTreeN + 1; n <= std::min(p.n_max_sampled, kMaxSampledTreeN); ++n) {
    for_each_tree_scheme(n, p.samples, p.seed + n, [&](const Schedule& s) { f(s, Origin::Sampled); });
  }
  if (p.include_witnesses) {
    for (const Schedule& s : witness_trees()) f(s, Origin::Witness);
  }
}

template <class F>
void for_each_unicyclic_source(const LemmaParams& p, F&& f) {
  const std::size_t exh = std::min(p.n_max_exhaustive, kMaxExhaustiveTreeN);
  for (std::size_t n = 2; n <= exh; ++n) {
    for_each_unicyclic_scheme(n, 0, p.seed, [&](const Schedule& s) { f(s, Origin::Exhaustive); });
  }
  for (std::size_t n = kMaxExhaustiveTreeN + 1; n <= std::min(p.n_max_sampled, kMaxSampledTreeN); ++n) {
    for_each_unicyclic_scheme(n, p.samples, p.seed + 100 + n, [&](const Schedule& s) { f(s, Origin::Sampled); });
  }
}

inline bool list_space_within(std::size_t pairs, std::size_t len, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t t = 0; t < len; ++t) {
    if (pairs != 0 && total > cap / pairs) return false;
    total *= pairs;
  }
  return total <= cap;
}

// Relabels persons >= first_outsider by order of first appearance. Returns
// the number of distinct outsiders used.
inline std::size_t normalize_outsiders(std::vector<Call>& calls, PersonId first_outsider) {
  std::vector<std::pair<PersonId, PersonId>> map;
  auto relabel = [&](PersonId p) -> PersonId {
    if (p < first_outsider) return p;
    for (auto [from, to] : map) {
      if (from == p) return to;
    }
    const auto to = static_cast<PersonId>(first_outsider + map.size());
    map.emplace_back(p, to);
    return to;
  };
  for (Call& c : calls) {
    const PersonId a = relabel(c.a);
    const PersonId b = relabel(c.b);
    c = Call(a, b);
  }
  return map.size();
}

// Outsiders used, or nullopt if they do not appear in increasing order.
inline std::optional<std::size_t> canonical_outsiders(std::span<const Call> calls, PersonId first_outsider) {
  PersonId next = first_outsider;
  for (const Call& c : calls) {
    for (PersonId p : {c.a, c.b}) {
      if (p < next && p >= first_outsider) continue;
      if (p < first_outsider) continue;
      if (p != next) return std::nullopt;
      ++next;
    }
  }
  return next - first_outsider;
}

/// Preliminary lists of `len` calls over m tree persons plus up to
/// `outsiders` new persons. visit(span<const Call>, n_total).
template <class F>
void for_each_prelim(std::size_t m, std::size_t len, std::size_t outsiders, bool exhaustive,
                     const LemmaParams& p, std::mt19937_64& rng, F&& visit) {
  const std::size_t persons = m + outsiders;
  if (len == 0) {
    visit(std::span<const Call>{}, m);
    return;
  }
  if (persons < 2) return;
  const auto pairs = oracle::detail::all_pairs(persons);
  const auto first_outsider = static_cast<PersonId>(m);
  if (exhaustive && list_space_within(pairs.size(), len, p.prelim_exhaustive_cap)) {
    std::vector<PersonId> word(len, 0);
    std::vector<Call> calls(len);
    do {
      for (std::size_t t = 0; t < len; ++t) calls[t] = pairs[word[t]];
      const auto used = canonical_outsiders(calls, first_outsider);
      if (used) visit(std::span<const Call>(calls), m + *used);
    } while (oracle::detail::next_word(word, pairs.size()));
    return;
  }
  std::uniform_int_distribution<std::size_t> pick_pair(0, pairs.size() - 1);
  std::vector<Call> calls;
  for (std::size_t s = 0; s < p.prelim_samples; ++s) {
    calls.clear();
    const bool matching = (s % 2 == 0) && 2 * len <= persons;
    if (matching) {
      std::vector<PersonId> perm(persons);
      std::iota(perm.begin(), perm.end(), PersonId{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t t = 0; t < len; ++t) calls.emplace_back(perm[2 * t], perm[2 * t + 1]);
    } else {
      for (std::size_t t = 0; t < len; ++t) calls.push_back(pairs[pick_pair(rng)]);
    }
    const std::size_t used = normalize_outsiders(calls, first_outsider);
    visit(std::span<const Call>(calls), m + used);
  }
}

inline bool prelim_exhaustive(Origin o, std::size_t base_calls, std::size_t len, const LemmaParams& p) {
  if (o == Origin::Sampled) return false;
  if (o == Origin::Exhaustive) return base_calls + len <= p.max_total_calls;
  return true;
}

inline bool skip_combination(Origin o, std::size_t base_calls, std::size_t len, const LemmaParams& p) {
  return o == Origin::Exhaustive && base_calls + len > p.max_total_calls;
}

inline AugmentedSchedule make_instance(std::span<const Call> prelim, const Schedule& base, std::size_t n) {
  return AugmentedSchedule({prelim.begin(), prelim.end()}, Schedule(n, base.calls()));
}

// ---------------------------------------------------------------- L1a, L1b

inline LemmaReport check_tree_bound(const LemmaParams& p) {
  Recorder rec(LemmaId::L1a, p);
  KnowBuffer buf;
  for_each_tree_source(p, [&](const Schedule& s, Origin) {
    const auto know = run(buf, s.persons(), {}, s.calls());
    const int k = min_count(know);
    rec.check(static_cast<std::int64_t>(s.persons()), pow2(k - 1), [&] { return AugmentedSchedule({}, s); });
  });
  return rec.take();
}

inline LemmaReport check_tree_bound_one_weak(const LemmaParams& p) {
  Recorder rec(LemmaId::L1b, p);
  KnowBuffer buf;
  for_each_tree_source(p, [&](const Schedule& s, Origin) {
    const std::size_t n = s.persons();
    const auto know = run(buf, n, {}, s.calls());
    for (std::size_t weak = 0; weak < n; ++weak) {
      int others = 64;
      for (std::size_t q = 0; q < n; ++q) {
        if (q != weak) others = std::min(others, masks::count(know[q]));
      }
      const int kp = std::min(others, masks::count(know[weak]));
      rec.check(static_cast<std::int64_t>(n), formulas::tree_size_bound_one_weak(others, kp),
                [&] { return AugmentedSchedule({}, s); });
    }
  });
  return rec.take();
}

// ---------------------------------------------------------------- L1c

inline LemmaReport check_unicyclic_bound(const LemmaParams& p) {
  Recorder rec(LemmaId::L1c, p);
  KnowBuffer buf;
  for_each_unicyclic_source(p, [&](const Schedule& s, Origin) {
    const auto know = run(buf, s.persons(), {}, s.calls());
    const int k = min_count(know);
    if (k < 4) return;
    rec.check(static_cast<std::int64_t>(s.persons()), pow2(k - 2), [&] { return AugmentedSchedule({}, s); });
  });
  return rec.take();
}

// ---------------------------------------------------------------- L2

inline std::int64_t max_gain(std::span<const std::uint64_t> with, std::span<const std::uint64_t> without) {
  std::int64_t g = 0;
  for (std::size_t q = 0; q < with.size(); ++q) {
    g = std::max<std::int64_t>(g, masks::count(with[q]) - masks::count(without[q]));
  }
  return g;
}

inline LemmaReport check_awareness_gain(const LemmaParams& p) {
  Recorder rec(LemmaId::L2, p);
  KnowBuffer with_buf;
  KnowBuffer without_buf;
  for (std::size_t n = 2; n <= p.sequence_n_max; ++n) {
    for (std::size_t total = 1; total <= p.sequence_length_max; ++total) {
      for_each_call_sequence(n, total, [&](std::span<const Call> seq) {
        for (std::size_t ell = 1; ell <= std::min(p.max_prelim, total); ++ell) {
          const auto prelim = seq.first(ell);
          const auto base = seq.subspan(ell);
          const auto with = run(with_buf, n, prelim, base);
          const auto without = run(without_buf, n, {}, base);
          rec.check(static_cast<std::int64_t>(ell), max_gain(with, without), [&] {
            return AugmentedSchedule({prelim.begin(), prelim.end()}, Schedule(n, {base.begin(), base.end()}));
          });
        }
      });
    }
  }
  if (p.include_witnesses) {
    for (const AugmentedSchedule& a : witness_augmented()) {
      const auto with = run(with_buf, a.persons(), a.preliminary, a.base.calls());
      const auto without = run(without_buf, a.persons(), {}, a.base.calls());
      rec.check(static_cast<std::int64_t>(a.preliminary.size()), max_gain(with, without), [&] { return a; });
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------- L3

inline LemmaReport check_exact_tree_with_preliminary(const LemmaParams& p) {
  Recorder rec(LemmaId::L3, p);
  KnowBuffer buf;
  std::mt19937_64 rng(p.seed);
  for_each_tree_source(p, [&](const Schedule& s, Origin origin) {
    const std::size_t n = s.persons();
    const auto base_know = run(buf, n, {}, s.calls());
    const int k = masks::count(base_know[0]);
    if (k < 3 || static_cast<std::size_t>(k) >= n) return;
    for (std::uint64_t x : base_know) {
      if (masks::count(x) != k) return;
    }
    for (std::size_t ell = 1; ell <= p.max_prelim; ++ell) {
      const bool exhaustive = origin != Origin::Sampled;
      for_each_prelim(n, ell, 0, exhaustive, p, rng, [&](std::span<const Call> prelim, std::size_t) {
        const auto know = run(buf, n, prelim, s.calls());
        if (min_count(know) < k + static_cast<int>(ell)) return;
        rec.check(static_cast<std::int64_t>(n), pow2(k - 1) + static_cast<std::int64_t>(ell) - 1,
                  [&] { return make_instance(prelim, s, n); });
      });
    }
  });
  return rec.take();
}

// ---------------------------------------------------------------- L4a

inline LemmaReport check_tree_with_inside_preliminary(const LemmaParams& p) {
  Recorder rec(LemmaId::L4a, p);
  KnowBuffer buf;
  std::mt19937_64 rng(p.seed);
  for_each_tree_source(p, [&](const Schedule& s, Origin origin) {
    const std::size_t n = s.persons();
    if (n < 4) return;
    for (std::size_t i = 0; i <= std::min(p.max_prelim, n - 4); ++i) {
      if (skip_combination(origin, s.size(), i, p)) continue;
      const bool exhaustive = prelim_exhaustive(origin, s.size(), i, p);
      for_each_prelim(n, i, 0, exhaustive, p, rng, [&](std::span<const Call> prelim, std::size_t) {
        const auto know = run(buf, n, prelim, s.calls());
        const int k = min_count(know);
        if (k < 4 || static_cast<std::int64_t>(i) > k - 4) return;
        rec.check(static_cast<std::int64_t>(n), t_value(static_cast<std::int64_t>(i) - 1, k),
                  [&] { return make_instance(prelim, s, n); });
      });
    }
  });
  return rec.take();
}

// ---------------------------------------------------------------- L4b, L5a, L5b

// Awareness of the base graph's own vertices, sorted ascending.
inline std::vector<int> base_vertex_awareness(std::span<const std::uint64_t> know, std::size_t base_persons) {
  std::vector<int> aw(base_persons);
  for (std::size_t q = 0; q < base_persons; ++q) aw[q] = masks::count(know[q]);
  std::sort(aw.begin(), aw.end());
  return aw;
}

enum class OutsiderBound { AllInformedTree, AllButOneTree, AllInformedUnicyclic };

// Base schedule on m persons (all of them base vertices); preliminary calls
// may use up to i outsiders numbered m, m+1, ....
template <class Source>
LemmaReport check_with_outsiders(LemmaId id, OutsiderBound bound, const LemmaParams& p, Source&& source,
                                 std::span<const AugmentedSchedule> direct) {
  Recorder rec(id, p);
  KnowBuffer buf;
  std::mt19937_64 rng(p.seed);
  auto evaluate = [&](std::span<const Call> prelim, const Schedule& s, std::size_t base_persons,
                      std::size_t n_total) {
    const auto know = run(buf, n_total, prelim, s.calls());
    const auto aw = base_vertex_awareness(know, base_persons);
    const int k = bound == OutsiderBound::AllButOneTree ? (aw.size() >= 2 ? aw[1] : 64) : aw.front();
    const auto i = static_cast<std::int64_t>(prelim.size());
    if (k < 4 || i > k - 4) return;
    const std::int64_t required = bound == OutsiderBound::AllInformedTree ? t_value(i - 1, k) : t_value(i, k);
    rec.check(static_cast<std::int64_t>(n_total), required, [&] { return make_instance(prelim, s, n_total); });
  };
  source([&](const Schedule& s, Origin origin) {
    const std::size_t m = s.persons();
    for (std::size_t i = 0; i <= p.max_prelim; ++i) {
      if (skip_combination(origin, s.size(), i, p)) continue;
      const bool exhaustive = prelim_exhaustive(origin, s.size(), i, p);
      for_each_prelim(m, i, i, exhaustive, p, rng, [&](std::span<const Call> prelim, std::size_t n_total) {
        evaluate(prelim, s, m, n_total);
      });
    }
  });
  // Direct instances: base vertices are the endpoints of the base calls,
  // which must be persons [first, persons) for these witnesses.
  for (const AugmentedSchedule& a : direct) {
    PersonId lo = static_cast<PersonId>(a.persons());
    for (const Call& c : a.base.calls()) lo = std::min(lo, c.a);
    // Relabel so base vertices come first: rotate ids by -lo.
    const auto n = a.persons();
    auto shift = [&](PersonId q) { return static_cast<PersonId>((q + n - lo) % n); };
    std::vector<Call> prelim;
    std::vector<Call> base;
    for (const Call& c : a.preliminary) prelim.emplace_back(shift(c.a), shift(c.b));
    for (const Call& c : a.base.calls()) base.emplace_back(shift(c.a), shift(c.b));
    std::size_t base_persons = 0;
    for (const Call& c : base) base_persons = std::max<std::size_t>(base_persons, c.b + 1);
    evaluate(prelim, Schedule(n, std::move(base)), base_persons, n);
  }
  return rec.take();
}

// Schedules whose first i calls are X -> A and whose next 2^(k-i-2) calls
// build the tree {A} + Y, on exactly t_i(k) + 1 persons: every vertex of that
// tree except A ends k-informed.
inline std::vector<AugmentedSchedule> tree_variant_heads(std::int64_t k_max) {
  std::vector<AugmentedSchedule> out;
  for (std::int64_t k = 4; k <= k_max; ++k) {
    for (std::int64_t i = 0; i <= k - 4; ++i) {
      const std::int64_t n = t_value(i, k) + 1;
      const Schedule full = constructions::synth_tree_variant(n, k, i);
      const auto& c = full.calls();
      std::vector<Call> prelim(c.begin(), c.begin() + i);
      std::vector<Call> base(c.begin() + i, c.begin() + i + pow2(k - i - 2));
      out.emplace_back(std::move(prelim), Schedule(static_cast<std::size_t>(n), std::move(base)));
    }
  }
  return out;
}

// ---------------------------------------------------------------- L6s1

struct BandCase {
  int k;
  int i;
};

// (k, i) with 4 <= k <= n, 0 <= i <= k-4 and n <= t_{i-1}(k) - 1.
inline std::vector<BandCase> band_cases(std::size_t n) {
  std::vector<BandCase> out;
  for (int k = 4; k <= static_cast<int>(std::min<std::size_t>(n, 62)); ++k) {
    for (int i = 0; i <= k - 4; ++i) {
      if (static_cast<std::int64_t>(n) <= t_value(i - 1, k) - 1) out.push_back({k, i});
    }
  }
  return out;
}

inline int informed(std::span<const std::uint64_t> know, int k) {
  int c = 0;
  for (std::uint64_t x : know) c += masks::count(x) >= k ? 1 : 0;
  return c;
}

inline int informed(const KnowledgeState& ks, int k) {
  int c = 0;
  for (std::size_t q = 0; q < ks.persons(); ++q) c += ks.awareness(static_cast<PersonId>(q)) >= static_cast<std::size_t>(k);
  return c;
}

inline void check_sequence_prefixes(Recorder& rec, const Schedule& s) {
  const std::size_t n = s.persons();
  const auto cases = band_cases(n);
  KnowledgeState ks(n);
  for (std::size_t t = 1; t <= s.size(); ++t) {
    ks.apply(s.calls()[t - 1]);
    for (const BandCase& bc : cases) {
      const auto j = static_cast<std::int64_t>(t) - bc.i;
      if (j < 1 || j > static_cast<std::int64_t>(n)) continue;
      rec.check(j, informed(ks, bc.k), [&] { return AugmentedSchedule({}, s.prefix(t)); });
    }
  }
}

inline LemmaReport check_informed_count(const LemmaParams& p) {
  Recorder rec(LemmaId::L6s1, p);
  using Key = std::vector<std::uint64_t>;
  for (std::size_t n = 4; n <= std::min<std::size_t>(p.state_n_max, 12); ++n) {
    const auto cases = band_cases(n);
    if (cases.empty()) continue;
    std::size_t depth_max = 0;
    for (const BandCase& bc : cases) depth_max = std::max<std::size_t>(depth_max, bc.i + n);

    struct Node {
      Key know;               // labeled representative
      std::size_t parent;     // index into nodes
      Call call;              // call leading here from the parent
    };
    std::vector<Node> nodes;
    std::unordered_map<Key, std::size_t, MaskVectorHash> seen;
    Key start(n);
    masks::reset(start);
    nodes.push_back({start, 0, Call{}});
    seen.emplace(start, 0);
    const auto pairs = oracle::detail::all_pairs(n);

    auto path_of = [&](std::size_t idx) {
      std::vector<Call> calls;
      while (idx != 0) {
        calls.push_back(nodes[idx].call);
        idx = nodes[idx].parent;
      }
      std::reverse(calls.begin(), calls.end());
      return calls;
    };

    std::size_t level_begin = 0;
    std::size_t level_end = 1;
    for (std::size_t depth = 1; depth <= depth_max; ++depth) {
      for (std::size_t idx = level_begin; idx < level_end; ++idx) {
        for (const Call& c : pairs) {
          if (nodes[idx].know[c.a] == nodes[idx].know[c.b]) continue;  // no-op: state already seen
          Key next = nodes[idx].know;
          next[c.a] = next[c.b] = next[c.a] | next[c.b];
          Key key = next;
          std::sort(key.begin(), key.end());
          if (seen.contains(key)) continue;
          seen.emplace(std::move(key), nodes.size());
          nodes.push_back({std::move(next), idx, c});
        }
      }
      level_begin = level_end;
      level_end = nodes.size();
      // A state first reached after `depth` calls is reachable after any
      // larger number of calls (repeat the last call), so checking it at the
      // smallest admissible j is the strongest test.
      for (std::size_t idx = level_begin; idx < level_end; ++idx) {
        for (const BandCase& bc : cases) {
          const auto j = std::max<std::int64_t>(1, static_cast<std::int64_t>(depth) - bc.i);
          if (j > static_cast<std::int64_t>(n)) continue;
          rec.check(j, informed(nodes[idx].know, bc.k), [&] {
            auto calls = path_of(idx);
            const Call last = calls.back();
            while (static_cast<std::int64_t>(calls.size()) < bc.i + j) calls.push_back(last);
            return AugmentedSchedule({}, Schedule(n, std::move(calls)));
          });
        }
      }
    }
  }
  if (p.include_witnesses) {
    for (const AugmentedSchedule& a : witness_augmented()) check_sequence_prefixes(rec, a.flattened());
    for (std::int64_t k = 4; k <= 7; ++k) {
      for (std::int64_t i = 0; i <= k - 4; ++i) {
        for (std::int64_t n = t_value(i, k); n < t_value(i - 1, k); ++n) {
          check_sequence_prefixes(rec, constructions::synth_doubling(n, k, i));
          if (n >= t_value(i, k) + 1) check_sequence_prefixes(rec, constructions::synth_tree_variant(n, k, i));
          if (const auto b = constructions::max_feasible_blocks(n, k, i); b > 1) {
            check_sequence_prefixes(rec, constructions::synth_multiblock(n, k, i, b));
          }
        }
      }
    }
  }
  return rec.take();
}

}  // namespace detail

/// Runs one lemma's checker over its instance sources.
inline LemmaReport check_lemma(LemmaId id, const LemmaParams& p = {}) {
  using namespace detail;
  const std::vector<AugmentedSchedule> none;
  switch (id) {
    case LemmaId::L1a: return check_tree_bound(p);
    case LemmaId::L1b: return check_tree_bound_one_weak(p);
    case LemmaId::L1c: return check_unicyclic_bound(p);
    case LemmaId::L2: return check_awareness_gain(p);
    case LemmaId::L3: return check_exact_tree_with_preliminary(p);
    case LemmaId::L4a: return check_tree_with_inside_preliminary(p);
    case LemmaId::L4b: {
      std::vector<AugmentedSchedule> direct;
      if (p.include_witnesses) direct.push_back(fixtures::minimal_tree_k4_one_preliminary());
      return check_with_outsiders(id, OutsiderBound::AllInformedTree, p,
                                  [&](auto&& f) { for_each_tree_source(p, f); }, direct);
    }
    case LemmaId::L5a: {
      std::vector<AugmentedSchedule> direct;
      if (p.include_witnesses) {
        direct.push_back(fixtures::pendant_extended_tree_one_preliminary());
        for (auto& a : tree_variant_heads(8)) direct.push_back(std::move(a));
      }
      return check_with_outsiders(id, OutsiderBound::AllButOneTree, p,
                                  [&](auto&& f) { for_each_tree_source(p, f); }, direct);
    }
    case LemmaId::L5b:
      return check_with_outsiders(id, OutsiderBound::AllInformedUnicyclic, p,
                                  [&](auto&& f) { for_each_unicyclic_source(p, f); }, none);
    case LemmaId::L6s1: return check_informed_count(p);
  }
  throw DomainError("unknown lemma id");
}

}  // namespace gossip::oracle
