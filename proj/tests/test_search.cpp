#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gossip/fixtures.hpp"
#include "gossip/formulas.hpp"
#include "gossip/oracle/enumerate.hpp"
#include "gossip/oracle/search.hpp"

using namespace gossip;
using namespace gossip::oracle;

namespace {

using Masks = std::vector<std::uint64_t>;

Masks random_state(std::size_t n, std::size_t calls, std::mt19937_64& rng) {
  Masks know(n);
  masks::reset(know);
  std::uniform_int_distribution<PersonId> pick(0, static_cast<PersonId>(n - 1));
  for (std::size_t t = 0; t < calls; ++t) {
    const PersonId a = pick(rng);
    PersonId b = pick(rng);
    while (b == a) b = pick(rng);
    know[a] = know[b] = know[a] | know[b];
  }
  return know;
}

// Sorted awareness profiles reachable from `know` in exactly `depth` calls.
std::set<std::vector<int>> profiles(const Masks& know, std::size_t depth) {
  std::set<std::vector<int>> out;
  if (depth == 0) {
    std::vector<int> aw;
    for (std::uint64_t m : know) aw.push_back(masks::count(m));
    std::sort(aw.begin(), aw.end());
    out.insert(aw);
    return out;
  }
  for (PersonId a = 0; a < know.size(); ++a) {
    for (PersonId b = a + 1; b < know.size(); ++b) {
      Masks next = know;
      next[a] = next[b] = know[a] | know[b];
      out.merge(profiles(next, depth - 1));
    }
  }
  return out;
}

// Plain breadth-first search over sorted knowledge multisets: every call
// from every state, no bounds and no candidate reduction.
std::size_t bfs_min_calls(std::size_t n, int k) {
  std::set<Masks> level;
  Masks start(n);
  masks::reset(start);
  level.insert(start);
  for (std::size_t depth = 0;; ++depth) {
    std::set<Masks> next;
    for (const Masks& know : level) {
      if (std::all_of(know.begin(), know.end(), [&](std::uint64_t m) { return masks::count(m) >= k; })) {
        return depth;
      }
      for (PersonId a = 0; a < n; ++a) {
        for (PersonId b = a + 1; b < n; ++b) {
          Masks after = know;
          after[a] = after[b] = know[a] | know[b];
          std::sort(after.begin(), after.end());
          next.insert(std::move(after));
        }
      }
    }
    level = std::move(next);
  }
}

SearchConfig quick(double secs = 30) {
  SearchConfig cfg;
  cfg.time_budget = std::chrono::duration<double>(secs);
  return cfg;
}

}  // namespace

TEST(Search, TrivialPair) {
  const auto r = min_calls_bruteforce(2, 2, quick());
  ASSERT_TRUE(r.min_calls);
  EXPECT_EQ(*r.min_calls, 1u);
}

TEST(Search, FourThreeWithWitness) {
  const auto r = min_calls_bruteforce(4, 3, quick());
  ASSERT_TRUE(r.min_calls);
  EXPECT_EQ(*r.min_calls, 3u);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_k_informing(*r.witness, 3));
  EXPECT_EQ(*r.refuted_through, 2u);
  EXPECT_TRUE(is_k_informing(Schedule(4, {{0, 1}, {0, 2}, {1, 3}}), 3));
}

// Independent check of the depth-2 refutation for (4,3): no two-call
// sequence leaves everyone with three gossips.
TEST(Search, FourThreeNoTwoCallSchedule) {
  for_each_call_sequence(4, 2, [](std::span<const Call> c) {
    EXPECT_FALSE(is_k_informing(Schedule(4, {c.begin(), c.end()}), 3));
  });
}

TEST(Search, AgreesWithFormulaUpToFive) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      const auto r = min_calls_bruteforce(n, k, quick());
      ASSERT_TRUE(r.min_calls) << n << " " << k;
      EXPECT_EQ(static_cast<std::int64_t>(*r.min_calls), formulas::p_min_calls(n, k)) << n << " " << k;
      EXPECT_TRUE(is_k_informing(*r.witness, k));
      EXPECT_EQ(r.witness->size(), *r.min_calls);
    }
  }
}

TEST(Search, AgreesWithPlainBreadthFirst) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      const auto r = min_calls_bruteforce(n, k, quick());
      ASSERT_TRUE(r.min_calls);
      EXPECT_EQ(*r.min_calls, bfs_min_calls(n, static_cast<int>(k))) << n << " " << k;
    }
  }
  for (std::size_t k : {3u, 4u}) {
    const auto r = min_calls_bruteforce(7, k, quick());
    ASSERT_TRUE(r.min_calls);
    EXPECT_EQ(*r.min_calls, bfs_min_calls(7, static_cast<int>(k)));
  }
}

TEST(Search, CanonicalAndPlainAgree) {
  SearchConfig plain = quick();
  plain.canonicalize = false;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      const auto a = min_calls_bruteforce(n, k, quick());
      const auto b = min_calls_bruteforce(n, k, plain);
      ASSERT_TRUE(a.min_calls && b.min_calls);
      EXPECT_EQ(*a.min_calls, *b.min_calls) << n << " " << k;
    }
  }
  SearchConfig raw = plain;
  raw.prune_noop_calls = false;
  const auto c = min_calls_bruteforce(4, 4, raw);
  ASSERT_TRUE(c.min_calls);
  EXPECT_EQ(*c.min_calls, 4u);
}

// States with the same sorted multiset of knowledge sets reach the same
// awareness profiles at every depth.
TEST(Search, CanonicalStatesReExpandIdentically) {
  std::mt19937_64 rng(11);
  const std::size_t n = 5;
  std::map<Masks, std::vector<Masks>> by_key;
  for (int s = 0; s < 400; ++s) {
    Masks know = random_state(n, s % 6, rng);
    std::shuffle(know.begin(), know.end(), rng);
    Masks key = know;
    std::sort(key.begin(), key.end());
    by_key[key].push_back(know);
  }
  std::size_t compared = 0;
  for (const auto& [key, group] : by_key) {
    if (group.size() < 2) continue;
    for (std::size_t depth = 0; depth <= 2; ++depth) {
      const auto ref = profiles(group.front(), depth);
      for (std::size_t g = 1; g < std::min<std::size_t>(group.size(), 4); ++g) {
        EXPECT_EQ(profiles(group[g], depth), ref);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 10u);
}

TEST(Search, TimeoutNeverReportsANumber) {
  SearchConfig cfg;
  cfg.time_budget = std::chrono::duration<double>(0.001);
  cfg.memo_capacity = 16;
  const auto r = min_calls_bruteforce(12, 7, cfg);
  EXPECT_TRUE(r.timed_out);
  EXPECT_FALSE(r.min_calls);
  EXPECT_FALSE(r.witness);
}

TEST(Search, DepthLimitLeavesResultEmpty) {
  SearchConfig cfg = quick();
  cfg.max_depth = 2;
  const auto r = min_calls_bruteforce(4, 4, cfg);
  EXPECT_FALSE(r.min_calls);
  EXPECT_FALSE(r.timed_out);
  EXPECT_EQ(*r.refuted_through, 2u);
}

TEST(Search, DomainErrors) {
  EXPECT_THROW(min_calls_bruteforce(3, 4), DomainError);
  EXPECT_THROW(min_calls_bruteforce(3, 1), DomainError);
  EXPECT_THROW(min_calls_bruteforce(65, 2), DomainError);
  SearchConfig cfg;
  cfg.time_budget = std::chrono::duration<double>(0);
  EXPECT_THROW(min_calls_bruteforce(4, 2, cfg), DomainError);
}

TEST(LruMap, EvictsLeastRecentlyUsed) {
  LruMap<int, int> m(2);
  m.put(1, 10);
  m.put(2, 20);
  ASSERT_NE(m.find(1), nullptr);
  m.put(3, 30);
  EXPECT_EQ(m.find(2), nullptr);
  EXPECT_EQ(*m.find(1), 10);
  EXPECT_EQ(*m.find(3), 30);
  EXPECT_EQ(m.size(), 2u);
}

TEST(MaxInformingLevel, Examples) {
  EXPECT_EQ(max_informing_level(fixtures::minimal_tree_k4()), 4u);
  EXPECT_EQ(max_informing_level(Schedule(1, {})), 1u);
  EXPECT_EQ(max_informing_level(Schedule(4, {{0, 1}, {0, 2}, {0, 3}})), 2u);
  EXPECT_EQ(max_informing_level(fixtures::minimal_tree_k4_one_preliminary()), 5u);
}
