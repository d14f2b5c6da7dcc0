#include <gtest/gtest.h>

#include "gossip/core.hpp"
#include "gossip/fixtures.hpp"

using namespace gossip;

TEST(Call, NormalizesEndpoints) {
  const Call c(3, 1);
  EXPECT_EQ(c.a, 1u);
  EXPECT_EQ(c.b, 3u);
  EXPECT_TRUE(c.involves(3));
  EXPECT_FALSE(c.involves(2));
  EXPECT_THROW(Call(2, 2), ValidationError);
}

TEST(Schedule, RejectsOutOfRangePersons) {
  EXPECT_THROW(Schedule(3, {{0, 3}}), ValidationError);
  EXPECT_THROW(Schedule(0, {}), ValidationError);
  EXPECT_NO_THROW(Schedule(1, {}));
}

TEST(Schedule, PrefixKeepsPersons) {
  const Schedule s(4, {{0, 1}, {2, 3}, {1, 2}});
  const Schedule p = s.prefix(2);
  EXPECT_EQ(p.persons(), 4u);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], Call(2, 3));
}

TEST(KnowledgeState, InitialStateIsDiagonal) {
  const KnowledgeState ks(5);
  for (PersonId p = 0; p < 5; ++p) {
    EXPECT_EQ(ks.awareness(p), 1u);
    EXPECT_TRUE(ks.knows(p, p));
    EXPECT_FALSE(ks.knows(p, (p + 1) % 5));
  }
}

TEST(KnowledgeState, CallMergesBothSides) {
  KnowledgeState ks(4);
  ks.apply(Call(0, 1));
  ks.apply(Call(1, 2));
  EXPECT_EQ(ks.awareness(0), 2u);
  EXPECT_EQ(ks.awareness(1), 3u);
  EXPECT_EQ(ks.awareness(2), 3u);
  EXPECT_EQ(ks.known_by(1), ks.known_by(2));
  EXPECT_EQ(ks.awareness(3), 1u);
}

TEST(Simulate, PathFourPersons) {
  // 0-1, 1-2, 2-3: awareness 2, 3, 4, 4
  const auto aw = awareness(simulate(Schedule(4, {{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_EQ(aw, (std::vector<std::size_t>{2, 3, 4, 4}));
}

TEST(Simulate, EmptyScheduleSinglePerson) {
  const Schedule s(1, {});
  EXPECT_EQ(min_awareness(simulate(s)), 1u);
  EXPECT_TRUE(is_k_informing(s, 1));
  EXPECT_TRUE(is_exact_k_informing(s, 1));
}

TEST(Informing, LevelOutOfRangeIsValidationError) {
  const Schedule s(3, {{0, 1}});
  EXPECT_THROW((void)is_k_informing(s, 0), ValidationError);
  EXPECT_THROW((void)is_k_informing(s, 4), ValidationError);
}

TEST(Informing, ExactVersusAtLeast) {
  const Schedule s(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_k_informing(s, 2));
  EXPECT_FALSE(is_exact_k_informing(s, 2));
  EXPECT_FALSE(is_k_informing(s, 3));
}

TEST(Informing, MinimalTreeFixture) {
  const Schedule t = fixtures::minimal_tree_k4();
  EXPECT_TRUE(is_exact_k_informing(t, 4));
  const AugmentedSchedule a = fixtures::minimal_tree_k4_one_preliminary();
  EXPECT_TRUE(is_exact_k_informing(a, 5));
  EXPECT_EQ(a.flattened().size(), 8u);
  EXPECT_EQ(a.flattened()[0], Call(2, 3));
}

TEST(AugmentedSchedule, ValidatesPreliminaryIds) {
  EXPECT_THROW(AugmentedSchedule({{0, 9}}, Schedule(4, {})), ValidationError);
}

// Monotonicity: awareness never decreases along a schedule, and after a call
// both participants hold the same set.
TEST(Simulate, MonotoneAndEqualAfterCall) {
  const auto s = fixtures::two_unicyclic_three_preliminary().flattened();
  KnowledgeState ks(s.persons());
  std::vector<std::size_t> prev = awareness(ks);
  for (const Call& c : s.calls()) {
    ks.apply(c);
    EXPECT_EQ(ks.known_by(c.a), ks.known_by(c.b));
    const auto now = awareness(ks);
    for (std::size_t p = 0; p < now.size(); ++p) EXPECT_GE(now[p], prev[p]);
    prev = now;
  }
}

// Every gossip stays with its owner; the number of (person, gossip) pairs
// grows by |A \ B| + |B \ A| per call.
TEST(Simulate, PairCountConservation) {
  const auto s = fixtures::unicyclic_plus_tree_three_preliminary().flattened();
  KnowledgeState ks(s.persons());
  auto total = [&] {
    std::size_t t = 0;
    for (std::size_t a : awareness(ks)) t += a;
    return t;
  };
  for (const Call& c : s.calls()) {
    const auto ka = ks.known_by(c.a);
    const auto kb = ks.known_by(c.b);
    const std::size_t expected = total() + (ka - kb).count() + (kb - ka).count();
    ks.apply(c);
    EXPECT_EQ(total(), expected);
    for (PersonId p = 0; p < s.persons(); ++p) EXPECT_TRUE(ks.knows(p, p));
  }
}

TEST(Masks, AgreesWithKnowledgeState) {
  const auto s = fixtures::twelve_person_tree_two_preliminary().flattened();
  std::vector<std::uint64_t> know(s.persons());
  masks::reset(know);
  masks::apply(know, s.calls());
  const auto aw = awareness(simulate(s));
  for (std::size_t p = 0; p < aw.size(); ++p) EXPECT_EQ(static_cast<std::size_t>(masks::count(know[p])), aw[p]);
}
