#include <gtest/gtest.h>

#include "gossip/fixtures.hpp"
#include "gossip/oracle/lemmas.hpp"

using namespace gossip;
using namespace gossip::oracle;

namespace {

LemmaParams small(std::int64_t offset = 0) {
  LemmaParams p;
  p.n_max_exhaustive = 5;
  p.n_max_sampled = 7;
  p.samples = 100;
  p.max_total_calls = 6;
  p.sequence_n_max = 4;
  p.sequence_length_max = 5;
  p.state_n_max = 5;
  p.prelim_samples = 16;
  p.bound_offset = offset;
  return p;
}

}  // namespace

TEST(LemmaId, RoundTrip) {
  for (LemmaId id : kAllLemmas) EXPECT_EQ(parse_lemma_id(to_string(id)), id);
  EXPECT_FALSE(parse_lemma_id("L7"));
}

class EveryLemma : public ::testing::TestWithParam<LemmaId> {};

TEST_P(EveryLemma, HoldsOnSmallRangesAndControlFails) {
  const LemmaReport ok = check_lemma(GetParam(), small());
  EXPECT_GT(ok.instances_checked, 0u);
  EXPECT_EQ(ok.violation_count, 0u);
  EXPECT_TRUE(ok.violations.empty());
  const LemmaReport control = check_lemma(GetParam(), small(1));
  EXPECT_EQ(control.instances_checked, ok.instances_checked);
  EXPECT_GE(control.violation_count, 1u);
  EXPECT_LE(control.violations.size(), small().max_recorded);
  ASSERT_TRUE(ok.min_slack);
  EXPECT_EQ(*ok.min_slack, 0);
}

INSTANTIATE_TEST_SUITE_P(All, EveryLemma, ::testing::ValuesIn(kAllLemmas),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(LemmaReport, JsonShape) {
  LemmaParams p = small(1);
  p.max_recorded = 2;
  const LemmaReport r = check_lemma(LemmaId::L1a, p);
  const io::Json j = to_json(r);
  EXPECT_EQ(j["lemma"], "L1a");
  EXPECT_EQ(j["checked"], r.instances_checked);
  ASSERT_EQ(j["violations"].size(), 2u);
  const auto& v = j["violations"][0];
  EXPECT_TRUE(v.contains("instance"));
  EXPECT_EQ(v["observed_n"].get<std::int64_t>() + 1, v["expected_bound"].get<std::int64_t>());
  // every recorded instance replays to the reported awareness
  for (const Violation& viol : r.violations) {
    const auto k = min_awareness(apply_preliminary(viol.instance));
    EXPECT_EQ(std::int64_t{1} << (k - 1), viol.expected_bound - 1);
  }
  EXPECT_EQ(j.size(), 5u);
}

// The control violation for the tree bound includes the 8-person witness.
TEST(Witnesses, MinimalTreeAttainsTreeBound) {
  LemmaParams p = small(1);
  p.n_max_exhaustive = 2;
  p.n_max_sampled = 0;
  p.max_recorded = 100;
  const LemmaReport r = check_lemma(LemmaId::L1a, p);
  bool found = false;
  for (const Violation& v : r.violations) found |= v.instance.base == fixtures::minimal_tree_k4();
  EXPECT_TRUE(found);
}

TEST(Witnesses, PendantTreeAttainsAllButOneBound) {
  LemmaParams p = small(1);
  p.n_max_exhaustive = 2;
  p.n_max_sampled = 0;
  p.max_prelim = 0;
  p.max_recorded = 1000;
  const LemmaReport r = check_lemma(LemmaId::L5a, p);
  bool found = false;
  for (const Violation& v : r.violations) found |= v.observed_n == 9 && v.expected_bound == 10;
  EXPECT_TRUE(found);
}

TEST(Witnesses, GainOfOnePreliminaryCall) {
  const auto a = fixtures::minimal_tree_k4_one_preliminary();
  const auto with = awareness(apply_preliminary(a));
  const auto without = awareness(simulate(a.base));
  std::size_t gain = 0;
  for (std::size_t q = 0; q < with.size(); ++q) gain = std::max(gain, with[q] - without[q]);
  EXPECT_EQ(gain, 1u);
}

TEST(Witnesses, TwelvePersonTreeAboveExactBound) {
  const auto a = fixtures::twelve_person_tree_two_preliminary();
  EXPECT_TRUE(is_exact_k_informing(a.base, 4));
  EXPECT_TRUE(is_exact_k_informing(a, 6));
  const std::int64_t bound = (std::int64_t{1} << 3) + 2 - 1;
  EXPECT_EQ(bound, 9);
  EXPECT_GE(static_cast<std::int64_t>(a.persons()), bound);
}

TEST(BandCases, MatchThresholds) {
  // n = 6: k = 5 needs t_{i-1}(5) > 6, so i = 0 (t_{-1} = 15) and i = 1 (t_0 = 8)
  const auto cases = oracle::detail::band_cases(6);
  std::size_t k5 = 0;
  for (const auto& c : cases) k5 += c.k == 5 ? 1 : 0;
  EXPECT_EQ(k5, 2u);
}
