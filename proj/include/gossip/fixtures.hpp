#pragma once

// Small hand-built schemes that show how preliminary calls raise awareness
// and what tight instances of the lower bounds look like. Thicker-is-earlier
// drawings translate to the chronological order used here; calls of equal
// rank touch disjoint persons, so their relative order is immaterial.

#include "gossip/core.hpp"

namespace gossip::fixtures {

/// A minimal 4-informing tree on 8 persons: hubs 0..3, pendants 4..7.
/// Every person ends with exactly 4 gossips.
inline Schedule minimal_tree_k4() {
  return Schedule(8, {{0, 1}, {0, 2}, {1, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

/// The minimal tree with one preliminary call between hubs 2 and 3: every
/// person ends with exactly 5 gossips.
inline AugmentedSchedule minimal_tree_k4_one_preliminary() {
  return AugmentedSchedule({{2, 3}}, minimal_tree_k4());
}

/// Exact 4-informing tree on 12 persons where two preliminary calls give
/// everyone exactly 6 gossips.
///   0,1 = left pair, 2,3 = middle, 4,5 = hubs, 6,7 = outer hubs,
///   8..11 = pendants of 4, 6, 5, 7.
inline AugmentedSchedule twelve_person_tree_two_preliminary() {
  Schedule base(12, {{0, 1},
                     {2, 4}, {3, 5},
                     {0, 2}, {4, 6}, {1, 3}, {5, 7},
                     {4, 8}, {6, 9}, {5, 10}, {7, 11}});
  return AugmentedSchedule({{4, 5}, {2, 3}}, std::move(base));
}

/// Exact 4-informing tree on 10 persons where two preliminary calls give
/// everyone exactly 6 gossips.
///   0 = a, 1 = b, 2 = c, 3 = d, 4 = e, 5 = f, 6 = p, 7 = q, 8 = r, 9 = s.
inline AugmentedSchedule ten_person_tree_two_preliminary() {
  Schedule base(10, {{0, 1},
                     {1, 3}, {2, 6},
                     {6, 8},
                     {6, 7}, {8, 9}, {1, 5}, {3, 4}, {0, 2}});
  return AugmentedSchedule({{0, 8}, {2, 3}}, std::move(base));
}

/// Two disjoint unicyclic components (a 4-cycle with four pendants each) and
/// three preliminary calls joining them: all 16 persons become 8-informed
/// after 3 + 16 calls.
///   left hubs 0..3, left pendants 4..7, right hubs 8..11, right pendants 12..15.
/// Hub layout per side: h0 h1 on top, h2 h3 below.
inline AugmentedSchedule two_unicyclic_three_preliminary() {
  std::vector<Call> base;
  for (PersonId off : {0u, 8u}) {
    base.emplace_back(off + 0, off + 2);
    base.emplace_back(off + 1, off + 3);
  }
  for (PersonId off : {0u, 8u}) {
    base.emplace_back(off + 0, off + 1);
    base.emplace_back(off + 2, off + 3);
  }
  for (PersonId off : {0u, 8u}) {
    for (PersonId h = 0; h < 4; ++h) base.emplace_back(off + h, off + 4 + h);
  }
  return AugmentedSchedule({{1, 8}, {3, 10}, {0, 11}}, Schedule(16, std::move(base)));
}

/// A unicyclic component plus a tree component, with three preliminary
/// calls: after 3 + 16 calls all persons except person 16 are 8-informed.
/// Layout as in two_unicyclic_three_preliminary, plus person 16 attached to
/// right hub 8 by the first base call; the right side has only one of its
/// two vertical calls.
inline AugmentedSchedule unicyclic_plus_tree_three_preliminary() {
  std::vector<Call> base;
  base.emplace_back(8, 16);
  base.emplace_back(0, 2);
  base.emplace_back(1, 3);
  base.emplace_back(8, 10);
  for (PersonId off : {0u, 8u}) {
    base.emplace_back(off + 0, off + 1);
    base.emplace_back(off + 2, off + 3);
  }
  for (PersonId off : {0u, 8u}) {
    for (PersonId h = 0; h < 4; ++h) base.emplace_back(off + h, off + 4 + h);
  }
  return AugmentedSchedule({{1, 8}, {3, 10}, {0, 16}}, Schedule(17, std::move(base)));
}

/// The minimal 4-tree with an extra leaf 8 that calls hub 0 before anything
/// else, plus the hub preliminary call: everyone except the leaf ends with
/// exactly 6 gossips on 9 persons.
inline AugmentedSchedule pendant_extended_tree_one_preliminary() {
  std::vector<Call> base{{0, 8}};
  const auto tree = minimal_tree_k4().calls();
  base.insert(base.end(), tree.begin(), tree.end());
  return AugmentedSchedule({{2, 3}}, Schedule(9, std::move(base)));
}

}  // namespace gossip::fixtures
