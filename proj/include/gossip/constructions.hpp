#pragma once

// Deterministic schedules with exactly n + i calls for t_i(k) <= n < t_{i-1}(k).
//
// Person layout (fixed, so output is reproducible byte for byte):
//   doubling:      X = [0, i), Y = next 2^(k-i-2) persons, the rest after Y.
//   tree variant:  X = [0, i), A = i, Y = next 2^(k-i-2), Z = the rest.
//   multi block:   X = [0, i), A = i, Y_1, Y_2, ... of sizes 2^(k-i-2),
//                  2^(k-i-3), ..., then Z.
// Within a doubling round calls are emitted in increasing member order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gossip/core.hpp"
#include "gossip/formulas.hpp"

namespace gossip::constructions {

enum class Method { Doubling, TreeVariant, MultiBlock };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Doubling: return "doubling";
    case Method::TreeVariant: return "tree";
    case Method::MultiBlock: return "multiblock";
  }
  return "?";
}

struct SynthPlan {
  Method method = Method::Doubling;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::vector<std::int64_t> block_sizes;  // MultiBlock only
};

namespace detail {

inline void check_common(std::int64_t n, std::int64_t k, std::int64_t i) {
  if (k < 4) throw DomainError("constructions need k >= 4");
  formulas::detail::check_k(k);
  if (i < 0 || i > k - 4) {
    throw DomainError("band index i = " + std::to_string(i) + " outside [0, " + std::to_string(k - 4) + "]");
  }
  if (n > static_cast<std::int64_t>(UINT32_MAX)) throw DomainError("n too large for person ids");
}

// Doubling rounds over block[0..size): round r pairs member m with m + 2^r
// for m < 2^r, starting at round `first_round`.
inline void doubling_rounds(std::vector<Call>& out, PersonId base, std::int64_t size, int first_round) {
  for (std::int64_t half = std::int64_t{1} << first_round; 2 * half <= size; half *= 2) {
    for (std::int64_t m = 0; m < half; ++m) {
      out.emplace_back(base + static_cast<PersonId>(m), base + static_cast<PersonId>(m + half));
    }
  }
}

}  // namespace detail

/// X calls y_1, a 4-cycle on y_1..y_4, doubling rounds across Y, then y_1
/// calls everyone outside Y.
inline Schedule synth_doubling(std::int64_t n, std::int64_t k, std::int64_t i) {
  detail::check_common(n, k, i);
  if (formulas::t_value(i, k) > n) {
    throw DomainError("doubling needs n >= t_i(k) = " + std::to_string(formulas::t_value(i, k)));
  }
  const std::int64_t ysize = formulas::detail::pow2(k - i - 2);
  const auto y = [&](std::int64_t m) { return static_cast<PersonId>(i + m); };  // m is 0-based
  std::vector<Call> calls;
  calls.reserve(static_cast<std::size_t>(n + i));
  for (std::int64_t x = 0; x < i; ++x) calls.emplace_back(static_cast<PersonId>(x), y(0));
  calls.emplace_back(y(0), y(1));
  calls.emplace_back(y(2), y(3));
  calls.emplace_back(y(0), y(2));
  calls.emplace_back(y(1), y(3));
  detail::doubling_rounds(calls, y(0), ysize, 2);
  for (std::int64_t p = 0; p < n; ++p) {
    if (p < i || p >= i + ysize) calls.emplace_back(y(0), static_cast<PersonId>(p));
  }
  return Schedule(static_cast<std::size_t>(n), std::move(calls));
}

/// Sizes 2^(k-i-2), 2^(k-i-3), ... of the first `blocks` blocks.
inline std::vector<std::int64_t> block_sizes(std::int64_t k, std::int64_t i, std::int64_t blocks) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t j = 1; j <= blocks; ++j) {
    if (k - i - 1 - j < 0) throw DomainError("block " + std::to_string(j) + " would be empty");
    sizes.push_back(formulas::detail::pow2(k - i - 1 - j));
  }
  return sizes;
}

/// Feasibility of the multi-block construction: n >= t_i(k) + 1,
/// i + 1 + (sum of block sizes) <= n, and n < t_{i-1}(k).
inline bool multiblock_feasible(std::int64_t n, std::int64_t k, std::int64_t i, std::int64_t blocks) {
  if (k < 4 || k > formulas::kMaxK || i < 0 || i > k - 4 || blocks < 1) return false;
  if (blocks > k - i - 1) return false;
  if (n < formulas::t_value(i, k) + 1 || n >= formulas::t_value(i - 1, k)) return false;
  std::int64_t used = i + 1;
  for (std::int64_t s : block_sizes(k, i, blocks)) used += s;
  return used <= n;
}

/// Largest feasible block count, or 0 when even one block does not fit.
inline std::int64_t max_feasible_blocks(std::int64_t n, std::int64_t k, std::int64_t i) {
  std::int64_t best = 0;
  for (std::int64_t b = 1; b <= k - i - 1; ++b) {
    if (multiblock_feasible(n, k, i, b)) best = b;
  }
  return best;
}

namespace detail {

inline Schedule synth_blocks(std::int64_t n, std::int64_t i, const std::vector<std::int64_t>& sizes) {
  const auto a = static_cast<PersonId>(i);
  std::vector<Call> calls;
  calls.reserve(static_cast<std::size_t>(n + i));
  for (std::int64_t x = 0; x < i; ++x) calls.emplace_back(static_cast<PersonId>(x), a);
  std::int64_t next = i + 1;
  const auto y1 = static_cast<PersonId>(next);
  for (std::int64_t size : sizes) {
    const auto head = static_cast<PersonId>(next);
    calls.emplace_back(a, head);
    doubling_rounds(calls, head, size, 0);
    next += size;
  }
  for (std::int64_t z = next; z < n; ++z) calls.emplace_back(y1, static_cast<PersonId>(z));
  for (std::int64_t x = 0; x < i; ++x) calls.emplace_back(y1, static_cast<PersonId>(x));
  calls.emplace_back(y1, a);
  return Schedule(static_cast<std::size_t>(n), std::move(calls));
}

}  // namespace detail

/// X calls A, A calls y_1, doubling across Y from a single informed member,
/// y_1 calls Z, then y_1 calls X and A. The first n-1 calls form a spanning
/// tree.
inline Schedule synth_tree_variant(std::int64_t n, std::int64_t k, std::int64_t i) {
  detail::check_common(n, k, i);
  if (formulas::t_value(i, k) + 1 > n) {
    throw DomainError("tree variant needs n >= t_i(k) + 1 = " + std::to_string(formulas::t_value(i, k) + 1));
  }
  return detail::synth_blocks(n, i, block_sizes(k, i, 1));
}

/// Tree variant with extra blocks Y_2, Y_3, ... each started by a call from
/// A. `blocks` defaults to the largest feasible count.
inline Schedule synth_multiblock(std::int64_t n, std::int64_t k, std::int64_t i,
                                 std::optional<std::int64_t> blocks = std::nullopt) {
  detail::check_common(n, k, i);
  const std::int64_t b = blocks.value_or(max_feasible_blocks(n, k, i));
  if (!multiblock_feasible(n, k, i, b)) {
    throw DomainError("multiblock with " + std::to_string(b) + " block(s) is infeasible for n = " +
                      std::to_string(n) + ", k = " + std::to_string(k) + ", i = " + std::to_string(i));
  }
  return detail::synth_blocks(n, i, block_sizes(k, i, b));
}

inline Schedule synth(const SynthPlan& plan) {
  switch (plan.method) {
    case Method::Doubling: return synth_doubling(plan.n, plan.k, plan.i);
    case Method::TreeVariant: return synth_tree_variant(plan.n, plan.k, plan.i);
    case Method::MultiBlock: {
      if (plan.block_sizes.empty()) return synth_multiblock(plan.n, plan.k, plan.i);
      const auto b = static_cast<std::int64_t>(plan.block_sizes.size());
      if (plan.block_sizes != block_sizes(plan.k, plan.i, b)) {
        throw DomainError("block sizes must halve starting from 2^(k-i-2)");
      }
      return synth_multiblock(plan.n, plan.k, plan.i, b);
    }
  }
  throw DomainError("unknown method");
}

}  // namespace gossip::constructions
