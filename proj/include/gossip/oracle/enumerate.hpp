#pragma once

// Scheme enumerators for the lemma harnesses.
//
// Tree schemes are (labeled spanning tree, chronological edge order) pairs:
// trees come from Prüfer sequences, orders from permutations. Exhaustive for
// n <= 6 (n^(n-2) * (n-1)! schemes), uniformly sampled for n in {7, 8}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "gossip/core.hpp"
#include "gossip/graph.hpp"

namespace gossip::oracle {

inline constexpr std::size_t kMaxExhaustiveTreeN = 6;
inline constexpr std::size_t kMaxSampledTreeN = 8;

struct EnumerationInfo {
  std::size_t count = 0;
  bool exhaustive = false;
};

/// Edges of the labeled tree encoded by a Prüfer sequence of length n-2.
inline std::vector<Call> prufer_decode(std::span<const PersonId> seq, std::size_t n) {
  if (n < 2 || seq.size() != n - 2) throw DomainError("Prüfer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (PersonId v : seq) {
    if (v >= n) throw DomainError("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Call> edges;
  edges.reserve(n - 1);
  for (PersonId v : seq) {
    PersonId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  PersonId u = 0;
  while (degree[u] != 1) ++u;
  PersonId w = u + 1;
  while (degree[w] != 1) ++w;
  edges.emplace_back(u, w);
  return edges;
}

namespace detail {

// Odometer over all sequences of `len` symbols from [0, base).
inline bool next_word(std::vector<PersonId>& word, std::size_t base) {
  for (std::size_t pos = word.size(); pos-- > 0;) {
    if (++word[pos] < base) return true;
    word[pos] = 0;
  }
  return false;
}

inline std::vector<Call> all_pairs(std::size_t n) {
  std::vector<Call> pairs;
  for (PersonId a = 0; a < n; ++a) {
    for (PersonId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace detail

/// Calls visit(const Schedule&) once per tree scheme on n persons. For
/// n <= 6 every scheme is visited; for n in {7, 8}, `limit` uniform samples
/// are drawn with the given seed.
template <class Visitor>
EnumerationInfo for_each_tree_scheme(std::size_t n, std::size_t limit, std::uint64_t seed, Visitor&& visit) {
  if (n < 2 || n > kMaxSampledTreeN) throw DomainError("tree enumeration needs 2 <= n <= 8");
  EnumerationInfo info;
  if (n <= kMaxExhaustiveTreeN) {
    info.exhaustive = true;
    std::vector<PersonId> seq(n - 2, 0);
    do {
      const auto edges = prufer_decode(seq, n);
      std::vector<std::size_t> order(edges.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      do {
        std::vector<Call> calls;
        calls.reserve(order.size());
        for (std::size_t e : order) calls.push_back(edges[e]);
        visit(Schedule(n, std::move(calls)));
        ++info.count;
      } while (std::next_permutation(order.begin(), order.end()));
    } while (detail::next_word(seq, n));
    return info;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PersonId> pick(0, static_cast<PersonId>(n - 1));
  std::vector<PersonId> seq(n - 2);
  for (std::size_t s = 0; s < limit; ++s) {
    for (PersonId& v : seq) v = pick(rng);
    auto edges = prufer_decode(seq, n);
    std::shuffle(edges.begin(), edges.end(), rng);
    visit(Schedule(n, std::move(edges)));
    ++info.count;
  }
  return info;
}

struct TreeSchemeStream {
  std::vector<Schedule> schemes;
  bool exhaustive = false;
};

inline TreeSchemeStream enumerate_tree_schemes(std::size_t n, std::size_t limit, std::uint64_t seed = 1) {
  TreeSchemeStream out;
  out.exhaustive = for_each_tree_scheme(n, limit, seed, [&](const Schedule& s) { out.schemes.push_back(s); })
                       .exhaustive;
  return out;
}

/// Calls visit(std::span<const Call>) for every sequence of `length` calls on
/// n persons. The span is only valid during the call.
template <class Visitor>
std::size_t for_each_call_sequence(std::size_t n, std::size_t length, Visitor&& visit) {
  if (n < 2) {
    if (length == 0) {
      visit(std::span<const Call>{});
      return 1;
    }
    return 0;
  }
  const auto pairs = detail::all_pairs(n);
  std::vector<PersonId> word(length, 0);
  std::vector<Call> calls(length);
  std::size_t count = 0;
  do {
    for (std::size_t t = 0; t < length; ++t) calls[t] = pairs[word[t]];
    visit(std::span<const Call>(calls));
    ++count;
  } while (detail::next_word(word, pairs.size()));
  return count;
}

/// Unicyclic schemes: n calls on n persons forming a connected multigraph
/// (one cycle, possibly a doubled edge). Exhaustive for n <= 6; for n in
/// {7, 8}, `limit` samples built as a random tree plus a random extra call
/// in a random order.
template <class Visitor>
EnumerationInfo for_each_unicyclic_scheme(std::size_t n, std::size_t limit, std::uint64_t seed, Visitor&& visit) {
  if (n < 2 || n > kMaxSampledTreeN) throw DomainError("unicyclic enumeration needs 2 <= n <= 8");
  EnumerationInfo info;
  if (n <= kMaxExhaustiveTreeN) {
    info.exhaustive = true;
    for_each_call_sequence(n, n, [&](std::span<const Call> calls) {
      graph::detail::DisjointSets ds(n);
      std::size_t merges = 0;
      for (const Call& c : calls) {
        if (ds.find(c.a) != ds.find(c.b)) {
          ds.unite(c.a, c.b);
          ++merges;
        }
      }
      if (merges + 1 != n) return;  // disconnected
      visit(Schedule(n, {calls.begin(), calls.end()}));
      ++info.count;
    });
    return info;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PersonId> pick(0, static_cast<PersonId>(n - 1));
  std::vector<PersonId> seq(n - 2);
  for (std::size_t s = 0; s < limit; ++s) {
    for (PersonId& v : seq) v = pick(rng);
    auto edges = prufer_decode(seq, n);
    PersonId a = pick(rng);
    PersonId b = pick(rng);
    while (b == a) b = pick(rng);
    edges.emplace_back(a, b);
    std::shuffle(edges.begin(), edges.end(), rng);
    visit(Schedule(n, std::move(edges)));
    ++info.count;
  }
  return info;
}

}  // namespace gossip::oracle
