#pragma once

// Communication multigraphs: vertices are persons, edges are calls carrying
// their chronological index.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gossip/core.hpp"

namespace gossip::graph {

struct TimedEdge {
  Call call;
  std::size_t time = 0;
  bool preliminary = false;

  friend bool operator==(const TimedEdge&, const TimedEdge&) = default;
};

/// Vertices are kept sorted; edges are kept in strictly increasing time.
struct CommGraph {
  std::vector<PersonId> vertices;
  std::vector<TimedEdge> edges;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  bool contains(PersonId p) const { return std::binary_search(vertices.begin(), vertices.end(), p); }

  friend bool operator==(const CommGraph&, const CommGraph&) = default;
};

enum class ComponentKind { Tree, Unicyclic, Other };

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::Unicyclic: return "unicyclic";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

struct Component {
  std::vector<PersonId> vertices;
  std::size_t edge_count = 0;
  ComponentKind kind = ComponentKind::Tree;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline void sort_unique(std::vector<PersonId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Subgraph generated by a set of calls: its vertices are exactly the
/// endpoints of the chosen calls.
inline CommGraph build_subgraph(const Schedule& s, std::span<const std::size_t> call_indices) {
  std::vector<std::size_t> idx(call_indices.begin(), call_indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  CommGraph g;
  for (std::size_t t : idx) {
    if (t >= s.size()) {
      throw DomainError("call index " + std::to_string(t) + " out of range (" +
                        std::to_string(s.size()) + " calls)");
    }
    const Call& c = s.calls()[t];
    g.edges.push_back({c, t, false});
    g.vertices.push_back(c.a);
    g.vertices.push_back(c.b);
  }
  detail::sort_unique(g.vertices);
  return g;
}

inline CommGraph build_graph(const Schedule& s) {
  std::vector<std::size_t> all(s.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return build_subgraph(s, all);
}

/// Whole graph of an augmented schedule; preliminary calls come first in time
/// and are flagged.
inline CommGraph build_graph(const AugmentedSchedule& aug) {
  CommGraph g = build_graph(aug.flattened());
  for (std::size_t t = 0; t < aug.preliminary.size(); ++t) g.edges[t].preliminary = true;
  return g;
}

inline ComponentKind kind_of(std::size_t vertices, std::size_t edges) {
  if (edges + 1 == vertices) return ComponentKind::Tree;
  if (edges == vertices) return ComponentKind::Unicyclic;
  return ComponentKind::Other;
}

/// Connected components ordered by smallest vertex. Isolated vertices form
/// one-vertex trees.
inline std::vector<Component> classify_components(const CommGraph& g) {
  const std::size_t nv = g.vertices.size();
  auto local = [&](PersonId p) {
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) -
                                    g.vertices.begin());
  };
  detail::DisjointSets ds(nv);
  for (const TimedEdge& e : g.edges) ds.unite(local(e.call.a), local(e.call.b));

  std::vector<std::size_t> root_slot(nv, nv);
  std::vector<Component> out;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = ds.find(v);
    if (root_slot[r] == nv) {
      root_slot[r] = out.size();
      out.emplace_back();
    }
    out[root_slot[r]].vertices.push_back(g.vertices[v]);
  }
  for (const TimedEdge& e : g.edges) ++out[root_slot[ds.find(local(e.call.a))]].edge_count;
  for (Component& c : out) c.kind = kind_of(c.vertices.size(), c.edge_count);
  return out;
}

/// True iff the graph is connected and of the given kind.
inline bool is_single(const CommGraph& g, ComponentKind kind) {
  const auto comps = classify_components(g);
  return comps.size() == 1 && comps.front().kind == kind;
}

/// The two components left after deleting the chronologically first call of
/// a tree scheme. The first returned graph contains the first call's smaller
/// endpoint. Each keeps its calls with their original timestamps.
inline std::pair<CommGraph, CommGraph> first_call_split(const Schedule& s) {
  if (s.empty()) throw DomainError("first_call_split needs at least one call");
  const CommGraph whole = build_graph(s);
  if (!is_single(whole, ComponentKind::Tree)) {
    throw DomainError("first_call_split needs a schedule whose graph is a single tree");
  }
  std::vector<std::size_t> rest(s.size() - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  CommGraph remainder = build_subgraph(s, rest);
  const Call first = s.calls().front();
  // Endpoints of the first call may have no other calls; keep them as vertices.
  remainder.vertices.push_back(first.a);
  remainder.vertices.push_back(first.b);
  detail::sort_unique(remainder.vertices);

  const auto comps = classify_components(remainder);
  std::pair<CommGraph, CommGraph> halves;
  for (const Component& c : comps) {
    const bool has_a = std::binary_search(c.vertices.begin(), c.vertices.end(), first.a);
    CommGraph& side = has_a ? halves.first : halves.second;
    side.vertices = c.vertices;
  }
  for (const TimedEdge& e : remainder.edges) {
    (halves.first.contains(e.call.a) ? halves.first : halves.second).edges.push_back(e);
  }
  return halves;
}

/// Relabels a graph's vertices to 0..|V|-1 (in sorted order) and returns the
/// induced schedule with calls in chronological order.
inline Schedule to_schedule(const CommGraph& g) {
  std::vector<Call> calls;
  calls.reserve(g.edges.size());
  auto local = [&](PersonId p) {
    return static_cast<PersonId>(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) -
                                 g.vertices.begin());
  };
  for (const TimedEdge& e : g.edges) calls.emplace_back(local(e.call.a), local(e.call.b));
  return Schedule(std::max<std::size_t>(g.vertices.size(), 1), std::move(calls));
}

namespace detail {
inline std::set<PersonId> participants(std::span<const Call> block) {
  std::set<PersonId> ps;
  for (const Call& c : block) {
    ps.insert(c.a);
    ps.insert(c.b);
  }
  return ps;
}
}  // namespace detail

/// Exchanges the adjacent blocks [split, split+m) and [split+m, split+m+l).
/// Only legal when the two blocks share no participant; then the graph and
/// the final knowledge are unchanged.
inline Schedule swap_blocks(const Schedule& s, std::size_t split, std::size_t m, std::size_t l) {
  if (split + m + l > s.size()) throw DomainError("swap_blocks range exceeds schedule length");
  const std::span<const Call> calls(s.calls());
  const auto first = detail::participants(calls.subspan(split, m));
  const auto second = detail::participants(calls.subspan(split + m, l));
  for (PersonId p : first) {
    if (second.contains(p)) {
      throw PreconditionError("blocks share participant " + std::to_string(p) +
                              "; the swap does not apply");
    }
  }
  std::vector<Call> out(calls.begin(), calls.end());
  std::rotate(out.begin() + static_cast<std::ptrdiff_t>(split),
              out.begin() + static_cast<std::ptrdiff_t>(split + m),
              out.begin() + static_cast<std::ptrdiff_t>(split + m + l));
  return Schedule(s.persons(), std::move(out));
}

/// Same call multiset and same final knowledge. This is a necessary condition
/// for being reachable by block swaps, not a decision procedure for it.
inline bool are_equivalent(const Schedule& s1, const Schedule& s2) {
  if (s1.persons() != s2.persons()) throw DomainError("schedules have different person counts");
  std::vector<Call> c1 = s1.calls();
  std::vector<Call> c2 = s2.calls();
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  return c1 == c2 && simulate(s1) == simulate(s2);
}

}  // namespace gossip::graph
