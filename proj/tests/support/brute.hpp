#pragma once

#include <algorithm>
#include <vector>

#include "motif/graph.hpp"

// Second-opinion helpers for tests: the dumbest possible implementations.
namespace motif::testbrute {

inline bool weakly_connected(const DirectedGraph& g, std::span<const VertexId> s) {
  if (s.empty()) return false;
  std::vector<VertexId> reached{s[0]};
  std::vector<VertexId> rest(s.begin() + 1, s.end());
  bool grew = true;
  while (grew && !rest.empty()) {
    grew = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const VertexId u = rest[i];
      const bool touch = std::any_of(reached.begin(), reached.end(), [&](VertexId v) {
        return g.has_edge(u, v) || g.has_edge(v, u);
      });
      if (touch) {
        reached.push_back(u);
        rest.erase(rest.begin() + i);
        grew = true;
        break;
      }
    }
  }
  return rest.empty();
}

/// Every connected r-subset of V(g), by filtering all C(n,r) combinations.
inline std::vector<VertexSet> connected_subsets_filter(const DirectedGraph& g, int r) {
  std::vector<VertexSet> out;
  VertexSet comb(r);
  const VertexId n = g.n();

  auto rec = [&](auto&& self, int depth, VertexId from) -> void {
    if (depth == r) {
      if (weakly_connected(g, comb)) out.push_back(comb);
      return;
    }
    for (VertexId v = from; v < n; ++v) {
      comb[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  if (r >= 1 && static_cast<VertexId>(r) <= n) rec(rec, 0, 0);
  return out;
}

/// All directed edges of G[S] by direct pair checks.
inline std::vector<Edge> induced_edges_filter(const DirectedGraph& g,
                                              std::span<const VertexId> s) {
  std::vector<Edge> out;
  for (VertexId u : s)
    for (VertexId v : s)
      if (u != v && g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace motif::testbrute
