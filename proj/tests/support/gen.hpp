#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "motif/graph.hpp"

// Deterministic graph builders shared by the unit and acceptance suites.
namespace motif::testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

/// Each ordered pair (u,v), u != v, becomes an edge with probability p.
inline DirectedGraph er_digraph(VertexId n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && rng.uniform01() < p) edges.emplace_back(u, v);
  return DirectedGraph::from_edges(n, edges);
}

inline DirectedGraph bidirected_clique(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) edges.emplace_back(u, v);
  return DirectedGraph::from_edges(n, edges);
}

inline DirectedGraph directed_cycle(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return DirectedGraph::from_edges(n, edges);
}

/// Star with edges from vertex 0 to 1..leaves.
inline DirectedGraph out_star(VertexId leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return DirectedGraph::from_edges(leaves + 1, edges);
}

/// The 4-vertex fixture: 0->1, 0->2, 0->3, 1->3. {1,2,3} is disconnected.
inline DirectedGraph diamond_fixture() {
  return DirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
}

/// Sparse graph with a constant number of high-degree hubs: non-hub
/// vertices form a directed ring and each attaches to one hub, so non-hub
/// degree stays <= 3 while hub degree grows linearly with n.
inline DirectedGraph celebrity_graph(VertexId n, VertexId hubs, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId v = hubs; v < n; ++v) {
    const VertexId next = (v + 1 - hubs) % (n - hubs) + hubs;
    edges.emplace_back(v, next);
    const auto hub = static_cast<VertexId>(rng.below(hubs));
    if (rng.next() & 1)
      edges.emplace_back(hub, v);
    else
      edges.emplace_back(v, hub);
  }
  return DirectedGraph::from_edges(n, edges);
}

/// Uniform random r-subset of [0, n).
inline VertexSet random_subset(VertexId n, std::size_t r, Rng& rng) {
  std::vector<VertexId> pool(n);
  for (VertexId v = 0; v < n; ++v) pool[v] = v;
  VertexSet out;
  for (std::size_t i = 0; i < r && !pool.empty(); ++i) {
    const std::size_t j = rng.below(pool.size());
    out.push_back(pool[j]);
    pool[j] = pool.back();
    pool.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace motif::testgen
