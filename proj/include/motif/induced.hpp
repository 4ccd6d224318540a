#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

using EdgeSet = std::vector<Edge>;

enum class Strategy {
  Pairwise,      // test every ordered pair in S
  NeighborScan,  // scan delta(u) for each u in S
  Adaptive,      // Pairwise when |S|^2 < D(S) * scan_cost, else NeighborScan
  Split,         // degree split: pair loop on S2, neighbor scan on S1
};

/// Degree split of S: S1 holds the p smallest-degree vertices, S2 the rest;
/// p minimizes sum_{i<=p} d(s'_i) + (|S|-p)^2 over the degree-sorted order,
/// ties broken toward smaller p.
struct CelebritySplit {
  std::size_t p = 0;
  VertexSet s1;
  VertexSet s2;
  std::uint64_t objective = 0;
};

CelebritySplit split_point(const DirectedGraph& g, std::span<const VertexId> s);

struct ExtractCounters {
  std::uint64_t edge_queries = 0;      // has_edge probes
  std::uint64_t membership_tests = 0;  // "v in S" probes

  std::uint64_t work() const { return edge_queries + membership_tests; }
  void reset() { edge_queries = membership_tests = 0; }
};

/// Extracts E_S, the directed edges of G[S]. Holds reusable per-worker
/// scratch (a vertex mark array), so each worker should own an instance;
/// extraction itself never mutates the graph.
class InducedExtractor {
 public:
  explicit InducedExtractor(const DirectedGraph& g);

  /// All four strategies return the same edge set; order of edges within
  /// the result is strategy-dependent. Throws std::out_of_range on a bad
  /// vertex id.
  EdgeSet extract(std::span<const VertexId> s, Strategy strategy);

  /// As extract(), appending into `out` (cleared first).
  void extract_into(std::span<const VertexId> s, Strategy strategy, EdgeSet& out);

  const ExtractCounters& counters() const { return counters_; }
  void reset_counters() { counters_.reset(); }

  /// Adaptive comparison: pick Pairwise when |S|^2 < D(S) * scan_cost.
  double scan_cost = 1.0;

 private:
  void pairwise(std::span<const VertexId> s, EdgeSet& out);
  void neighbor_scan(std::span<const VertexId> s, EdgeSet& out);
  void split(std::span<const VertexId> s, EdgeSet& out);

  const DirectedGraph& g_;
  std::vector<std::uint8_t> marks_;  // 0 = outside S, 1 = S (or S1), 2 = S2
  std::vector<VertexId> sort_buf_;
  ExtractCounters counters_;
};

/// One-shot convenience wrapper around InducedExtractor.
EdgeSet induced_edges(const DirectedGraph& g, std::span<const VertexId> s,
                      Strategy strategy, ExtractCounters* counters = nullptr);

}  // namespace motif
