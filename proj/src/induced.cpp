#include "motif/induced.hpp"

#include <algorithm>
#include <stdexcept>

namespace motif {

CelebritySplit split_point(const DirectedGraph& g, std::span<const VertexId> s) {
  if (s.empty()) throw std::invalid_argument("split_point: empty vertex set");

  CelebritySplit res;
  std::vector<VertexId> sorted(s.begin(), s.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  });

  const std::size_t len = sorted.size();
  std::uint64_t best = ~0ull;
  std::size_t best_p = 0;
  std::uint64_t prefix = 0;
  for (std::size_t p = 0; p <= len; ++p) {
    if (p > 0) prefix += g.degree(sorted[p - 1]);
    const std::uint64_t tail = len - p;
    const std::uint64_t value = prefix + tail * tail;
    if (value < best) {  // strict: ties keep the smaller p
      best = value;
      best_p = p;
    }
  }

  res.p = best_p;
  res.objective = best;
  res.s1.assign(sorted.begin(), sorted.begin() + best_p);
  res.s2.assign(sorted.begin() + best_p, sorted.end());
  std::sort(res.s1.begin(), res.s1.end());
  std::sort(res.s2.begin(), res.s2.end());
  return res;
}

InducedExtractor::InducedExtractor(const DirectedGraph& g)
    : g_(g), marks_(g.n(), 0) {}

EdgeSet InducedExtractor::extract(std::span<const VertexId> s, Strategy strategy) {
  EdgeSet out;
  extract_into(s, strategy, out);
  return out;
}

void InducedExtractor::extract_into(std::span<const VertexId> s,
                                    Strategy strategy, EdgeSet& out) {
  out.clear();
  for (VertexId v : s)
    if (v >= g_.n()) throw std::out_of_range("induced_edges: vertex out of range");
  if (s.size() < 2) return;

  switch (strategy) {
    case Strategy::Pairwise:
      pairwise(s, out);
      break;
    case Strategy::NeighborScan:
      neighbor_scan(s, out);
      break;
    case Strategy::Adaptive: {
      const std::uint64_t sq = static_cast<std::uint64_t>(s.size()) * s.size();
      const std::uint64_t ds = degree_sum(g_, s);
      if (static_cast<double>(sq) < static_cast<double>(ds) * scan_cost)
        pairwise(s, out);
      else
        neighbor_scan(s, out);
      break;
    }
    case Strategy::Split:
      split(s, out);
      break;
  }
}

void InducedExtractor::pairwise(std::span<const VertexId> s, EdgeSet& out) {
  for (VertexId u : s) {
    for (VertexId v : s) {
      if (u == v) continue;
      ++counters_.edge_queries;
      if (g_.has_edge(u, v)) out.emplace_back(u, v);
    }
  }
}

void InducedExtractor::neighbor_scan(std::span<const VertexId> s, EdgeSet& out) {
  for (VertexId v : s) marks_[v] = 1;
  for (VertexId u : s) {
    const auto d = g_.delta(u);
    // delta(u) stores A then B then C; the first out_degree(u) entries are
    // the neighbors reached by an edge originating at u. Emitting only those
    // yields each directed edge exactly once while every element of
    // delta(u) still costs one membership test.
    const std::size_t originating = g_.out_degree(u);
    for (std::size_t i = 0; i < d.size(); ++i) {
      ++counters_.membership_tests;
      if (marks_[d[i]] && i < originating) out.emplace_back(u, d[i]);
    }
  }
  for (VertexId v : s) marks_[v] = 0;
}

void InducedExtractor::split(std::span<const VertexId> s, EdgeSet& out) {
  const CelebritySplit sp = split_point(g_, s);
  for (VertexId v : sp.s1) marks_[v] = 1;
  for (VertexId v : sp.s2) marks_[v] = 2;

  // S2 x S2 by pairwise edge queries.
  for (VertexId u : sp.s2) {
    for (VertexId v : sp.s2) {
      if (u == v) continue;
      ++counters_.edge_queries;
      if (g_.has_edge(u, v)) out.emplace_back(u, v);
    }
  }

  // Neighbor scan over S1 picks up every edge with an endpoint in S1. An
  // edge between two S1 vertices is emitted by its source's scan; an edge
  // between S1 and S2 is emitted here in both directions since S2 is never
  // scanned.
  for (VertexId u : sp.s1) {
    for (VertexId v : g_.class_a(u)) {
      ++counters_.membership_tests;
      const auto mk = marks_[v];
      if (mk == 0) continue;
      out.emplace_back(u, v);
      if (mk == 2) out.emplace_back(v, u);
    }
    for (VertexId v : g_.class_b(u)) {
      ++counters_.membership_tests;
      if (marks_[v]) out.emplace_back(u, v);
    }
    for (VertexId v : g_.class_c(u)) {
      ++counters_.membership_tests;
      if (marks_[v] == 2) out.emplace_back(v, u);
    }
  }

  for (VertexId v : sp.s1) marks_[v] = 0;
  for (VertexId v : sp.s2) marks_[v] = 0;
}

EdgeSet induced_edges(const DirectedGraph& g, std::span<const VertexId> s,
                      Strategy strategy, ExtractCounters* counters) {
  InducedExtractor ex(g);
  EdgeSet out = ex.extract(s, strategy);
  if (counters) *counters = ex.counters();
  return out;
}

}  // namespace motif
