#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace motif {

using VertexId = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

enum class NeighborClass : std::uint8_t {
  A = 0,  // bidirected: u->v and v->u
  B = 1,  // v->u only
  C = 2,  // u->v only
  N = 3,  // no edge either way
};

/// Immutable directed graph with the per-vertex A/B/C neighbor partition
/// precomputed at construction. Safe for unrestricted concurrent reads.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a graph on vertices [0, n). Self-loops and duplicate directed
  /// edges are dropped (counts retrievable via dropped_*()). Throws
  /// std::invalid_argument if an endpoint is >= n.
  static DirectedGraph from_edges(VertexId n, std::span<const Edge> edges);
  static DirectedGraph from_edges(VertexId n, std::initializer_list<Edge> edges);

  VertexId n() const { return n_; }
  /// Directed edge count (a bidirected pair contributes 2).
  std::uint64_t m_directed() const { return m_; }
  std::uint64_t bidirected_pairs() const { return bidirected_pairs_; }
  /// Unordered adjacent-pair count (a bidirected pair contributes 1).
  std::uint64_t m_unordered() const { return m_ - bidirected_pairs_; }

  std::uint64_t dropped_self_loops() const { return dropped_self_loops_; }
  std::uint64_t dropped_duplicates() const { return dropped_duplicates_; }

  /// Neighbors u of v with u->v and v->u, sorted ascending.
  std::span<const VertexId> class_a(VertexId v) const;
  /// Neighbors u of v with v->u only, sorted ascending.
  std::span<const VertexId> class_b(VertexId v) const;
  /// Neighbors u of v with u->v only, sorted ascending.
  std::span<const VertexId> class_c(VertexId v) const;
  /// All neighbors of v (A then B then C, each run sorted).
  std::span<const VertexId> delta(VertexId v) const;

  /// d(v) = |A(v)| + |B(v)| + |C(v)|; a bidirected neighbor counts once.
  std::uint32_t degree(VertexId v) const;
  std::uint32_t out_degree(VertexId v) const;
  std::uint32_t in_degree(VertexId v) const;
  std::uint32_t bidirected_degree(VertexId v) const;

  NeighborClass classify(VertexId u, VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const {
    if (use_matrix_) {
      const std::uint64_t idx =
          static_cast<std::uint64_t>(u) * n_ + v;
      return (matrix_[idx >> 6] >> (idx & 63)) & 1u;
    }
    return edge_set_.contains(pack(u, v));
  }

  /// Edges in canonical insertion order (the order given at construction,
  /// minus drops). Loading a saved graph reproduces identical vertex ids.
  std::span<const Edge> edges() const { return edges_; }

  void save(std::ostream& out, bool with_header = true) const;
  std::string to_edge_list(bool with_header = true) const;

 private:
  static std::uint64_t pack(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void check_vertex(VertexId v) const;
  void build_index();

  struct EdgeKeySet {
    // Open-addressing set of packed (u,v) keys; power-of-two capacity.
    std::vector<std::uint64_t> slots;
    std::uint64_t mask = 0;
    static constexpr std::uint64_t kEmpty = ~0ull;
    void init(std::size_t count);
    void insert(std::uint64_t key);
    bool contains(std::uint64_t key) const;
  };

  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::uint64_t bidirected_pairs_ = 0;
  std::uint64_t dropped_self_loops_ = 0;
  std::uint64_t dropped_duplicates_ = 0;
  std::vector<Edge> edges_;

  // Per-vertex neighbor storage: delta_flat_[delta_start_[v] ..
  // delta_start_[v+1]) holds A then B then C; a_end_/b_end_ are offsets
  // relative to delta_start_[v].
  std::vector<VertexId> delta_flat_;
  std::vector<std::uint64_t> delta_start_;
  std::vector<std::uint32_t> a_end_;
  std::vector<std::uint32_t> b_end_;

  bool use_matrix_ = false;
  std::vector<std::uint64_t> matrix_;
  EdgeKeySet edge_set_;
};

struct LoadResult {
  DirectedGraph graph;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

/// Parses whitespace-separated integer pairs, one edge per line; lines
/// starting with '#' or '%' are comments. Vertex ids are remapped to
/// contiguous [0, n) in first-appearance order. Throws std::runtime_error
/// on a malformed token (message names the line) or empty input.
LoadResult parse_edge_list(std::string_view text);
LoadResult load_edge_list_file(const std::string& path);

/// Sum of d(v) over S. Throws std::out_of_range on a bad vertex id.
std::uint64_t degree_sum(const DirectedGraph& g, std::span<const VertexId> s);

}  // namespace motif
