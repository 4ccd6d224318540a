#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "motif/graph.hpp"
#include "motif/induced.hpp"
#include "motif/isomorph.hpp"

namespace motif {

/// Cell label of an external vertex relative to a base X: one character per
/// base vertex (in X's stored order) over {A,B,C,N}. Never the all-N string.
using ClassLabel = std::string;

/// Part(adj(X)): nonempty cells keyed by label, members sorted ascending.
struct AdjacencyPartition {
  std::map<ClassLabel, VertexSet> cells;

  std::size_t adjacency_size() const;
};

/// Partitions adj(X) by each vertex's class tuple relative to X. |X| must
/// be in [1,4].
AdjacencyPartition partition_adjacency(const DirectedGraph& g,
                                       std::span<const VertexId> x);

/// Builds the size-(|X|+2) code for base X plus one synthetic vertex per
/// label (y then z), wired per character: A both directions, B from base
/// vertex to the synthetic one, C the reverse, N none. No y-z edge.
AdjacencyCode assemble_motif_code(const DirectedGraph& g,
                                  std::span<const VertexId> x,
                                  const ClassLabel& y, const ClassLabel& z);

/// Number of unordered pairs {a,b} of the pattern's canonical representative
/// whose removal leaves the remaining k-2 vertices connected with both a and
/// b attached to them. This is the per-pattern overcount of the pair-class
/// engine. Throws std::invalid_argument on a disconnected pattern or k
/// outside [3,6].
std::uint32_t pattern_multiplicity(MotifId p);

/// Memoizing wrapper around pattern_multiplicity.
class MultiplicityTable {
 public:
  std::uint32_t get(MotifId p);

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

/// H_k: counts per canonical pattern of one size.
struct Histogram {
  int k = 0;
  std::map<MotifId, std::uint64_t> counts;

  std::uint64_t total() const;
  bool operator==(const Histogram&) const = default;
};

/// Raw per-pattern accumulator (canonical bits -> signed units), prior to
/// multiplicity normalization.
using RawCounts = std::unordered_map<std::uint32_t, std::int64_t>;

/// Per-worker scratch for count_base: mark arrays, cell table, induced-edge
/// extractor, and the isomorphism cache.
class CountWorkspace {
 public:
  CountWorkspace(const DirectedGraph& g, Strategy strategy = Strategy::Adaptive);

  const IsoCache& cache() const { return cache_; }
  std::uint64_t bases_processed() const { return bases_; }

 private:
  friend void count_base(const DirectedGraph&, std::span<const VertexId>,
                         RawCounts&, CountWorkspace&);

  const DirectedGraph& g_;
  Strategy strategy_;
  InducedExtractor extractor_;
  IsoCache cache_;
  std::vector<std::uint8_t> label_of_;  // packed label per adj vertex; 0xFF unset
  std::vector<std::uint8_t> x_marks_;
  std::vector<VertexId> adj_;
  EdgeSet edges_;
  std::array<std::uint32_t, 256> cell_count_{};
  std::vector<std::uint8_t> touched_;
  std::uint64_t bases_ = 0;
};

/// Algorithm core for one base subgraph X in L_{k-2}: counts every pair of
/// partition cells in closed form, then corrects each adjacent pair inside
/// adj(X) by moving one unit to its true induced pattern. Accumulates raw
/// (un-normalized) units. Throws std::invalid_argument if G[X] is not
/// connected.
void count_base(const DirectedGraph& g, std::span<const VertexId> x,
                RawCounts& raw, CountWorkspace& ws);

struct CountOptions {
  int workers = 1;
  Strategy strategy = Strategy::Adaptive;
  // Bases handed to a worker per queue grab; 0 picks a size from |L| and
  // worker count. Hub-heavy bases make item costs uneven, hence dynamic
  // chunking rather than static ranges.
  std::size_t chunk_size = 0;
  bool keep_raw = false;
  // Called with (bases done, bases total); invoked from worker threads.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct CountStats {
  std::uint64_t bases = 0;             // |L_{k-2}| = count_base invocations
  std::uint64_t cache_hits = 0;        // summed over workers
  std::uint64_t cache_misses = 0;
  std::uint64_t cache_entries = 0;
  double wall_ms = 0.0;
  int workers = 1;
};

struct CountResult {
  Histogram hist;
  CountStats stats;
  std::map<MotifId, std::int64_t> raw;  // filled when keep_raw
};

/// Computes H_k over L_{k-2} with dynamic chunked dispatch across workers.
/// The result is identical for any worker count and schedule. Raw counts
/// divide exactly by the pattern multiplicity; a nonzero remainder means a
/// counting bug and raises std::logic_error.
CountResult count_motifs(const DirectedGraph& g, int k,
                         const CountOptions& opts = {});

}  // namespace motif
