#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "motif/graph.hpp"

namespace motif {

constexpr int kMaxMotifSize = 6;

/// Bit-packed k x k adjacency matrix (diagonal omitted) for an ordered
/// vertex list (u_0 .. u_{k-1}): bit i*(k-1) + (j - [j>i]) is set iff
/// u_i -> u_j. k = 6 occupies 30 bits.
struct AdjacencyCode {
  std::uint8_t k = 0;
  std::uint32_t bits = 0;

  friend auto operator<=>(const AdjacencyCode&, const AdjacencyCode&) = default;
};

/// Canonical isomorphism-class identifier: the lexicographically smallest
/// bits value over all k! vertex permutations of a code.
struct MotifId {
  std::uint8_t k = 0;
  std::uint32_t bits = 0;

  friend auto operator<=>(const MotifId&, const MotifId&) = default;

  AdjacencyCode code() const { return {k, bits}; }
  std::string to_string() const;  // "k:0x<hex>"
};

constexpr int code_bit_index(int k, int i, int j) {
  return i * (k - 1) + (j - (j > i ? 1 : 0));
}

constexpr std::uint32_t code_bit_count(int k) {
  return static_cast<std::uint32_t>(k * (k - 1));
}

/// Encodes the subgraph induced on `ordered` (1..6 distinct vertices) with
/// the bit layout above. Throws std::invalid_argument on size > 6.
AdjacencyCode encode_adjacency(const DirectedGraph& g,
                               std::span<const VertexId> ordered);

/// Pure canonicalization: minimum bits over all k! permutations.
MotifId canonical_code(AdjacencyCode code);

/// True iff the code's digraph is connected ignoring edge direction.
bool code_connected(AdjacencyCode code);

/// Lazily memoized canonicalization with hit/miss counters. Not thread-safe;
/// give each worker its own instance (all writers would compute identical
/// values anyway).
class IsoCache {
 public:
  MotifId id(AdjacencyCode code) {
    auto& m = maps_[code.k];
    if (auto it = m.find(code.bits); it != m.end()) {
      ++hits_;
      return {code.k, it->second};
    }
    ++misses_;
    const MotifId id = canonical_code(code);
    m.emplace(code.bits, id.bits);
    return id;
  }

  /// Fills the table for every code of size k up front (k <= 4).
  void precompute(int k);

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  std::size_t size() const;

 private:
  std::array<std::unordered_map<std::uint32_t, std::uint32_t>, kMaxMotifSize + 1> maps_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

inline MotifId iso_id(AdjacencyCode code, IsoCache& cache) { return cache.id(code); }

struct CensusOptions {
  bool connected_only = true;
  // k = 6 scans 2^30 codes; require an explicit opt-in.
  bool long_run = false;
  int threads = 1;
};

/// Scans all 2^{k(k-1)} codes and counts distinct isomorphism classes.
/// Throws std::invalid_argument for k outside [2,6] or k = 6 without
/// long_run.
std::uint64_t class_census(int k, const CensusOptions& opts = {});

/// Human-readable adjacency matrix ('0'/'1' rows), sizes up to 4 are the
/// intended use.
std::string to_matrix_string(MotifId id);

}  // namespace motif
