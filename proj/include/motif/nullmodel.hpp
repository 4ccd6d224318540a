#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "motif/count.hpp"
#include "motif/graph.hpp"

namespace motif {

struct RandomizerConfig {
  /// Ensemble size.
  std::uint32_t replicas = 511;
  /// Attempted switches per directed edge (ceil(q * m) attempts total).
  double switches_per_edge = 3.0;
  std::uint64_t seed = 1;
};

struct SwitchStats {
  std::uint64_t attempted = 0;
  std::uint64_t applied = 0;
};

/// Degree-preserving randomization: FANMOD-style edge switching where purely
/// directed edges swap endpoints with other directed edges and bidirected
/// pairs swap only with other bidirected pairs. Preserves n, m and every
/// vertex's in-, out- and bidirected degree exactly. The RNG stream is a
/// pure function of (cfg.seed, replica_index).
DirectedGraph randomize(const DirectedGraph& g, const RandomizerConfig& cfg,
                        std::uint32_t replica_index, SwitchStats* stats = nullptr);

struct MotifEnsemble {
  std::uint64_t f_orig = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::optional<double> z;  // absent when stddev is 0
  double p_value = 1.0;     // fraction of replicas with count >= f_orig

  bool operator==(const MotifEnsemble&) const = default;
};

struct EnsembleStats {
  int k = 0;
  std::uint32_t replicas = 0;
  std::map<MotifId, MotifEnsemble> motifs;

  bool operator==(const EnsembleStats&) const = default;
};

/// Statistics for one motif from its original count and the ordered vector
/// of replica counts (sample standard deviation, n-1 denominator).
MotifEnsemble ensemble_from_counts(std::uint64_t f_orig,
                                   std::span<const std::uint64_t> replica_counts);

struct SignificanceOptions {
  int workers = 1;
  Strategy strategy = Strategy::Adaptive;
  // Called with (replicas done, replicas total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Counts motifs on G and on cfg.replicas randomized copies, then reduces
/// per-motif statistics from the replica-ordered integer counts. Replicas
/// are distributed across workers; the result is identical for any worker
/// count given a fixed seed.
EnsembleStats significance(const DirectedGraph& g, int k,
                           const RandomizerConfig& cfg,
                           const SignificanceOptions& opts = {});

}  // namespace motif
