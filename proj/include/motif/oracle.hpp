#pragma once

#include "motif/count.hpp"
#include "motif/graph.hpp"

namespace motif {

/// Ground-truth motif counter: enumerates every connected k-set directly
/// (recursive extension, independent of the enumerate module) and classifies
/// each induced subgraph with a cold cache. Single-threaded; intended for
/// small graphs. Throws std::invalid_argument when k > n or k outside [3,6].
Histogram brute_force_histogram(const DirectedGraph& g, int k);

}  // namespace motif
