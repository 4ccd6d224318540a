#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace motif {

struct RunConfig {
  std::string input;
  int k = 0;
  int threads = 0;  // 0 = available parallelism
  std::string format = "tsv";
  std::uint32_t random_replicas = 0;  // 0 skips the null model
  double switches_per_edge = 3.0;
  std::uint64_t seed = 1;
  bool oracle = false;
  int census_k = 0;  // 0 = counting mode
  bool long_run = false;
  std::string strategy = "adaptive";
  std::string output;  // empty = report stream
};

/// Executes a run: report rows and deterministic footer go to `out` (or the
/// --output file); warnings, timing and cache diagnostics go to `err`.
/// Returns 0 on success, 1 on usage/input errors, 2 on an oracle mismatch.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Used by the motifcount binary.
int run_cli(int argc, const char* const* argv);

}  // namespace motif
