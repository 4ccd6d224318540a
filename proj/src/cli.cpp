#include "motif/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "motif/count.hpp"
#include "motif/graph.hpp"
#include "motif/isomorph.hpp"
#include "motif/nullmodel.hpp"
#include "motif/oracle.hpp"
#include "motif/report.hpp"

namespace motif {

namespace {

Strategy parse_strategy(const std::string& name) {
  if (name == "pairwise") return Strategy::Pairwise;
  if (name == "scan") return Strategy::NeighborScan;
  if (name == "adaptive") return Strategy::Adaptive;
  if (name == "split") return Strategy::Split;
  throw std::invalid_argument("unknown strategy: " + name);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CensusOptions opts;
  opts.connected_only = true;
  opts.long_run = cfg.long_run;
  opts.threads = resolve_threads(cfg.threads);
  try {
    const std::uint64_t classes = class_census(cfg.census_k, opts);
    if (cfg.format == "json")
      write_census_json(out, cfg.census_k, classes);
    else
      write_census_tsv(out, cfg.census_k, classes);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err) {
  std::ofstream file_out;
  std::ostream* out = &out_stream;
  if (!cfg.output.empty()) {
    file_out.open(cfg.output, std::ios::binary);
    if (!file_out) {
      err << "error: cannot open output file: " << cfg.output << "\n";
      return 1;
    }
    out = &file_out;
  }

  if (cfg.census_k != 0) return run_census(cfg, *out, err);

  try {
    if (cfg.input.empty()) throw std::invalid_argument("--input is required");
    if (cfg.k < 3 || cfg.k > 6)
      throw std::invalid_argument("--k must be in [3,6]");

    const LoadResult loaded = load_edge_list_file(cfg.input);
    const DirectedGraph& g = loaded.graph;
    if (loaded.self_loops_dropped > 0)
      err << "warning: dropped " << loaded.self_loops_dropped << " self-loop(s)\n";
    if (loaded.duplicates_dropped > 0)
      err << "warning: dropped " << loaded.duplicates_dropped
          << " duplicate edge(s)\n";

    CountOptions copts;
    copts.workers = resolve_threads(cfg.threads);
    copts.strategy = parse_strategy(cfg.strategy);
    const CountResult result = count_motifs(g, cfg.k, copts);

    std::optional<bool> oracle_match;
    if (cfg.oracle) {
      const Histogram truth = brute_force_histogram(g, cfg.k);
      oracle_match = truth == result.hist;
    }

    std::optional<EnsembleStats> ens;
    if (cfg.random_replicas > 0) {
      RandomizerConfig rcfg;
      rcfg.replicas = cfg.random_replicas;
      rcfg.switches_per_edge = cfg.switches_per_edge;
      rcfg.seed = cfg.seed;
      SignificanceOptions sopts;
      sopts.workers = copts.workers;
      sopts.strategy = copts.strategy;
      ens = significance(g, cfg.k, rcfg, sopts);
    }

    ReportSummary summary;
    summary.n = g.n();
    summary.m_directed = g.m_directed();
    summary.m_unordered = g.m_unordered();
    summary.bases = result.stats.bases;
    summary.total_subgraphs = result.hist.total();
    summary.workers = copts.workers;
    summary.replicas = cfg.random_replicas;
    summary.oracle_match = oracle_match;

    const EnsembleStats* ens_ptr = ens ? &*ens : nullptr;
    if (cfg.format == "json")
      write_json(*out, result.hist, ens_ptr, summary);
    else
      write_tsv(*out, result.hist, ens_ptr, summary);

    err << "timing: count " << format_stat(result.stats.wall_ms) << " ms, "
        << result.stats.bases << " bases, workers " << copts.workers << "\n";
    err << "iso cache: " << result.stats.cache_hits << " hits, "
        << result.stats.cache_misses << " misses, "
        << result.stats.cache_entries << " entries\n";

    if (oracle_match.has_value() && !*oracle_match) {
      err << "error: engine and oracle histograms differ\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "motifcount: exact histogram of connected induced subgraphs of size "
      "3-6 in a directed graph, grouped by isomorphism class"};

  RunConfig cfg;
  app.add_option("--input", cfg.input, "edge-list file (one 'u v' pair per line)")
      ->check(CLI::ExistingFile);
  app.add_option("--k", cfg.k, "motif size")->check(CLI::Range(3, 6));
  app.add_option("--threads", cfg.threads,
                 "worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--random", cfg.random_replicas,
                 "random-graph replicas for significance (0 = skip)");
  app.add_option("--switches-per-edge", cfg.switches_per_edge,
                 "attempted switches per edge when randomizing")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "master RNG seed");
  app.add_flag("--oracle", cfg.oracle,
               "cross-check the engine against the brute-force counter");
  app.add_option("--census", cfg.census_k,
                 "count distinct connected classes of the given size and exit")
      ->check(CLI::Range(2, 6));
  app.add_flag("--long-run", cfg.long_run,
               "allow the 2^30-code census for --census 6");
  app.add_option("--strategy", cfg.strategy, "induced-edge extraction strategy")
      ->check(CLI::IsMember({"pairwise", "scan", "adaptive", "split"}));
  app.add_option("--output", cfg.output, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace motif
