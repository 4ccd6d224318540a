#include "motif/nullmodel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

namespace motif {

namespace {

// Counter-based stream so a replica's randomness depends only on
// (seed, replica_index), never on scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n).
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

std::uint64_t replica_seed(std::uint64_t seed, std::uint32_t replica_index) {
  SplitMix64 mix(seed ^ (0xA0761D6478BD642Full * (replica_index + 1)));
  return mix.next();
}

struct EdgePools {
  std::vector<Edge> directed;    // (u,v) with no reverse edge
  std::vector<Edge> bidirected;  // stored once as (min,max)
  std::unordered_set<std::uint64_t> present;  // all directed edges

  static std::uint64_t key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  bool has(VertexId u, VertexId v) const { return present.contains(key(u, v)); }
  bool any(VertexId u, VertexId v) const { return has(u, v) || has(v, u); }
};

}  // namespace

DirectedGraph randomize(const DirectedGraph& g, const RandomizerConfig& cfg,
                        std::uint32_t replica_index, SwitchStats* stats) {
  if (cfg.switches_per_edge < 0)
    throw std::invalid_argument("switches_per_edge must be non-negative");

  EdgePools pools;
  pools.present.reserve(g.m_directed() * 2);
  for (const auto& [u, v] : g.edges()) pools.present.insert(EdgePools::key(u, v));
  for (const auto& [u, v] : g.edges()) {
    if (pools.has(v, u)) {
      if (u < v) pools.bidirected.emplace_back(u, v);
    } else {
      pools.directed.emplace_back(u, v);
    }
  }

  SplitMix64 rng(replica_seed(cfg.seed, replica_index));
  const auto attempts = static_cast<std::uint64_t>(
      std::ceil(cfg.switches_per_edge * static_cast<double>(g.m_directed())));
  SwitchStats local;

  const std::uint64_t nd = pools.directed.size();
  const std::uint64_t nb = pools.bidirected.size();

  for (std::uint64_t t = 0; t < attempts; ++t) {
    ++local.attempted;
    if (nd + nb == 0) break;
    // Pick the pool in proportion to its pair population.
    const bool pick_directed = rng.below(nd + nb) < nd;

    if (pick_directed) {
      if (nd < 2) continue;
      const std::uint64_t i = rng.below(nd);
      const std::uint64_t j = rng.below(nd);
      if (i == j) continue;
      auto& [a, b] = pools.directed[i];
      auto& [c, d] = pools.directed[j];
      // (a,b),(c,d) -> (a,d),(c,b); both new edges must stay purely
      // directed, so the reverse directions must be absent too.
      if (a == d || c == b) continue;
      if (pools.any(a, d) || pools.any(c, b)) continue;
      pools.present.erase(EdgePools::key(a, b));
      pools.present.erase(EdgePools::key(c, d));
      pools.present.insert(EdgePools::key(a, d));
      pools.present.insert(EdgePools::key(c, b));
      std::swap(b, d);
      ++local.applied;
    } else {
      if (nb < 2) continue;
      const std::uint64_t i = rng.below(nb);
      const std::uint64_t j = rng.below(nb);
      if (i == j) continue;
      auto& [a, b] = pools.bidirected[i];
      auto& [c, d] = pools.bidirected[j];
      // Two matchings are possible; draw one.
      VertexId p1 = a, q1 = (rng.next() & 1) ? d : c;
      VertexId p2 = b, q2 = (q1 == d) ? c : d;
      if (p1 == q1 || p2 == q2) continue;
      if (pools.any(p1, q1) || pools.any(p2, q2)) continue;
      if (std::minmax(p1, q1) == std::minmax(p2, q2)) continue;
      pools.present.erase(EdgePools::key(a, b));
      pools.present.erase(EdgePools::key(b, a));
      pools.present.erase(EdgePools::key(c, d));
      pools.present.erase(EdgePools::key(d, c));
      pools.present.insert(EdgePools::key(p1, q1));
      pools.present.insert(EdgePools::key(q1, p1));
      pools.present.insert(EdgePools::key(p2, q2));
      pools.present.insert(EdgePools::key(q2, p2));
      pools.bidirected[i] = std::minmax(p1, q1);
      pools.bidirected[j] = std::minmax(p2, q2);
      ++local.applied;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.m_directed());
  for (const auto& [u, v] : pools.directed) edges.emplace_back(u, v);
  for (const auto& [u, v] : pools.bidirected) {
    edges.emplace_back(u, v);
    edges.emplace_back(v, u);
  }
  if (stats) *stats = local;
  return DirectedGraph::from_edges(g.n(), edges);
}

MotifEnsemble ensemble_from_counts(std::uint64_t f_orig,
                                   std::span<const std::uint64_t> replica_counts) {
  MotifEnsemble e;
  e.f_orig = f_orig;
  const std::size_t r = replica_counts.size();
  if (r == 0) return e;

  double sum = 0.0;
  std::uint64_t at_least = 0;
  for (std::uint64_t c : replica_counts) {
    sum += static_cast<double>(c);
    if (c >= f_orig) ++at_least;
  }
  e.mean = sum / static_cast<double>(r);
  e.p_value = static_cast<double>(at_least) / static_cast<double>(r);

  if (r > 1) {
    double ss = 0.0;
    for (std::uint64_t c : replica_counts) {
      const double d = static_cast<double>(c) - e.mean;
      ss += d * d;
    }
    e.stddev = std::sqrt(ss / static_cast<double>(r - 1));
  }
  if (e.stddev > 0.0)
    e.z = (static_cast<double>(f_orig) - e.mean) / e.stddev;
  return e;
}

EnsembleStats significance(const DirectedGraph& g, int k,
                           const RandomizerConfig& cfg,
                           const SignificanceOptions& opts) {
  if (cfg.replicas < 1)
    throw std::invalid_argument("significance: at least one replica required");

  CountOptions base_opts;
  base_opts.strategy = opts.strategy;
  base_opts.workers = opts.workers;
  const Histogram original = count_motifs(g, k, base_opts).hist;

  // Replicas run single-threaded counting and are spread across workers;
  // per-replica histograms land at their replica index so the reduction
  // order never depends on scheduling.
  std::vector<Histogram> replica_hists(cfg.replicas);
  const int workers = std::max(1, opts.workers);
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::vector<std::exception_ptr> errors(workers);

  auto worker_fn = [&](int w) {
    try {
      CountOptions one;
      one.workers = 1;
      one.strategy = opts.strategy;
      std::uint32_t i;
      while ((i = next.fetch_add(1)) < cfg.replicas) {
        const DirectedGraph replica = randomize(g, cfg, i);
        replica_hists[i] = count_motifs(replica, k, one).hist;
        const std::uint64_t d = done.fetch_add(1) + 1;
        if (opts.progress) opts.progress(d, cfg.replicas);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    worker_fn(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  EnsembleStats stats;
  stats.k = k;
  stats.replicas = cfg.replicas;

  std::map<MotifId, std::uint64_t> zeros;
  for (const auto& [id, c] : original.counts) zeros.emplace(id, 0);
  for (const auto& h : replica_hists)
    for (const auto& [id, c] : h.counts) zeros.emplace(id, 0);

  std::vector<std::uint64_t> counts(cfg.replicas);
  for (const auto& [id, unused] : zeros) {
    for (std::uint32_t i = 0; i < cfg.replicas; ++i) {
      const auto it = replica_hists[i].counts.find(id);
      counts[i] = it == replica_hists[i].counts.end() ? 0 : it->second;
    }
    const auto orig_it = original.counts.find(id);
    const std::uint64_t f_orig =
        orig_it == original.counts.end() ? 0 : orig_it->second;
    stats.motifs.emplace(id, ensemble_from_counts(f_orig, counts));
  }
  return stats;
}

}  // namespace motif
