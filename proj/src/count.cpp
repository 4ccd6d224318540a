#include "motif/count.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "motif/enumerate.hpp"

namespace motif {

namespace {

constexpr std::uint8_t kUnsetLabel = 0xFF;

constexpr std::uint8_t kClassA = 0;
constexpr std::uint8_t kClassB = 1;
constexpr std::uint8_t kClassC = 2;
constexpr std::uint8_t kClassN = 3;

constexpr std::uint8_t all_n_label(int r) {
  return static_cast<std::uint8_t>((1u << (2 * r)) - 1);
}

constexpr std::uint8_t set_label_char(std::uint8_t label, int i, std::uint8_t cls) {
  return static_cast<std::uint8_t>((label & ~(3u << (2 * i))) | (cls << (2 * i)));
}

constexpr std::uint8_t label_char(std::uint8_t label, int i) {
  return (label >> (2 * i)) & 3u;
}

// Static tables for one base size r: re-layout of a size-r code into the
// size-(r+2) layout, and wiring masks for the two synthetic vertices at
// positions r and r+1.
struct EngineTables {
  int r = 0;
  std::vector<std::uint32_t> spread;   // 2^{r(r-1)} entries
  std::uint32_t wire_y[4][4] = {};     // [class][base index]
  std::uint32_t wire_z[4][4] = {};
  std::uint32_t rel_uv = 0;            // y -> z
  std::uint32_t rel_vu = 0;            // z -> y

  std::uint32_t wiring(std::uint8_t label_y, std::uint8_t label_z) const {
    std::uint32_t acc = 0;
    for (int i = 0; i < r; ++i) {
      acc |= wire_y[label_char(label_y, i)][i];
      acc |= wire_z[label_char(label_z, i)][i];
    }
    return acc;
  }
};

EngineTables build_engine_tables(int r) {
  EngineTables t;
  t.r = r;
  const int k = r + 2;

  t.spread.assign(1u << code_bit_count(r), 0);
  for (std::uint32_t bits = 0; bits < t.spread.size(); ++bits) {
    std::uint32_t out = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (i != j && (bits >> code_bit_index(r, i, j)) & 1)
          out |= 1u << code_bit_index(k, i, j);
    t.spread[bits] = out;
  }

  const int y = r;
  const int z = r + 1;
  for (int i = 0; i < r; ++i) {
    const std::uint32_t to_y = 1u << code_bit_index(k, i, y);
    const std::uint32_t from_y = 1u << code_bit_index(k, y, i);
    const std::uint32_t to_z = 1u << code_bit_index(k, i, z);
    const std::uint32_t from_z = 1u << code_bit_index(k, z, i);
    t.wire_y[kClassA][i] = to_y | from_y;
    t.wire_y[kClassB][i] = to_y;
    t.wire_y[kClassC][i] = from_y;
    t.wire_z[kClassA][i] = to_z | from_z;
    t.wire_z[kClassB][i] = to_z;
    t.wire_z[kClassC][i] = from_z;
  }
  t.rel_uv = 1u << code_bit_index(k, y, z);
  t.rel_vu = 1u << code_bit_index(k, z, y);
  return t;
}

const EngineTables& engine_tables(int r) {
  static const std::array<EngineTables, 5> all = [] {
    std::array<EngineTables, 5> a;
    for (int r = 1; r <= 4; ++r) a[r] = build_engine_tables(r);
    return a;
  }();
  return all[r];
}

std::uint8_t pack_label(const ClassLabel& label) {
  std::uint8_t packed = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    std::uint8_t cls;
    switch (label[i]) {
      case 'A': cls = kClassA; break;
      case 'B': cls = kClassB; break;
      case 'C': cls = kClassC; break;
      case 'N': cls = kClassN; break;
      default:
        throw std::invalid_argument("class label characters must be in {A,B,C,N}");
    }
    packed = set_label_char(packed, static_cast<int>(i), cls);
  }
  return packed;
}

}  // namespace

std::size_t AdjacencyPartition::adjacency_size() const {
  std::size_t total = 0;
  for (const auto& [label, cell] : cells) total += cell.size();
  return total;
}

AdjacencyPartition partition_adjacency(const DirectedGraph& g,
                                       std::span<const VertexId> x) {
  const int r = static_cast<int>(x.size());
  if (r < 1 || r > 4)
    throw std::invalid_argument("partition_adjacency: |X| must be in [1,4]");

  AdjacencyPartition part;
  std::vector<std::uint8_t> in_x(g.n(), 0);
  for (VertexId v : x) {
    if (v >= g.n()) throw std::out_of_range("partition_adjacency: vertex out of range");
    in_x[v] = 1;
  }

  std::vector<std::uint8_t> seen(g.n(), 0);
  ClassLabel label(static_cast<std::size_t>(r), 'N');
  static constexpr char kClassChar[4] = {'A', 'B', 'C', 'N'};
  for (VertexId xv : x) {
    for (VertexId u : g.delta(xv)) {
      if (in_x[u] || seen[u]) continue;
      seen[u] = 1;
      for (int i = 0; i < r; ++i)
        label[i] = kClassChar[static_cast<int>(g.classify(u, x[i]))];
      part.cells[label].push_back(u);
    }
  }
  for (auto& [lbl, cell] : part.cells) std::sort(cell.begin(), cell.end());
  return part;
}

AdjacencyCode assemble_motif_code(const DirectedGraph& g,
                                  std::span<const VertexId> x,
                                  const ClassLabel& y, const ClassLabel& z) {
  const int r = static_cast<int>(x.size());
  if (r < 1 || r > 4)
    throw std::invalid_argument("assemble_motif_code: |X| must be in [1,4]");
  if (y.size() != x.size() || z.size() != x.size())
    throw std::invalid_argument("assemble_motif_code: label length must equal |X|");

  const auto& t = engine_tables(r);
  const std::uint32_t base = encode_adjacency(g, x).bits;
  const std::uint32_t bits = t.spread[base] | t.wiring(pack_label(y), pack_label(z));
  return {static_cast<std::uint8_t>(r + 2), bits};
}

std::uint32_t pattern_multiplicity(MotifId p) {
  const int k = p.k;
  if (k < 3 || k > kMaxMotifSize)
    throw std::invalid_argument("pattern_multiplicity: k must be in [3,6]");
  if (!code_connected(p.code()))
    throw std::invalid_argument("pattern_multiplicity: pattern is disconnected");

  std::array<std::uint32_t, kMaxMotifSize> adj{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && ((p.bits >> code_bit_index(k, i, j)) & 1 ||
                     (p.bits >> code_bit_index(k, j, i)) & 1))
        adj[i] |= 1u << j;

  const std::uint32_t full = (1u << k) - 1;
  std::uint32_t count = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const std::uint32_t rest = full & ~(1u << a) & ~(1u << b);
      if (!(adj[a] & rest) || !(adj[b] & rest)) continue;
      // flood the remaining k-2 vertices
      std::uint32_t visited = rest & (~rest + 1);  // lowest remaining vertex
      std::uint32_t frontier = visited;
      while (frontier) {
        const int i = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t add = adj[i] & rest & ~visited;
        visited |= add;
        frontier |= add;
      }
      if (visited == rest) ++count;
    }
  }
  return count;
}

std::uint32_t MultiplicityTable::get(MotifId p) {
  const std::uint64_t key = (static_cast<std::uint64_t>(p.k) << 32) | p.bits;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const std::uint32_t m = pattern_multiplicity(p);
  memo_.emplace(key, m);
  return m;
}

std::uint64_t Histogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [id, c] : counts) sum += c;
  return sum;
}

CountWorkspace::CountWorkspace(const DirectedGraph& g, Strategy strategy)
    : g_(g),
      strategy_(strategy),
      extractor_(g),
      label_of_(g.n(), kUnsetLabel),
      x_marks_(g.n(), 0) {}

void count_base(const DirectedGraph& g, std::span<const VertexId> x,
                RawCounts& raw, CountWorkspace& ws) {
  const int r = static_cast<int>(x.size());
  if (r < 1 || r > 4)
    throw std::invalid_argument("count_base: |X| must be in [1,4]");
  const auto k = static_cast<std::uint8_t>(r + 2);
  const auto& t = engine_tables(r);

  const std::uint32_t base_bits = encode_adjacency(g, x).bits;
  if (!code_connected({static_cast<std::uint8_t>(r), base_bits}))
    throw std::invalid_argument("count_base: base subgraph is not connected");
  const std::uint32_t spread = t.spread[base_bits];

  // Gather adj(X) with packed labels in one sweep over the class lists.
  for (VertexId v : x) ws.x_marks_[v] = 1;
  ws.adj_.clear();
  for (int i = 0; i < r; ++i) {
    const VertexId xv = x[i];
    auto absorb = [&](std::span<const VertexId> list, std::uint8_t cls) {
      for (VertexId u : list) {
        if (ws.x_marks_[u]) continue;
        std::uint8_t lbl = ws.label_of_[u];
        if (lbl == kUnsetLabel) {
          lbl = all_n_label(r);
          ws.adj_.push_back(u);
        }
        ws.label_of_[u] = set_label_char(lbl, i, cls);
      }
    };
    absorb(g.class_a(xv), kClassA);
    absorb(g.class_b(xv), kClassB);
    absorb(g.class_c(xv), kClassC);
  }

  // Nonempty cells.
  ws.touched_.clear();
  for (VertexId u : ws.adj_) {
    const std::uint8_t lbl = ws.label_of_[u];
    if (ws.cell_count_[lbl]++ == 0) ws.touched_.push_back(lbl);
  }

  // Pair branch: every unordered pair of external vertices, counted in
  // closed form per cell pair, lands on the pattern with no edge between
  // the two externals.
  const std::size_t ncells = ws.touched_.size();
  for (std::size_t ai = 0; ai < ncells; ++ai) {
    const std::uint8_t la = ws.touched_[ai];
    const std::uint64_t ca = ws.cell_count_[la];
    for (std::size_t bi = ai; bi < ncells; ++bi) {
      const std::uint8_t lb = ws.touched_[bi];
      const std::uint64_t units =
          (ai == bi) ? ca * (ca - 1) / 2 : ca * ws.cell_count_[lb];
      if (units == 0) continue;
      const std::uint32_t bits = spread | t.wiring(la, lb);
      raw[ws.cache_.id({k, bits}).bits] += static_cast<std::int64_t>(units);
    }
  }

  // Edge correction: each adjacent unordered pair inside adj(X) moves one
  // unit from its no-edge pattern to the true induced pattern.
  if (ws.adj_.size() > 1) {
    ws.extractor_.extract_into(ws.adj_, ws.strategy_, ws.edges_);
    for (const auto& [u, v] : ws.edges_) {
      const bool bidir = g.has_edge(v, u);
      if (bidir && u > v) continue;  // bidirected pair handled at u < v
      const std::uint32_t rel = bidir ? (t.rel_uv | t.rel_vu) : t.rel_uv;
      const std::uint32_t nominal =
          spread | t.wiring(ws.label_of_[u], ws.label_of_[v]);
      raw[ws.cache_.id({k, nominal | rel}).bits] += 1;
      raw[ws.cache_.id({k, nominal}).bits] -= 1;
    }
  }

  for (const std::uint8_t lbl : ws.touched_) ws.cell_count_[lbl] = 0;
  for (VertexId u : ws.adj_) ws.label_of_[u] = kUnsetLabel;
  for (VertexId v : x) ws.x_marks_[v] = 0;
  ++ws.bases_;
}

CountResult count_motifs(const DirectedGraph& g, int k, const CountOptions& opts) {
  if (k < 3 || k > kMaxMotifSize)
    throw std::invalid_argument("count_motifs: k must be in [3,6]");
  if (static_cast<std::uint64_t>(k) > g.n())
    throw std::invalid_argument("count_motifs: k exceeds the vertex count");

  const auto t0 = std::chrono::steady_clock::now();
  const BaseSetList bases = enumerate_connected(g, k - 2);
  const std::size_t total = bases.size();
  const int workers = std::max(1, opts.workers);

  std::size_t chunk = opts.chunk_size;
  if (chunk == 0)
    chunk = std::clamp<std::size_t>(total / (static_cast<std::size_t>(workers) * 32) + 1,
                                    1, 1024);

  struct WorkerOut {
    RawCounts raw;
    std::uint64_t hits = 0, misses = 0, entries = 0, bases = 0;
  };
  std::vector<WorkerOut> outs(workers);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::vector<std::exception_ptr> errors(workers);

  auto worker_fn = [&](int w) {
    try {
      CountWorkspace ws(g, opts.strategy);
      RawCounts raw;
      std::size_t start;
      while ((start = next.fetch_add(chunk)) < total) {
        const std::size_t end = std::min(start + chunk, total);
        for (std::size_t i = start; i < end; ++i) count_base(g, bases[i], raw, ws);
        const std::uint64_t d = done.fetch_add(end - start) + (end - start);
        if (opts.progress) opts.progress(d, total);
      }
      outs[w].raw = std::move(raw);
      outs[w].hits = ws.cache().hits();
      outs[w].misses = ws.cache().misses();
      outs[w].entries = ws.cache().size();
      outs[w].bases = ws.bases_processed();
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

  // Merge: integer addition, so any merge order yields the same result.
  std::map<std::uint32_t, std::int64_t> merged;
  CountResult res;
  for (auto& out : outs) {
    for (const auto& [bits, units] : out.raw) merged[bits] += units;
    res.stats.cache_hits += out.hits;
    res.stats.cache_misses += out.misses;
    res.stats.cache_entries += out.entries;
    res.stats.bases += out.bases;
  }

  res.hist.k = k;
  MultiplicityTable mult;
  for (const auto& [bits, units] : merged) {
    if (units == 0) continue;
    const MotifId id{static_cast<std::uint8_t>(k), bits};
    if (units < 0)
      throw std::logic_error("count_motifs: negative raw count for " + id.to_string());
    const std::uint32_t m = mult.get(id);
    if (units % m != 0)
      throw std::logic_error("count_motifs: raw count " + std::to_string(units) +
                             " for " + id.to_string() +
                             " not divisible by multiplicity " + std::to_string(m));
    res.hist.counts.emplace(id, static_cast<std::uint64_t>(units / m));
    if (opts.keep_raw) res.raw.emplace(id, units);
  }

  res.stats.workers = workers;
  res.stats.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return res;
}

}  // namespace motif
