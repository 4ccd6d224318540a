#include "motif/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace motif {

namespace {

// Adjacency bit-matrix is used while n*n stays under ~100 MB; beyond that
// has_edge falls back to the hashed edge set.
constexpr std::uint64_t kMatrixBitLimit = 800ull * 1000 * 1000;

}  // namespace

void DirectedGraph::EdgeKeySet::init(std::size_t count) {
  std::size_t cap = 16;
  while (cap < count * 2) cap <<= 1;
  slots.assign(cap, kEmpty);
  mask = cap - 1;
}

void DirectedGraph::EdgeKeySet::insert(std::uint64_t key) {
  std::uint64_t h = key * 0x9E3779B97F4A7C15ull;
  std::uint64_t i = (h ^ (h >> 29)) & mask;
  while (slots[i] != kEmpty) {
    if (slots[i] == key) return;
    i = (i + 1) & mask;
  }
  slots[i] = key;
}

bool DirectedGraph::EdgeKeySet::contains(std::uint64_t key) const {
  std::uint64_t h = key * 0x9E3779B97F4A7C15ull;
  std::uint64_t i = (h ^ (h >> 29)) & mask;
  while (slots[i] != kEmpty) {
    if (slots[i] == key) return true;
    i = (i + 1) & mask;
  }
  return false;
}

DirectedGraph DirectedGraph::from_edges(VertexId n, std::span<const Edge> edges) {
  DirectedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());

  const std::uint64_t bits_needed = static_cast<std::uint64_t>(n) * n;
  g.use_matrix_ = bits_needed <= kMatrixBitLimit;
  if (g.use_matrix_) {
    g.matrix_.assign((bits_needed + 63) / 64, 0);
  } else {
    g.edge_set_.init(edges.size());
  }

  auto seen = [&](VertexId u, VertexId v) { return g.has_edge(u, v); };
  auto mark = [&](VertexId u, VertexId v) {
    if (g.use_matrix_) {
      const std::uint64_t idx = static_cast<std::uint64_t>(u) * n + v;
      g.matrix_[idx >> 6] |= 1ull << (idx & 63);
    } else {
      g.edge_set_.insert(pack(u, v));
    }
  };

  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) {
      ++g.dropped_self_loops_;
      continue;
    }
    if (seen(u, v)) {
      ++g.dropped_duplicates_;
      continue;
    }
    mark(u, v);
    g.edges_.emplace_back(u, v);
  }
  g.m_ = g.edges_.size();
  g.build_index();
  return g;
}

DirectedGraph DirectedGraph::from_edges(VertexId n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void DirectedGraph::build_index() {
  std::vector<std::vector<VertexId>> a(n_), b(n_), c(n_);
  for (const auto& [u, v] : edges_) {
    if (has_edge(v, u)) {
      if (u < v) {  // record the bidirected pair once, for both endpoints
        a[u].push_back(v);
        a[v].push_back(u);
        ++bidirected_pairs_;
      }
    } else {
      b[u].push_back(v);  // u -> v only: v in B(u), u in C(v)
      c[v].push_back(u);
    }
  }

  delta_start_.assign(n_ + 1, 0);
  a_end_.assign(n_, 0);
  b_end_.assign(n_, 0);
  std::uint64_t total = 0;
  for (VertexId v = 0; v < n_; ++v) {
    delta_start_[v] = total;
    a_end_[v] = static_cast<std::uint32_t>(a[v].size());
    b_end_[v] = a_end_[v] + static_cast<std::uint32_t>(b[v].size());
    total += a[v].size() + b[v].size() + c[v].size();
  }
  delta_start_[n_] = total;

  delta_flat_.resize(total);
  for (VertexId v = 0; v < n_; ++v) {
    std::sort(a[v].begin(), a[v].end());
    std::sort(b[v].begin(), b[v].end());
    std::sort(c[v].begin(), c[v].end());
    auto* dst = delta_flat_.data() + delta_start_[v];
    dst = std::copy(a[v].begin(), a[v].end(), dst);
    dst = std::copy(b[v].begin(), b[v].end(), dst);
    std::copy(c[v].begin(), c[v].end(), dst);
  }
}

void DirectedGraph::check_vertex(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
}

std::span<const VertexId> DirectedGraph::class_a(VertexId v) const {
  check_vertex(v);
  return {delta_flat_.data() + delta_start_[v], a_end_[v]};
}

std::span<const VertexId> DirectedGraph::class_b(VertexId v) const {
  check_vertex(v);
  return {delta_flat_.data() + delta_start_[v] + a_end_[v],
          static_cast<std::size_t>(b_end_[v] - a_end_[v])};
}

std::span<const VertexId> DirectedGraph::class_c(VertexId v) const {
  check_vertex(v);
  const auto len = delta_start_[v + 1] - delta_start_[v];
  return {delta_flat_.data() + delta_start_[v] + b_end_[v],
          static_cast<std::size_t>(len - b_end_[v])};
}

std::span<const VertexId> DirectedGraph::delta(VertexId v) const {
  check_vertex(v);
  return {delta_flat_.data() + delta_start_[v],
          static_cast<std::size_t>(delta_start_[v + 1] - delta_start_[v])};
}

std::uint32_t DirectedGraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<std::uint32_t>(delta_start_[v + 1] - delta_start_[v]);
}

std::uint32_t DirectedGraph::bidirected_degree(VertexId v) const {
  check_vertex(v);
  return a_end_[v];
}

std::uint32_t DirectedGraph::out_degree(VertexId v) const {
  check_vertex(v);
  return b_end_[v];  // |A| + |B|
}

std::uint32_t DirectedGraph::in_degree(VertexId v) const {
  check_vertex(v);
  const auto d = degree(v);
  return a_end_[v] + (d - b_end_[v]);  // |A| + |C|
}

NeighborClass DirectedGraph::classify(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const bool uv = has_edge(u, v);
  const bool vu = has_edge(v, u);
  if (uv && vu) return NeighborClass::A;
  if (vu) return NeighborClass::B;
  if (uv) return NeighborClass::C;
  return NeighborClass::N;
}

void DirectedGraph::save(std::ostream& out, bool with_header) const {
  if (with_header) out << "# n=" << n_ << " m=" << m_ << "\n";
  for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
}

std::string DirectedGraph::to_edge_list(bool with_header) const {
  std::ostringstream ss;
  save(ss, with_header);
  return ss.str();
}

LoadResult parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::unordered_map<std::int64_t, VertexId> remap;
  VertexId next_id = 0;
  std::uint64_t self_loops = 0;

  std::size_t pos = 0;
  std::uint64_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    };
    skip_ws();
    if (i >= line.size() || line[i] == '#' || line[i] == '%') continue;

    std::int64_t vals[2];
    for (int t = 0; t < 2; ++t) {
      skip_ws();
      const char* begin = line.data() + i;
      const char* end = line.data() + line.size();
      auto [p, ec] = std::from_chars(begin, end, vals[t]);
      if (ec != std::errc{} || p == begin)
        throw std::runtime_error("malformed token at line " + std::to_string(line_no));
      i += static_cast<std::size_t>(p - begin);
    }
    skip_ws();
    if (i != line.size())
      throw std::runtime_error("malformed token at line " + std::to_string(line_no));

    // Self-loops are dropped before id assignment so a vertex seen only in
    // loops does not enter the graph.
    if (vals[0] == vals[1]) {
      ++self_loops;
      continue;
    }
    auto id_of = [&](std::int64_t raw) {
      auto [it, inserted] = remap.emplace(raw, next_id);
      if (inserted) ++next_id;
      return it->second;
    };
    const VertexId u = id_of(vals[0]);
    const VertexId v = id_of(vals[1]);
    edges.emplace_back(u, v);
  }

  if (edges.empty()) throw std::runtime_error("no edges");

  LoadResult res;
  res.graph = DirectedGraph::from_edges(next_id, edges);
  res.self_loops_dropped = self_loops;
  res.duplicates_dropped = res.graph.dropped_duplicates();
  return res;
}

LoadResult load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::uint64_t degree_sum(const DirectedGraph& g, std::span<const VertexId> s) {
  std::uint64_t sum = 0;
  for (VertexId v : s) sum += g.degree(v);
  return sum;
}

}  // namespace motif
