#include "motif/isomorph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace motif {

namespace {

// Permutation application is byte-sliced: for each permutation, four
// 256-entry tables map each input byte to its OR-contribution in the
// permuted code. One permuted code costs four loads and three ORs.
struct PermTables {
  int k = 0;
  std::uint32_t nbits = 0;
  std::uint32_t nperm = 0;
  std::vector<std::uint32_t> sliced;  // nperm * 4 * 256

  std::uint32_t apply(std::uint32_t perm, std::uint32_t bits) const {
    const std::uint32_t* t = sliced.data() + perm * 1024;
    return t[bits & 0xff] | t[256 + ((bits >> 8) & 0xff)] |
           t[512 + ((bits >> 16) & 0xff)] | t[768 + ((bits >> 24) & 0xff)];
  }
};

PermTables build_tables(int k) {
  PermTables pt;
  pt.k = k;
  pt.nbits = code_bit_count(k);

  std::array<std::uint8_t, kMaxMotifSize> perm{};
  std::iota(perm.begin(), perm.begin() + k, std::uint8_t{0});

  std::vector<std::array<std::uint8_t, kMaxMotifSize>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  pt.nperm = static_cast<std::uint32_t>(perms.size());

  pt.sliced.assign(static_cast<std::size_t>(pt.nperm) * 1024, 0);
  std::array<int, 30> out_pos{};
  std::array<std::uint8_t, kMaxMotifSize> inv{};
  for (std::uint32_t p = 0; p < pt.nperm; ++p) {
    const auto& sigma = perms[p];
    for (int i = 0; i < k; ++i) inv[sigma[i]] = static_cast<std::uint8_t>(i);
    // Reordering vertices as w_i = u_sigma(i) sends input bit (a,b) to
    // output bit (inv[a], inv[b]).
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b)
          out_pos[code_bit_index(k, a, b)] = code_bit_index(k, inv[a], inv[b]);

    std::uint32_t* t = pt.sliced.data() + static_cast<std::size_t>(p) * 1024;
    for (int byte = 0; byte < 4; ++byte) {
      for (int val = 0; val < 256; ++val) {
        std::uint32_t acc = 0;
        for (int bit = 0; bit < 8; ++bit) {
          const int in = byte * 8 + bit;
          if ((val >> bit & 1) && in < static_cast<int>(pt.nbits))
            acc |= 1u << out_pos[in];
        }
        t[byte * 256 + val] = acc;
      }
    }
  }
  return pt;
}

const PermTables& perm_tables(int k) {
  static const std::array<PermTables, kMaxMotifSize + 1> all = [] {
    std::array<PermTables, kMaxMotifSize + 1> a;
    for (int kk = 1; kk <= kMaxMotifSize; ++kk) a[kk] = build_tables(kk);
    return a;
  }();
  return all[k];
}

void check_code(AdjacencyCode code) {
  if (code.k < 1 || code.k > kMaxMotifSize)
    throw std::invalid_argument("adjacency code size must be in [1,6]");
}

bool is_canonical(const PermTables& pt, std::uint32_t bits) {
  for (std::uint32_t p = 1; p < pt.nperm; ++p)
    if (pt.apply(p, bits) < bits) return false;
  return true;
}

}  // namespace

AdjacencyCode encode_adjacency(const DirectedGraph& g,
                               std::span<const VertexId> ordered) {
  const int k = static_cast<int>(ordered.size());
  if (k < 1 || k > kMaxMotifSize)
    throw std::invalid_argument("encode_adjacency: size must be in [1,6]");
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.has_edge(ordered[i], ordered[j]))
        bits |= 1u << code_bit_index(k, i, j);
  return {static_cast<std::uint8_t>(k), bits};
}

MotifId canonical_code(AdjacencyCode code) {
  check_code(code);
  const auto& pt = perm_tables(code.k);
  std::uint32_t best = code.bits;
  for (std::uint32_t p = 1; p < pt.nperm; ++p)
    best = std::min(best, pt.apply(p, code.bits));
  return {code.k, best};
}

bool code_connected(AdjacencyCode code) {
  check_code(code);
  const int k = code.k;
  std::array<std::uint32_t, kMaxMotifSize> adj{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && ((code.bits >> code_bit_index(k, i, j)) & 1 ||
                     (code.bits >> code_bit_index(k, j, i)) & 1))
        adj[i] |= 1u << j;

  const std::uint32_t full = (1u << k) - 1;
  std::uint32_t visited = 1, frontier = 1;
  while (frontier) {
    const int i = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t add = adj[i] & ~visited;
    visited |= add;
    frontier |= add;
  }
  return visited == full;
}

void IsoCache::precompute(int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("precompute supports k in [1,4]");
  auto& m = maps_[k];
  const std::uint32_t count = 1u << code_bit_count(k);
  m.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits)
    m.emplace(bits, canonical_code({static_cast<std::uint8_t>(k), bits}).bits);
}

std::size_t IsoCache::size() const {
  std::size_t total = 0;
  for (const auto& m : maps_) total += m.size();
  return total;
}

namespace {

std::uint64_t census_range(const PermTables& pt, bool connected_only,
                           std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t count = 0;
  const auto k = static_cast<std::uint8_t>(pt.k);
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    if (!is_canonical(pt, b)) continue;
    if (connected_only && !code_connected({k, b})) continue;
    ++count;
  }
  return count;
}

}  // namespace

std::uint64_t class_census(int k, const CensusOptions& opts) {
  if (k < 2 || k > kMaxMotifSize)
    throw std::invalid_argument("census supports k in [2,6]");
  if (k == 6 && !opts.long_run)
    throw std::invalid_argument(
        "census for k=6 scans 2^30 codes and can run for a long time; "
        "pass the long-run flag to confirm");

  const auto& pt = perm_tables(k);
  const std::uint64_t total = 1ull << pt.nbits;
  const int threads = std::max(1, opts.threads);

  if (threads == 1) return census_range(pt, opts.connected_only, 0, total);

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(total, step * t);
    const std::uint64_t hi = std::min(total, lo + step);
    pool.emplace_back([&, t, lo, hi] {
      partial[t] = census_range(pt, opts.connected_only, lo, hi);
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::string MotifId::to_string() const {
  std::ostringstream ss;
  ss << static_cast<int>(k) << ":0x" << std::hex << bits;
  return ss.str();
}

std::string to_matrix_string(MotifId id) {
  const int k = id.k;
  std::string out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j)
        out += '.';
      else
        out += ((id.bits >> code_bit_index(k, i, j)) & 1) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace motif
