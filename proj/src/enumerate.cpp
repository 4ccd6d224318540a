#include "motif/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace motif {

namespace {

using Sink = std::function<void(std::span<const VertexId>)>;

// ESU-style exact enumeration: from each root v, grow with exclusive
// neighbors of already-chosen vertices restricted to ids > v. Every
// connected r-set containing v as its minimum is produced exactly once.
class EsuEnumerator {
 public:
  EsuEnumerator(const DirectedGraph& g, int r, const Sink& sink)
      : g_(g), r_(r), sink_(sink), seen_(g.n(), 0) {}

  void run() {
    for (VertexId root = 0; root < g_.n(); ++root) {
      root_ = root;
      sub_.assign(1, root);
      seen_[root] = 1;
      std::vector<VertexId> ext;
      for (VertexId u : g_.delta(root)) {
        if (u > root && !seen_[u]) {
          seen_[u] = 1;
          ext.push_back(u);
        }
      }
      block_.clear();
      extend(ext);
      for (VertexId u : ext) seen_[u] = 0;
      seen_[root] = 0;
      flush_block();
    }
  }

 private:
  void extend(std::vector<VertexId>& ext) {
    if (static_cast<int>(sub_.size()) + 1 == r_) {
      for (VertexId w : ext) {
        sub_.push_back(w);
        emit();
        sub_.pop_back();
      }
      return;
    }
    // Take candidates in ascending position; each recursion owns the tail.
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const VertexId w = ext[i];
      std::vector<VertexId> next(ext.begin() + i + 1, ext.end());
      const std::size_t inherited = next.size();
      for (VertexId u : g_.delta(w)) {
        if (u > root_ && !seen_[u]) {
          seen_[u] = 1;
          next.push_back(u);
        }
      }
      sub_.push_back(w);
      extend(next);
      sub_.pop_back();
      for (std::size_t j = inherited; j < next.size(); ++j) seen_[next[j]] = 0;
    }
  }

  void emit() {
    std::array<VertexId, 4> tmp{};
    std::copy(sub_.begin(), sub_.end(), tmp.begin());
    std::sort(tmp.begin(), tmp.begin() + r_);
    block_.insert(block_.end(), tmp.begin(), tmp.begin() + r_);
  }

  void flush_block() {
    // Root blocks are emitted in traversal order; sort each block so the
    // overall stream is lexicographic.
    const std::size_t count = block_.size() / r_;
    if (count > 1) {
      idx_.resize(count);
      for (std::size_t i = 0; i < count; ++i) idx_[i] = i;
      std::sort(idx_.begin(), idx_.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(
            block_.begin() + a * r_, block_.begin() + (a + 1) * r_,
            block_.begin() + b * r_, block_.begin() + (b + 1) * r_);
      });
      sorted_.resize(block_.size());
      for (std::size_t i = 0; i < count; ++i)
        std::copy(block_.begin() + idx_[i] * r_, block_.begin() + (idx_[i] + 1) * r_,
                  sorted_.begin() + i * r_);
      block_.swap(sorted_);
    }
    for (std::size_t i = 0; i < count; ++i)
      sink_(std::span<const VertexId>(block_.data() + i * r_, r_));
  }

  const DirectedGraph& g_;
  const int r_;
  const Sink& sink_;
  VertexId root_ = 0;
  std::vector<VertexId> sub_;
  std::vector<std::uint8_t> seen_;
  std::vector<VertexId> block_;
  std::vector<VertexId> sorted_;
  std::vector<std::size_t> idx_;
};

}  // namespace

void enumerate_connected(const DirectedGraph& g, int r, const Sink& sink) {
  if (r < 1 || r > 4)
    throw std::invalid_argument("enumerate_connected supports r in [1,4]");

  if (r == 1) {
    for (VertexId v = 0; v < g.n(); ++v) {
      sink(std::span<const VertexId>(&v, 1));
    }
    return;
  }

  if (r == 2) {
    std::vector<VertexId> nbrs;
    std::array<VertexId, 2> pair{};
    for (VertexId v = 0; v < g.n(); ++v) {
      nbrs.clear();
      for (VertexId u : g.delta(v))
        if (u > v) nbrs.push_back(u);
      std::sort(nbrs.begin(), nbrs.end());
      for (VertexId u : nbrs) {
        pair = {v, u};
        sink(pair);
      }
    }
    return;
  }

  EsuEnumerator(g, r, sink).run();
}

BaseSetList enumerate_connected(const DirectedGraph& g, int r) {
  BaseSetList list(r);
  enumerate_connected(g, r, [&](std::span<const VertexId> s) { list.push(s); });
  return list;
}

}  // namespace motif
