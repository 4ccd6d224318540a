#include "motif/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace motif {

namespace {

// Deliberately plain recursive extension, sharing no code with the
// enumerate module: membership and neighborhood-of-set tests rescan the
// current set instead of using mark arrays.
class BruteCounter {
 public:
  BruteCounter(const DirectedGraph& g, int k, Histogram& hist)
      : g_(g), k_(k), hist_(hist) {}

  void run() {
    for (VertexId root = 0; root < g_.n(); ++root) {
      root_ = root;
      set_.assign(1, root);
      std::vector<VertexId> ext;
      for (VertexId u : g_.delta(root))
        if (u > root) ext.push_back(u);
      std::sort(ext.begin(), ext.end());
      grow(ext);
    }
  }

 private:
  bool in_set(VertexId u) const {
    return std::find(set_.begin(), set_.end(), u) != set_.end();
  }

  bool adjacent_to_set(VertexId u) const {
    for (VertexId s : set_)
      if (g_.has_edge(u, s) || g_.has_edge(s, u)) return true;
    return false;
  }

  void grow(const std::vector<VertexId>& ext) {
    if (static_cast<int>(set_.size()) + 1 == k_) {
      for (VertexId w : ext) {
        set_.push_back(w);
        record();
        set_.pop_back();
      }
      return;
    }
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const VertexId w = ext[i];
      std::vector<VertexId> next(ext.begin() + i + 1, ext.end());
      for (VertexId u : g_.delta(w)) {
        if (u <= root_ || u == w) continue;
        if (in_set(u) || adjacent_to_set(u)) continue;
        next.push_back(u);
      }
      set_.push_back(w);
      grow(next);
      set_.pop_back();
    }
  }

  void record() {
    std::vector<VertexId> ordered(set_);
    std::sort(ordered.begin(), ordered.end());
    const MotifId id = cache_.id(encode_adjacency(g_, ordered));
    ++hist_.counts[id];
  }

  const DirectedGraph& g_;
  const int k_;
  Histogram& hist_;
  IsoCache cache_;
  VertexId root_ = 0;
  std::vector<VertexId> set_;
};

}  // namespace

Histogram brute_force_histogram(const DirectedGraph& g, int k) {
  if (k < 3 || k > kMaxMotifSize)
    throw std::invalid_argument("brute_force_histogram: k must be in [3,6]");
  if (static_cast<std::uint64_t>(k) > g.n())
    throw std::invalid_argument("brute_force_histogram: k exceeds the vertex count");

  Histogram hist;
  hist.k = k;
  BruteCounter(g, k, hist).run();
  return hist;
}

}  // namespace motif
