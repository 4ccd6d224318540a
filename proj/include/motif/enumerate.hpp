#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

/// All connected induced r-vertex subgraphs of a graph, each exactly once,
/// as flat storage of sorted vertex sets in lexicographic order.
class BaseSetList {
 public:
  BaseSetList() = default;
  explicit BaseSetList(int r) : r_(r) {}

  int r() const { return r_; }
  std::size_t size() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const VertexId> operator[](std::size_t i) const {
    return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
  }

  void push(std::span<const VertexId> set) {
    flat_.insert(flat_.end(), set.begin(), set.end());
  }

 private:
  int r_ = 0;
  std::vector<VertexId> flat_;
};

/// Streaming enumeration of L_r for r in [1,4]: invokes `sink` once per
/// connected r-set, vertices sorted ascending. Sets arrive in lexicographic
/// order. Throws std::invalid_argument for r outside [1,4].
void enumerate_connected(const DirectedGraph& g, int r,
                         const std::function<void(std::span<const VertexId>)>& sink);

/// Materializing variant.
BaseSetList enumerate_connected(const DirectedGraph& g, int r);

}  // namespace motif
