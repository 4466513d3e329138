#pragma once

#include <cstddef>
#include <vector>

#include "vgl/rational.hpp"

namespace vgl {

/// Dinic max-flow with exact integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  /// Returns an edge handle usable with flow().
  std::size_t add_edge(std::size_t from, std::size_t to, const Integer& capacity);

  Integer solve(std::size_t source, std::size_t sink);

  Integer flow(std::size_t edge) const;

  std::size_t node_count() const { return adjacency_.size(); }

 private:
  struct Edge {
    std::size_t to;
    std::size_t rev;  // index of the reverse edge in adjacency_[to]
    Integer capacity;
    Integer initial;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Integer push(std::size_t node, std::size_t sink, const Integer& limit);

  std::vector<std::vector<Edge>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> handles_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
};

}  // namespace vgl
