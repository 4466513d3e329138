#include "vgl/maxflow.hpp"

#include <queue>
#include <stdexcept>

namespace vgl {

MaxFlow::MaxFlow(std::size_t nodes) : adjacency_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, const Integer& capacity) {
  if (from >= adjacency_.size() || to >= adjacency_.size()) throw std::out_of_range("max-flow node out of range");
  if (from == to) throw std::invalid_argument("self-loop in flow network");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  adjacency_[from].push_back(Edge{to, adjacency_[to].size(), capacity, capacity});
  adjacency_[to].push_back(Edge{from, adjacency_[from].size() - 1, 0, 0});
  handles_.emplace_back(from, adjacency_[from].size() - 1);
  return handles_.size() - 1;
}

Integer MaxFlow::flow(std::size_t edge) const {
  const auto& [node, index] = handles_.at(edge);
  const Edge& e = adjacency_[node][index];
  return e.initial - e.capacity;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<std::size_t> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop();
    for (const Edge& e : adjacency_[v]) {
      if (e.capacity > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        frontier.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Integer MaxFlow::push(std::size_t node, std::size_t sink, const Integer& limit) {
  if (node == sink) return limit;
  for (std::size_t& i = next_arc_[node]; i < adjacency_[node].size(); ++i) {
    Edge& e = adjacency_[node][i];
    if (e.capacity <= 0 || level_[e.to] != level_[node] + 1) continue;
    Integer pushed = push(e.to, sink, limit < e.capacity ? limit : e.capacity);
    if (pushed > 0) {
      e.capacity -= pushed;
      adjacency_[e.to][e.rev].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

Integer MaxFlow::solve(std::size_t source, std::size_t sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  Integer total = 0;
  // Any single augmenting path is bounded by the source's outgoing capacity.
  Integer bound = 0;
  for (const Edge& e : adjacency_[source]) bound += e.capacity;
  while (build_levels(source, sink)) {
    next_arc_.assign(adjacency_.size(), 0);
    while (true) {
      Integer pushed = push(source, sink, bound);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace vgl
