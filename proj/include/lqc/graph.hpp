#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lqc/f2.hpp"

namespace lqc {

/// Simple undirected graph with sorted, duplicate-free adjacency lists.
struct Graph {
  std::vector<std::vector<Index>> adj;

  Graph() = default;
  explicit Graph(std::size_t n) : adj(n) {}

  std::size_t size() const { return adj.size(); }
  std::size_t max_degree() const;
  std::vector<std::pair<Index, Index>> edges() const;  // i < j, sorted

  void add_edge(Index a, Index b);  // call normalize() afterwards
  void normalize();
};

}  // namespace lqc
