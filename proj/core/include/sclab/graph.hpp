#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sclab/complex.hpp"

namespace sclab {

// Simple undirected graph on vertices {0, ..., m-1}. Edges are stored as
// (u, v) with u < v, sorted lexicographically, without duplicates; degrees
// are kept in sync with the edge list.
struct Graph {
  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degrees;

  Graph() = default;
  // Normalizes pair order and sorts; throws on self-loops, duplicates, or
  // out-of-range vertex ids.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  static Graph from_skeleton(const SimplicialComplex& complex);
  static Graph complete(int m);
  static Graph path(int m);

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

  // Component labels over all m vertices (isolated ones included), each label
  // the smallest vertex id in its component.
  std::vector<int> component_labels() const;
  int component_count() const;
  // Single component spanning all m vertices; false when m == 0.
  bool is_connected() const;
};

}  // namespace sclab
