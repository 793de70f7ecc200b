#include "sclab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sclab {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : m(vertex_count), edges(std::move(edge_list)) {
  if (m < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u < 0 || v >= m) throw std::invalid_argument("Graph: vertex id out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("Graph: duplicate edge");
  }
  degrees.assign(static_cast<std::size_t>(m), 0);
  for (const auto& [u, v] : edges) {
    ++degrees[static_cast<std::size_t>(u)];
    ++degrees[static_cast<std::size_t>(v)];
  }
}

Graph Graph::from_skeleton(const SimplicialComplex& complex) {
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(complex.faces(1).size());
  for (const Simplex& e : complex.faces(1)) edge_list.emplace_back(e[0], e[1]);
  return Graph(complex.vertex_count(), std::move(edge_list));
}

Graph Graph::complete(int m) {
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) edge_list.emplace_back(u, v);
  }
  return Graph(m, std::move(edge_list));
}

Graph Graph::path(int m) {
  std::vector<std::pair<int, int>> edge_list;
  for (int v = 0; v + 1 < m; ++v) edge_list.emplace_back(v, v + 1);
  return Graph(m, std::move(edge_list));
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [u, v] : edges) {
    const int ru = find(u);
    const int rv = find(v);
    if (ru != rv) parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
  }
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) labels[static_cast<std::size_t>(v)] = find(v);
  return labels;
}

int Graph::component_count() const {
  const std::vector<int> labels = component_labels();
  int count = 0;
  for (int v = 0; v < m; ++v) {
    if (labels[static_cast<std::size_t>(v)] == v) ++count;
  }
  return count;
}

bool Graph::is_connected() const { return m > 0 && component_count() == 1; }

}  // namespace sclab
