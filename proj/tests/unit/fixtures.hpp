#pragma once

#include <initializer_list>

#include "lilyk/generators.hpp"
#include "lilyk/graph.hpp"

namespace fx {

inline lilyk::Graph path(int n) {
  lilyk::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline lilyk::Graph complete(int n) {
  lilyk::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline lilyk::Graph edges(std::size_t n, std::initializer_list<lilyk::Edge> es) {
  std::vector<lilyk::Edge> v(es);
  return lilyk::Graph::from_edges(n, v);
}

inline lilyk::VertexSet set(std::initializer_list<lilyk::Vertex> vs) {
  return lilyk::make_set(std::vector<lilyk::Vertex>(vs));
}

}  // namespace fx
