#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lilyk {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Malformed input (bad ids, bad parameters, parse failures).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (oracle size guard, iteration caps) was hit.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime self-check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph with dense ids. Adjacency lists stay sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws InputError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < adj_.size(); }
  void check_vertex(Vertex v) const;

  Vertex add_vertex(int label = 0);
  /// Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  /// Labels default to 0. Used to refine pad signatures.
  int label(Vertex v) const { return labels_.empty() ? 0 : labels_[v]; }
  void set_label(Vertex v, int label);
  std::vector<int> labels() const;
  bool has_labels() const { return !labels_.empty(); }

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.labels() == b.labels();
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> labels_;
  std::size_t num_edges_ = 0;
};

// ---- vertex-set helpers ----------------------------------------------------

VertexSet make_set(std::vector<Vertex> vs);
VertexSet all_vertices(const Graph& g);
std::vector<char> membership(std::size_t n, std::span<const Vertex> s);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// ---- traversal -------------------------------------------------------------

struct Reached {
  Vertex vertex;
  int dist;
};

/// Multi-source BFS up to `radius`. Vertices flagged in `removed` are never
/// entered; vertices flagged in `stop` are recorded but not expanded (sources
/// are always expanded). Output is in BFS order, one entry per vertex.
std::vector<Reached> truncated_bfs(const Graph& g, std::span<const Vertex> sources,
                                   int radius, std::span<const char> removed = {},
                                   std::span<const char> stop = {});

/// Closed ball N^r[v].
VertexSet ball(const Graph& g, Vertex v, int r);

/// Exact distance if at most `cap`, otherwise kInfinity.
int bounded_distance(const Graph& g, Vertex u, Vertex v, int cap);

/// Lexicographically least shortest path from `from` to `to` (both
/// included) among paths of length <= radius whose internal vertices are not
/// flagged in `avoid`. Empty if no such path exists.
std::vector<Vertex> least_shortest_path(const Graph& g, Vertex from, Vertex to, int radius,
                                        std::span<const char> avoid = {});

// ---- construction helpers --------------------------------------------------

struct AttachResult {
  /// Created vertices in path order (the fresh endpoint, if any, is last).
  std::vector<Vertex> created;
  Vertex endpoint;
  /// True when len == 1 and the edge already existed.
  bool noop = false;
};

/// Connects u to v (or to a fresh vertex when v is empty) by a path of
/// length `len`, creating len - 1 internal vertices.
AttachResult attach_path(Graph& g, Vertex u, std::optional<Vertex> v, int len);

struct InducedSubgraph {
  Graph graph;
  /// new id -> id in the parent graph
  std::vector<Vertex> to_parent;
  /// parent id -> new id, or -1 when not kept
  std::vector<std::int64_t> from_parent;

  VertexSet lift(const VertexSet& s) const;
  VertexSet project(const VertexSet& s) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// ---- sparsity measurements -------------------------------------------------

/// Maximal set A subset of x with pairwise distance > 2r, scanned by id.
VertexSet greedy_scattered(const Graph& g, const VertexSet& x, int r);

/// Repeatedly removes a minimum-degree vertex (ties: smallest id).
std::vector<Vertex> min_degree_removal_order(const Graph& g);
int degeneracy(const Graph& g);

struct WcolBound {
  int value = 0;
  /// Left-to-right ordering (reverse of the removal order).
  std::vector<Vertex> ordering;
};

/// Weak r-colouring number of the reversed min-degree ordering; an upper
/// bound for wcol_r(g).
WcolBound wcol_upper_bound(const Graph& g, int r);

}  // namespace lilyk
