#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lilyk/graph.hpp"

namespace lilyk {

/// Distances from a vertex u to the x-vertices it reaches by x-avoiding paths
/// (internal vertices outside x) of length at most `radius`.
struct ProjectionProfile {
  int radius = 0;
  /// (x-vertex, distance), strictly increasing in the vertex.
  std::vector<std::pair<Vertex, int>> entries;

  VertexSet support() const;
  /// Distance to v, or kInfinity when v is not in the support.
  int distance_to(Vertex v) const;
  /// Canonical text form; equal profiles encode equally.
  std::string encode() const;

  friend bool operator==(const ProjectionProfile& a, const ProjectionProfile& b) {
    return a.radius == b.radius && a.entries == b.entries;
  }
  friend bool operator<(const ProjectionProfile& a, const ProjectionProfile& b) {
    return a.entries < b.entries;
  }
};

/// Same as profile() but with x given as a membership mask.
ProjectionProfile profile_masked(const Graph& g, std::span<const char> x_mask, Vertex u, int r);

ProjectionProfile profile(const Graph& g, const VertexSet& x, Vertex u, int r);
VertexSet projection(const Graph& g, const VertexSet& x, Vertex u, int r);

/// Vertices within distance r of u that u cannot reach by an x-avoiding path
/// of length at most r.
VertexSet shadow(const Graph& g, const VertexSet& x, Vertex u, int r);
/// shadow(u) together with projection(u).
VertexSet sp_union(const Graph& g, const VertexSet& x, Vertex u, int r);

struct ProfileClass {
  ProjectionProfile profile;
  VertexSet members;
};

struct ProfilePartition {
  int radius = 0;
  VertexSet x;
  /// Ordered by smallest member.
  std::vector<ProfileClass> classes;

  /// Index of the class holding v, or -1 (v in x).
  int class_of(Vertex v) const;
  std::vector<int> class_index;
};

/// Groups V \ x (or only `ground` when given) by profile onto x.
ProfilePartition profile_partition(const Graph& g, const VertexSet& x, int r,
                                   const std::optional<VertexSet>& ground = std::nullopt);

/// 4 * degeneracy(g), at least 1.
int default_closure_threshold(const Graph& g);

/// Grows x until every outside vertex projects onto at most `threshold`
/// vertices. Throws ResourceGuardError after 10 * |V| additions.
VertexSet projection_closure(const Graph& g, const VertexSet& x, int r,
                             std::optional<int> threshold = std::nullopt);

/// Adds shortest paths so that g[result] realises dist_g(u, v) for every pair
/// u, v in x at distance at most r.
VertexSet path_closure(const Graph& g, const VertexSet& x, int r);

struct ProjectionKernel {
  /// Kept vertices in g (sorted); the kernel graph is g[kept].
  VertexSet kept;
  InducedSubgraph sub;
  /// Vertices added by the repair pass.
  std::size_t repaired = 0;
};

/// Induced subgraph that keeps short distances inside x and realises each
/// profile onto x at least min(c, p) times. Checked before returning.
ProjectionKernel projection_kernel(const Graph& g, const VertexSet& x, int r, int c,
                                   std::optional<int> threshold = std::nullopt);

struct ProjectionKernelCheck {
  bool distances_preserved = true;
  bool profiles_realized = true;
  std::string detail;
  bool ok() const { return distances_preserved && profiles_realized; }
};

/// Recomputes both kernel properties of g[kept] from scratch.
ProjectionKernelCheck verify_projection_kernel(const Graph& g, const VertexSet& x,
                                               const VertexSet& kept, int r, int c);

}  // namespace lilyk
