#pragma once

#include <optional>
#include <vector>

#include "lilyk/empirical.hpp"
#include "lilyk/graph.hpp"

namespace lilyk {

/// D r-dominates the target, A is a 2r-separated subset of D and of the target.
/// Since every dominator covers at most one vertex of A, |A| is a lower bound
/// on the optimum and |D|/|A| a proven approximation factor for this run.
struct CertifiedDominator {
  VertexSet dominators;
  VertexSet witnesses;
  VertexSet target;
  int radius = 0;
  Rational certified_ratio;
};

/// Greedy r-domination of x. Vertices flagged in `removed` are deleted from
/// the graph first (distances and all invariants then refer to g - removed);
/// vertices outside x are treated as already dominated.
CertifiedDominator approx_dominating(const Graph& g, const VertexSet& x, int r,
                                     std::span<const char> removed = {});

struct RcDominationResult {
  bool feasible = false;
  VertexSet dominators;
  /// |D_i| after each stage i = 1..c.
  std::vector<std::size_t> stage_sizes;
};

/// Multi-stage (r,c)-domination: stage i+1 patches the stage-i solution with
/// shadow representatives and a fresh dominator of the deficient vertices.
/// Infeasible iff some closed r-ball has fewer than c vertices.
RcDominationResult approx_rc_dominating(const Graph& g, int r, int c);

/// Number of vertices of `d` within distance r of every vertex of g.
std::vector<int> coverage(const Graph& g, const VertexSet& d, int r);

/// True when every vertex of `targets` (all of g if empty optional) has at
/// least c vertices of `d` within distance r.
bool is_rc_dominating(const Graph& g, const VertexSet& d, int r, int c,
                      const std::optional<VertexSet>& targets = std::nullopt);

/// Smallest closed r-ball size, the largest feasible c.
std::size_t min_ball_size(const Graph& g, int r);

}  // namespace lilyk
