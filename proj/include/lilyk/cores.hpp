#pragma once

#include <vector>

#include "lilyk/graph.hpp"
#include "lilyk/problem.hpp"
#include "lilyk/wideness.hpp"

namespace lilyk {

/// The instance has no (r,c)-dominating set at all.
class InfeasibleError : public InputError {
 public:
  using InputError::InputError;
};

struct CoreOptions {
  /// Remove several centres per lily (not covered by the safety argument).
  bool batch = false;
  UqwOptions uqw;
};

struct CoreStep {
  Vertex removed;
  /// 1 for constraint peels, 2 for candidate peels (lambda/mu only).
  int phase = 1;
  std::size_t roots = 0;
  std::size_t centres = 0;
};

struct CoreResult {
  VertexSet core;
  Problem problem = Problem::rcdom;
  ProblemParams params;
  std::size_t rounds = 0;
  std::vector<CoreStep> trace;
};

CoreResult constraint_core_rc_dom(const Graph& g, int r, int c, const CoreOptions& opts = {});
CoreResult constraint_core_total(const Graph& g, int r, const CoreOptions& opts = {});
CoreResult constraint_core_roman(const Graph& g, int r, const CoreOptions& opts = {});
CoreResult solution_core_scattered(const Graph& g, int r, int c, const CoreOptions& opts = {});

struct LambdaMuCore {
  VertexSet constraints;  // L'
  VertexSet candidates;   // U'
  std::vector<CoreStep> trace;
};

/// Shrinks L (phase 1) then U (phase 2) of an annotated (r,[lambda,mu])
/// instance. `dominator` must (r,adhesion)-dominate g; lily roots are drawn
/// from it.
LambdaMuCore reduce_annotated_lambda_mu(const Graph& g, const VertexSet& L, const VertexSet& U,
                                        int r, int lambda, int mu, const VertexSet& dominator,
                                        int adhesion, const CoreOptions& opts = {});

/// Starting from `start`, removes the traced vertices in order. Phase-2 steps
/// are ignored unless `phase` selects them.
VertexSet replay_trace(const VertexSet& start, const std::vector<CoreStep>& trace, int phase = 1);

}  // namespace lilyk
