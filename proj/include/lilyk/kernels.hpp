#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lilyk/cores.hpp"
#include "lilyk/graph.hpp"
#include "lilyk/problem.hpp"
#include "lilyk/projections.hpp"

namespace lilyk {

inline constexpr std::int64_t kGadgetOrigin = -1;

/// Graph plus budget and annotations. For plain (non-annotated) instances
/// L and U are all of V.
struct AnnotatedInstance {
  Graph graph;
  Problem problem = Problem::rcdom;
  ProblemParams params;
  std::int64_t k = 0;
  VertexSet L;
  VertexSet U;
  /// Budget shift added by gadget constructions.
  std::int64_t offset = 0;
  /// Output vertex -> input vertex, or kGadgetOrigin.
  std::vector<std::int64_t> origin;
  /// Set for canonical trivial instances produced by early exits.
  std::optional<bool> trivial;

  friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

/// The plain instance (g, k): L = U = V, identity origin.
AnnotatedInstance plain_instance(const Graph& g, Problem problem, ProblemParams params,
                                 std::int64_t k);

/// One-vertex instance with the requested answer (see README for the
/// per-problem fixtures).
AnnotatedInstance trivial_instance(Problem problem, ProblemParams params, bool answer);

struct KernelOptions {
  CoreOptions core;
  /// Closure threshold for projection kernels; default 4 * degeneracy.
  std::optional<int> closure_threshold;
};

/// The k-independent part of a bikernel: early-exit certificates, the core
/// and the projection kernel.
struct PreparedBikernel {
  Problem problem = Problem::rcdom;
  ProblemParams params;
  std::size_t input_size = 0;
  /// Infeasible for every k (ball check, isolated vertex for total).
  bool infeasible = false;
  /// |greedy_scattered(V, r)|, a lower bound on dom_r and sct_r.
  std::size_t scattered_witness = 0;
  VertexSet constraints;  // L
  VertexSet candidates;   // U
  std::vector<CoreStep> trace;
  ProjectionKernel kernel;
};

PreparedBikernel prepare_bikernel(const Graph& g, Problem problem, ProblemParams params,
                                  const KernelOptions& opts = {});
AnnotatedInstance emit_bikernel(const PreparedBikernel& prep, std::int64_t k);

AnnotatedInstance bikernel_rc_dom(const Graph& g, int r, int c, std::int64_t k,
                                  const KernelOptions& opts = {});
AnnotatedInstance bikernel_total(const Graph& g, int r, std::int64_t k,
                                 const KernelOptions& opts = {});
AnnotatedInstance bikernel_roman(const Graph& g, int r, std::int64_t k,
                                 const KernelOptions& opts = {});
AnnotatedInstance bikernel_scattered(const Graph& g, int r, int c, std::int64_t k,
                                     const KernelOptions& opts = {});
AnnotatedInstance bikernel_lambda_mu(const Graph& g, int r, int lambda, int mu, std::int64_t k,
                                     const KernelOptions& opts = {});
/// lambda = mu = 1 with L widened to U.
AnnotatedInstance bikernel_perfect_code(const Graph& g, int r, std::int64_t k,
                                        const KernelOptions& opts = {});

/// Turns an annotated instance back into a plain one with budget k + offset.
AnnotatedInstance be_kernel_rc_dom(const AnnotatedInstance& inst);
AnnotatedInstance be_kernel_total(const AnnotatedInstance& inst);
AnnotatedInstance be_kernel_roman(const AnnotatedInstance& inst);
AnnotatedInstance be_kernel_scattered(const AnnotatedInstance& inst);
AnnotatedInstance be_kernel_perfect_code(const AnnotatedInstance& inst);
/// Dispatches on inst.problem.
AnnotatedInstance be_kernel(const AnnotatedInstance& inst);

/// Plain kernel: bikernel followed by the matching gadget construction.
AnnotatedInstance kernelize(const Graph& g, Problem problem, ProblemParams params,
                            std::int64_t k, const KernelOptions& opts = {});

struct MultikernelResult {
  Graph graph;
  std::vector<std::int64_t> origin;
  /// Joint core, in output ids.
  VertexSet core;
  /// Kernel vertices outside the core (output ids) that received a gadget.
  VertexSet outside;
  /// Domination family: optimum shifts for dom, total and roman.
  std::int64_t dom_offset = 0, total_offset = 0, roman_offset = 0;
  /// dom/ind variant: (r, c_r) for every r in [lambda, mu].
  std::vector<std::pair<int, std::int64_t>> radius_offsets;
  std::int64_t sigma = 0;
};

MultikernelResult multikernel_domination_family(const Graph& g, int r,
                                                const KernelOptions& opts = {});
MultikernelResult multikernel_dom_ind(const Graph& g, int lambda, int mu,
                                      const KernelOptions& opts = {});

}  // namespace lilyk
