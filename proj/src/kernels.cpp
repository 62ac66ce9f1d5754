#include "lilyk/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "lilyk/domination.hpp"
#include "lilyk/empirical.hpp"

namespace lilyk {

namespace {

std::vector<std::int64_t> identity_origin(std::size_t n) {
  std::vector<std::int64_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

bool has_isolated_ball(const Graph& g, int r) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (truncated_bfs(g, std::span<const Vertex>(&v, 1), r).size() == 1) return true;
  return false;
}

// Plain fixture with a fixed answer: one vertex and k = 0 answers "no" for
// every minimisation problem and "yes" for scattered sets; the empty graph
// covers the two remaining cases.
AnnotatedInstance trivial_plain(Problem problem, ProblemParams params, bool answer) {
  AnnotatedInstance inst;
  inst.problem = problem;
  inst.params = params;
  inst.trivial = answer;
  bool one_vertex = is_maximisation(problem) ? answer : !answer;
  inst.graph = Graph(one_vertex ? 1 : 0);
  inst.k = is_maximisation(problem) && !answer ? 1 : 0;
  inst.L = all_vertices(inst.graph);
  inst.U = inst.L;
  inst.origin.assign(inst.graph.size(), kGadgetOrigin);
  return inst;
}

struct GadgetBuild {
  Graph g;
  std::size_t base = 0;
  VertexSet outside;
};

GadgetBuild start_gadget(const AnnotatedInstance& inst, const VertexSet& keep_out) {
  GadgetBuild b;
  b.g = inst.graph;
  b.base = b.g.size();
  b.outside = set_difference(all_vertices(b.g), keep_out);
  return b;
}

AnnotatedInstance finish_gadget(GadgetBuild& b, const AnnotatedInstance& inst,
                                std::int64_t offset) {
  AnnotatedInstance out;
  out.problem = inst.problem;
  out.params = inst.params;
  out.offset = offset;
  out.k = inst.k + offset;
  out.graph = std::move(b.g);
  out.L = all_vertices(out.graph);
  out.U = out.L;
  out.origin.assign(out.graph.size(), kGadgetOrigin);
  for (std::size_t v = 0; v < b.base; ++v)
    out.origin[v] = v < inst.origin.size() ? inst.origin[v] : static_cast<std::int64_t>(v);
  return out;
}

void check_kind(const AnnotatedInstance& inst, std::initializer_list<Problem> ok,
                const char* what) {
  if (std::find(ok.begin(), ok.end(), inst.problem) == ok.end())
    throw InputError(std::string(what) + ": wrong problem '" + problem_name(inst.problem) + "'");
}

}  // namespace

AnnotatedInstance plain_instance(const Graph& g, Problem problem, ProblemParams params,
                                 std::int64_t k) {
  AnnotatedInstance inst;
  inst.graph = g;
  inst.problem = problem;
  inst.params = params;
  inst.k = k;
  inst.L = all_vertices(g);
  inst.U = inst.L;
  inst.origin = identity_origin(g.size());
  return inst;
}

AnnotatedInstance trivial_instance(Problem problem, ProblemParams params, bool answer) {
  AnnotatedInstance inst;
  inst.graph = Graph(1);
  inst.problem = problem;
  inst.params = params;
  inst.trivial = answer;
  inst.origin = {kGadgetOrigin};
  if (is_maximisation(problem)) {
    // Candidates {0} with k = 0 is always yes; no candidates with k = 1 never is.
    inst.L = {0};
    inst.U = answer ? VertexSet{0} : VertexSet{};
    inst.k = answer ? 0 : 1;
  } else {
    // Nothing to satisfy is always yes; vertex 0 with budget 0 never is
    // (lambda/mu additionally forbids every candidate).
    inst.L = answer ? VertexSet{} : VertexSet{0};
    bool no_candidates =
        !answer && (problem == Problem::lambdamu || problem == Problem::perfectcode);
    inst.U = no_candidates ? VertexSet{} : VertexSet{0};
    inst.k = 0;
  }
  return inst;
}

// ---- bikernels ---------------------------------------------------------------

PreparedBikernel prepare_bikernel(const Graph& g, Problem problem, ProblemParams params,
                                  const KernelOptions& opts) {
  PreparedBikernel prep;
  prep.problem = problem;
  prep.params = params;
  prep.input_size = g.size();
  const int r = params.r;
  if (r < 1) throw InputError("bikernel: r must be >= 1");
  const VertexSet everything = all_vertices(g);
  prep.scattered_witness = greedy_scattered(g, everything, r).size();

  switch (problem) {
    case Problem::rcdom: {
      if (params.c < 1) throw InputError("bikernel: c must be >= 1");
      if (min_ball_size(g, r) < static_cast<std::size_t>(params.c)) {
        prep.infeasible = true;
        return prep;
      }
      auto core = constraint_core_rc_dom(g, r, params.c, opts.core);
      prep.constraints = core.core;
      prep.candidates = everything;
      prep.trace = std::move(core.trace);
      prep.kernel = projection_kernel(g, prep.constraints, r, params.c, opts.closure_threshold);
      break;
    }
    case Problem::total: {
      if (has_isolated_ball(g, r)) {
        prep.infeasible = true;
        return prep;
      }
      auto core = constraint_core_total(g, r, opts.core);
      prep.constraints = core.core;
      prep.candidates = everything;
      prep.trace = std::move(core.trace);
      prep.kernel = projection_kernel(g, prep.constraints, r, 1, opts.closure_threshold);
      break;
    }
    case Problem::roman: {
      auto core = constraint_core_roman(g, r, opts.core);
      prep.constraints = core.core;
      prep.candidates = everything;
      prep.trace = std::move(core.trace);
      prep.kernel = projection_kernel(g, prep.constraints, r, 1, opts.closure_threshold);
      break;
    }
    case Problem::scatter: {
      if (params.c < 1) throw InputError("bikernel: c must be >= 1");
      auto core = solution_core_scattered(g, r, params.c, opts.core);
      prep.candidates = core.core;
      prep.constraints = everything;
      prep.trace = std::move(core.trace);
      prep.kernel = projection_kernel(g, prep.candidates, r, params.c, opts.closure_threshold);
      break;
    }
    case Problem::lambdamu:
    case Problem::perfectcode: {
      if (problem == Problem::perfectcode) params.lambda = params.mu = 1;
      prep.params = params;
      if (params.lambda < 1 || params.mu < params.lambda)
        throw InputError("bikernel: need 1 <= lambda <= mu");
      if (min_ball_size(g, r) < static_cast<std::size_t>(params.lambda)) {
        prep.infeasible = true;
        return prep;
      }
      int adhesion = params.mu;
      auto dom = approx_rc_dominating(g, r, params.mu);
      if (!dom.feasible) {
        adhesion = params.lambda;
        dom = approx_rc_dominating(g, r, params.lambda);
      }
      auto core = reduce_annotated_lambda_mu(g, everything, everything, r, params.lambda,
                                             params.mu, dom.dominators, adhesion, opts.core);
      prep.constraints = core.constraints;
      prep.candidates = core.candidates;
      if (problem == Problem::perfectcode) prep.constraints = prep.candidates;
      prep.trace = std::move(core.trace);
      prep.kernel = projection_kernel(g, prep.candidates, r, 1, opts.closure_threshold);
      break;
    }
  }
  return prep;
}

AnnotatedInstance emit_bikernel(const PreparedBikernel& prep, std::int64_t k) {
  if (k < 0) throw InputError("bikernel: k must be >= 0");
  const auto witness = static_cast<std::int64_t>(prep.scattered_witness);
  if (prep.infeasible) return trivial_instance(prep.problem, prep.params, false);
  if (is_maximisation(prep.problem)) {
    if (witness >= k) return trivial_instance(prep.problem, prep.params, true);
  } else if (witness > k) {
    return trivial_instance(prep.problem, prep.params, false);
  }
  AnnotatedInstance inst;
  inst.graph = prep.kernel.sub.graph;
  inst.problem = prep.problem;
  inst.params = prep.params;
  inst.k = k;
  inst.L = prep.kernel.sub.project(prep.constraints);
  inst.U = prep.kernel.sub.project(prep.candidates);
  inst.origin.assign(prep.kernel.sub.to_parent.begin(), prep.kernel.sub.to_parent.end());
  if (k > 0)
    record_measurement("kernel_size_per_k",
                       Rational::of(static_cast<std::int64_t>(inst.graph.size()), k));
  return inst;
}

AnnotatedInstance bikernel_rc_dom(const Graph& g, int r, int c, std::int64_t k,
                                  const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::rcdom, {r, c, 1, 1}, opts), k);
}
AnnotatedInstance bikernel_total(const Graph& g, int r, std::int64_t k,
                                 const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::total, {r, 1, 1, 1}, opts), k);
}
AnnotatedInstance bikernel_roman(const Graph& g, int r, std::int64_t k,
                                 const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::roman, {r, 1, 1, 1}, opts), k);
}
AnnotatedInstance bikernel_scattered(const Graph& g, int r, int c, std::int64_t k,
                                     const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::scatter, {r, c, 1, 1}, opts), k);
}
AnnotatedInstance bikernel_lambda_mu(const Graph& g, int r, int lambda, int mu, std::int64_t k,
                                     const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::lambdamu, {r, 1, lambda, mu}, opts), k);
}
AnnotatedInstance bikernel_perfect_code(const Graph& g, int r, std::int64_t k,
                                        const KernelOptions& opts) {
  return emit_bikernel(prepare_bikernel(g, Problem::perfectcode, {r, 1, 1, 1}, opts), k);
}

// ---- gadget kernels ----------------------------------------------------------

AnnotatedInstance be_kernel_rc_dom(const AnnotatedInstance& inst) {
  check_kind(inst, {Problem::rcdom}, "be_kernel_rc_dom");
  if (inst.trivial) return trivial_plain(inst.problem, inst.params, *inst.trivial);
  const int r = inst.params.r, c = inst.params.c;
  auto b = start_gadget(inst, inst.L);
  std::vector<Vertex> a;
  for (int i = 0; i < c; ++i) a.push_back(b.g.add_vertex());
  if (r >= 2) {
    Vertex b1 = b.g.add_vertex(), b2 = b.g.add_vertex(), b3 = b.g.add_vertex();
    for (Vertex ai : a) {
      b.g.add_edge(ai, b1);
      b.g.add_edge(ai, b2);
    }
    for (Vertex o : b.outside) attach_path(b.g, b1, o, r - 1);
    attach_path(b.g, b2, b3, r - 1);
  } else {
    Vertex bb = b.g.add_vertex();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) b.g.add_edge(a[i], a[j]);
    for (Vertex ai : a) {
      for (Vertex o : b.outside) b.g.add_edge(ai, o);
      b.g.add_edge(ai, bb);
    }
  }
  return finish_gadget(b, inst, c);
}

AnnotatedInstance be_kernel_total(const AnnotatedInstance& inst) {
  check_kind(inst, {Problem::total}, "be_kernel_total");
  if (inst.trivial) return trivial_plain(inst.problem, inst.params, *inst.trivial);
  const int r = inst.params.r;
  auto b = start_gadget(inst, inst.L);
  Vertex hub = b.g.add_vertex(), a1 = b.g.add_vertex(), a2 = b.g.add_vertex();
  for (Vertex o : b.outside) attach_path(b.g, hub, o, r);
  attach_path(b.g, hub, a1, r);
  attach_path(b.g, a1, a2, r);
  return finish_gadget(b, inst, 2);
}

AnnotatedInstance be_kernel_roman(const AnnotatedInstance& inst) {
  check_kind(inst, {Problem::roman}, "be_kernel_roman");
  if (inst.trivial) return trivial_plain(inst.problem, inst.params, *inst.trivial);
  const int r = inst.params.r;
  auto b = start_gadget(inst, inst.L);
  Vertex hub = b.g.add_vertex();
  Vertex leaves[3] = {b.g.add_vertex(), b.g.add_vertex(), b.g.add_vertex()};
  for (Vertex o : b.outside) attach_path(b.g, hub, o, r);
  for (Vertex leaf : leaves) attach_path(b.g, hub, leaf, r);
  return finish_gadget(b, inst, 2);
}

AnnotatedInstance be_kernel_scattered(const AnnotatedInstance& inst) {
  check_kind(inst, {Problem::scatter}, "be_kernel_scattered");
  if (inst.trivial) return trivial_plain(inst.problem, inst.params, *inst.trivial);
  const int r = inst.params.r, c = inst.params.c;
  auto b = start_gadget(inst, inst.U);
  Vertex a1 = b.g.add_vertex();
  Vertex a2 = r >= 2 ? b.g.add_vertex() : a1;
  for (int i = 0; i < c; ++i) b.g.add_edge(a2, b.g.add_vertex());
  for (Vertex o : b.outside) attach_path(b.g, a1, o, r);
  if (r >= 2) attach_path(b.g, a1, a2, r - 1);
  return finish_gadget(b, inst, c);
}

AnnotatedInstance be_kernel_perfect_code(const AnnotatedInstance& inst) {
  check_kind(inst, {Problem::perfectcode, Problem::lambdamu}, "be_kernel_perfect_code");
  if (inst.params.lambda != 1 || inst.params.mu != 1)
    throw InputError("be_kernel_perfect_code: needs lambda = mu = 1");
  AnnotatedInstance in = inst;
  in.problem = Problem::perfectcode;
  if (in.trivial) return trivial_plain(in.problem, in.params, *in.trivial);
  if (in.L != in.U) throw InputError("be_kernel_perfect_code: needs L = U");
  const int r = in.params.r;
  auto b = start_gadget(in, in.L);
  for (Vertex o : b.outside) attach_path(b.g, o, std::nullopt, 2 * r);
  return finish_gadget(b, in, static_cast<std::int64_t>(b.outside.size()));
}

AnnotatedInstance be_kernel(const AnnotatedInstance& inst) {
  switch (inst.problem) {
    case Problem::rcdom: return be_kernel_rc_dom(inst);
    case Problem::total: return be_kernel_total(inst);
    case Problem::roman: return be_kernel_roman(inst);
    case Problem::scatter: return be_kernel_scattered(inst);
    case Problem::perfectcode: return be_kernel_perfect_code(inst);
    case Problem::lambdamu: break;
  }
  throw InputError("no gadget kernel for general lambda/mu domination");
}

AnnotatedInstance kernelize(const Graph& g, Problem problem, ProblemParams params,
                            std::int64_t k, const KernelOptions& opts) {
  return be_kernel(emit_bikernel(prepare_bikernel(g, problem, params, opts), k));
}

// ---- multikernels --------------------------------------------------------------

namespace {

MultikernelResult start_multikernel(const Graph& g, const VertexSet& core, int radius,
                                    const KernelOptions& opts) {
  auto kern = projection_kernel(g, core, radius, 1, opts.closure_threshold);
  MultikernelResult res;
  res.graph = kern.sub.graph;
  res.origin.assign(kern.sub.to_parent.begin(), kern.sub.to_parent.end());
  res.core = kern.sub.project(core);
  res.outside = set_difference(all_vertices(res.graph), res.core);
  return res;
}

}  // namespace

MultikernelResult multikernel_domination_family(const Graph& g, int r,
                                                const KernelOptions& opts) {
  if (r < 1) throw InputError("multikernel: r must be >= 1");
  VertexSet joint = constraint_core_rc_dom(g, r, 1, opts.core).core;
  joint = set_union(joint, constraint_core_total(g, r, opts.core).core);
  joint = set_union(joint, constraint_core_roman(g, r, opts.core).core);
  auto res = start_multikernel(g, joint, r, opts);
  for (Vertex v : res.outside) {
    Vertex b1 = attach_path(res.graph, v, std::nullopt, r).endpoint;
    Vertex b2 = attach_path(res.graph, b1, std::nullopt, r).endpoint;
    for (int i = 0; i < 3; ++i) attach_path(res.graph, b1, std::nullopt, r);
    for (int i = 0; i < 3; ++i) attach_path(res.graph, b2, std::nullopt, r);
  }
  res.origin.resize(res.graph.size(), kGadgetOrigin);
  const auto c = 2 * static_cast<std::int64_t>(res.outside.size());
  res.dom_offset = c;
  res.total_offset = c;
  res.roman_offset = 2 * c;
  return res;
}

MultikernelResult multikernel_dom_ind(const Graph& g, int lambda, int mu,
                                      const KernelOptions& opts) {
  if (lambda < 1 || mu < lambda) throw InputError("multikernel: need 1 <= lambda <= mu");
  VertexSet joint;
  std::int64_t sigma = 1;
  for (int r = lambda; r <= mu; ++r) {
    joint = set_union(joint, constraint_core_rc_dom(g, r, 1, opts.core).core);
    joint = set_union(joint, solution_core_scattered(g, r, 1, opts.core).core);
    sigma = std::lcm(sigma, static_cast<std::int64_t>(2 * r + 1));
  }
  auto res = start_multikernel(g, joint, mu, opts);
  res.sigma = sigma;
  for (Vertex v : res.outside)
    attach_path(res.graph, v, std::nullopt, static_cast<int>(sigma - 1));
  res.origin.resize(res.graph.size(), kGadgetOrigin);
  for (int r = lambda; r <= mu; ++r)
    res.radius_offsets.emplace_back(
        r, sigma / (2 * r + 1) * static_cast<std::int64_t>(res.outside.size()));
  return res;
}

}  // namespace lilyk
