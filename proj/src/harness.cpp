#include "lilyk/harness.hpp"

#include <sstream>

namespace lilyk {

namespace {

Optimum from_answer(const OracleAnswer& a) {
  if (!a.feasible) return std::nullopt;
  return a.optimum;
}

Optimum solve(const Graph& g, Problem problem, ProblemParams p, const VertexSet& L,
              const VertexSet& U, const OracleOptions& opts) {
  switch (problem) {
    case Problem::rcdom: return from_answer(opt_rc_dom(g, p.r, p.c, L, opts));
    case Problem::total: return from_answer(opt_total(g, p.r, L, opts));
    case Problem::roman: return from_answer(opt_roman(g, p.r, L, opts));
    case Problem::scatter: return from_answer(max_scattered(g, p.r, p.c, U, opts));
    case Problem::lambdamu:
      return from_answer(opt_lambda_mu(g, p.r, p.lambda, p.mu, L, U, opts));
    case Problem::perfectcode: return from_answer(opt_lambda_mu(g, p.r, 1, 1, L, U, opts));
  }
  throw InternalError("unhandled problem");
}

}  // namespace

Optimum plain_optimum(const Graph& g, Problem problem, ProblemParams params,
                      const OracleOptions& opts) {
  auto all = all_vertices(g);
  return solve(g, problem, params, all, all, opts);
}

Optimum annotated_optimum(const AnnotatedInstance& inst, const OracleOptions& opts) {
  return solve(inst.graph, inst.problem, inst.params, inst.L, inst.U, opts);
}

bool decide(Problem problem, const Optimum& opt, std::int64_t k) {
  if (is_maximisation(problem)) return opt && *opt >= k;
  return opt && *opt <= k;
}

std::string optimum_str(const Optimum& opt) {
  return opt ? std::to_string(*opt) : std::string("infeasible");
}

// ---- pipeline -----------------------------------------------------------------

PipelineReport verify_pipeline(const Graph& g, Problem problem, ProblemParams params,
                               std::int64_t k_lo, std::int64_t k_hi,
                               const HarnessOptions& opts) {
  if (k_lo < 0 || k_hi < k_lo) throw InputError("verify: need 0 <= k_lo <= k_hi");
  PipelineReport rep;
  rep.problem = problem;
  rep.params = params;
  rep.input_size = g.size();
  MeasurementScope scope(rep.constants, opts.instance_id);

  rep.original = plain_optimum(g, problem, params, opts.oracle);
  auto prep = prepare_bikernel(g, problem, params, opts.kernel);
  const bool has_be = opts.run_be && problem != Problem::lambdamu;

  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    PipelineRow row;
    row.k = k;
    row.original = decide(problem, rep.original, k);
    auto inst = emit_bikernel(prep, k);
    row.bikernel_size = inst.graph.size();
    if (inst.trivial) {
      row.trivial = true;
      // The fixture must answer as labelled.
      bool fixture = decide(problem, annotated_optimum(inst, opts.oracle), inst.k);
      if (fixture != *inst.trivial) ++rep.disagreements;
      row.bikernel = *inst.trivial;
    } else {
      if (!rep.annotated) rep.annotated = annotated_optimum(inst, opts.gadget_oracle);
      row.bikernel = decide(problem, *rep.annotated, k);
    }
    if (has_be) {
      auto plain = be_kernel(inst);
      row.kernel_size = plain.graph.size();
      if (inst.trivial) {
        row.kernel = decide(problem, plain_optimum(plain.graph, problem, plain.params,
                                                   opts.gadget_oracle),
                            plain.k);
      } else {
        if (!rep.kernel) {
          rep.kernel = plain_optimum(plain.graph, problem, plain.params, opts.gadget_oracle);
          rep.offset = plain.offset;
          const auto& a = *rep.annotated;
          const auto& b = *rep.kernel;
          rep.offset_exact = (!a && !b) || (a && b && *b == *a + plain.offset);
        }
        row.kernel = decide(problem, *rep.kernel, plain.k);
      }
    }
    if (row.bikernel != row.original || (row.kernel && *row.kernel != row.original))
      ++rep.disagreements;
    rep.rows.push_back(row);
  }
  return rep;
}

std::string PipelineReport::text() const {
  std::ostringstream out;
  out << "problem " << problem_name(problem) << " r=" << params.r << " c=" << params.c
      << " lambda=" << params.lambda << " mu=" << params.mu << " n=" << input_size << '\n';
  out << "optimum " << optimum_str(original);
  if (annotated) out << "  annotated " << optimum_str(*annotated);
  if (kernel) out << "  kernel " << optimum_str(*kernel) << " (offset " << offset << ")";
  out << '\n';
  out << "   k  orig  bik  kern  |bik|  |kern|\n";
  for (const auto& row : rows) {
    auto yn = [](bool b) { return b ? "yes" : "no "; };
    out.width(4);
    out << row.k << "  " << yn(row.original) << "   " << yn(row.bikernel)
        << (row.trivial ? "*" : " ") << "  " << (row.kernel ? yn(*row.kernel) : " - ") << "  ";
    out.width(5);
    out << row.bikernel_size << "  ";
    out.width(6);
    out << row.kernel_size << '\n';
  }
  out << (ok() ? "agreement: full" : "agreement: FAILED") << " (" << disagreements
      << " disagreements";
  if (offset_exact) out << ", offset " << (*offset_exact ? "exact" : "WRONG");
  out << ")\n";
  return out.str();
}

std::string PipelineReport::key_values() const {
  std::ostringstream out;
  out << "problem=" << problem_name(problem) << '\n'
      << "n=" << input_size << '\n'
      << "optimum=" << optimum_str(original) << '\n';
  if (annotated) out << "annotated_optimum=" << optimum_str(*annotated) << '\n';
  if (kernel) out << "kernel_optimum=" << optimum_str(*kernel) << '\n';
  if (offset_exact) out << "offset=" << offset << "\noffset_exact=" << *offset_exact << '\n';
  out << "disagreements=" << disagreements << '\n';
  for (const auto& m : constants.measurements())
    out << "constant." << m.name << '=' << m.value.str() << '\n';
  return out.str();
}

// ---- peel safety ----------------------------------------------------------------

PeelReport verify_peel_safety(const Graph& g, Problem problem, ProblemParams params,
                              const HarnessOptions& opts) {
  PeelReport rep;
  rep.original = plain_optimum(g, problem, params, opts.oracle);
  auto prep = prepare_bikernel(g, problem, params, opts.kernel);
  if (prep.infeasible) return rep;
  if (problem == Problem::perfectcode) params.lambda = params.mu = 1;

  const VertexSet all = all_vertices(g);
  VertexSet L = all, U = all;
  std::ostringstream detail;
  for (const auto& step : prep.trace) {
    const bool on_candidates =
        problem == Problem::scatter || (step.phase == 2 && problem != Problem::rcdom);
    VertexSet& target = on_candidates ? U : L;
    if (!set_contains(target, step.removed))
      throw InternalError("peel trace removes a vertex twice");
    target = set_difference(target, VertexSet{step.removed});
    ++rep.steps;
    auto now = solve(g, problem, params, L, U, opts.oracle);
    if (now != rep.original) {
      ++rep.failures;
      detail << "peel " << rep.steps << " (vertex " << step.removed << "): optimum "
             << optimum_str(now) << " vs " << optimum_str(rep.original) << '\n';
    }
  }
  rep.detail = detail.str();
  return rep;
}

// ---- multikernels ---------------------------------------------------------------

bool MultikernelReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string MultikernelReport::text() const {
  std::ostringstream out;
  out << "multikernel n=" << input_size << " -> " << output_size << '\n';
  for (const auto& c : checks)
    out << "  " << c.name << ": " << optimum_str(c.before) << " -> " << optimum_str(c.after)
        << " (offset " << c.offset << ") " << (c.ok ? "ok" : "WRONG") << '\n';
  return out.str();
}

namespace {

IdentityCheck identity(std::string name, const Graph& g, const Graph& h, Problem problem,
                       ProblemParams params, std::int64_t offset, const HarnessOptions& opts) {
  IdentityCheck c;
  c.name = std::move(name);
  c.offset = offset;
  c.before = plain_optimum(g, problem, params, opts.oracle);
  c.after = plain_optimum(h, problem, params, opts.gadget_oracle);
  c.ok = (!c.before && !c.after) || (c.before && c.after && *c.after == *c.before + offset);
  return c;
}

}  // namespace

MultikernelReport verify_multikernel_family(const Graph& g, int r, const HarnessOptions& opts) {
  auto mk = multikernel_domination_family(g, r, opts.kernel);
  MultikernelReport rep;
  rep.input_size = g.size();
  rep.output_size = mk.graph.size();
  ProblemParams p{r, 1, 1, 1};
  rep.checks.push_back(identity("dom", g, mk.graph, Problem::rcdom, p, mk.dom_offset, opts));
  rep.checks.push_back(identity("total", g, mk.graph, Problem::total, p, mk.total_offset, opts));
  rep.checks.push_back(identity("roman", g, mk.graph, Problem::roman, p, mk.roman_offset, opts));
  return rep;
}

MultikernelReport verify_multikernel_dom_ind(const Graph& g, int lambda, int mu,
                                             const HarnessOptions& opts) {
  auto mk = multikernel_dom_ind(g, lambda, mu, opts.kernel);
  MultikernelReport rep;
  rep.input_size = g.size();
  rep.output_size = mk.graph.size();
  for (auto [r, offset] : mk.radius_offsets) {
    ProblemParams p{r, 1, 1, 1};
    rep.checks.push_back(identity("dom_" + std::to_string(r), g, mk.graph, Problem::rcdom, p,
                                  offset, opts));
    rep.checks.push_back(identity("ind_" + std::to_string(2 * r), g, mk.graph, Problem::scatter,
                                  p, offset, opts));
  }
  return rep;
}

}  // namespace lilyk
