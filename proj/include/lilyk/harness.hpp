#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lilyk/empirical.hpp"
#include "lilyk/kernels.hpp"
#include "lilyk/oracle.hpp"

namespace lilyk {

/// nullopt means infeasible.
using Optimum = std::optional<std::int64_t>;

Optimum plain_optimum(const Graph& g, Problem problem, ProblemParams params,
                      const OracleOptions& opts = {});
/// Honours inst.L and inst.U; ignores inst.k.
Optimum annotated_optimum(const AnnotatedInstance& inst, const OracleOptions& opts = {});
/// Minimisation: feasible and optimum <= k. Maximisation: optimum >= k.
bool decide(Problem problem, const Optimum& opt, std::int64_t k);
std::string optimum_str(const Optimum& opt);

struct HarnessOptions {
  OracleOptions oracle;
  /// Gadget and multikernel graphs outgrow the plain guard.
  OracleOptions gadget_oracle{64};
  KernelOptions kernel;
  bool run_be = true;
  std::string instance_id;
};

struct PipelineRow {
  std::int64_t k = 0;
  bool original = false;
  bool bikernel = false;
  std::optional<bool> kernel;
  bool trivial = false;
  std::size_t bikernel_size = 0;
  std::size_t kernel_size = 0;
};

struct PipelineReport {
  Problem problem = Problem::rcdom;
  ProblemParams params;
  std::size_t input_size = 0;
  Optimum original;
  /// Optimum of the non-trivial annotated output, if one was built.
  std::optional<Optimum> annotated;
  std::optional<Optimum> kernel;
  std::int64_t offset = 0;
  /// kernel optimum == annotated optimum + offset (both infeasible counts).
  std::optional<bool> offset_exact;
  std::vector<PipelineRow> rows;
  std::size_t disagreements = 0;
  EmpiricalConstants constants;

  bool ok() const { return disagreements == 0 && offset_exact.value_or(true); }
  std::string text() const;
  /// `key=value` lines.
  std::string key_values() const;
};

/// Runs bikernel and (when defined) gadget kernel for every k in [k_lo, k_hi]
/// and compares all decisions with the oracle on the input.
PipelineReport verify_pipeline(const Graph& g, Problem problem, ProblemParams params,
                               std::int64_t k_lo, std::int64_t k_hi,
                               const HarnessOptions& opts = {});

struct PeelReport {
  Optimum original;
  std::size_t steps = 0;
  std::size_t failures = 0;
  std::string detail;
  bool ok() const { return failures == 0; }
};

/// Replays the core trace one peel at a time; after each peel the annotated
/// optimum must equal the optimum of the input.
PeelReport verify_peel_safety(const Graph& g, Problem problem, ProblemParams params,
                              const HarnessOptions& opts = {});

struct IdentityCheck {
  std::string name;
  Optimum before, after;
  std::int64_t offset = 0;
  bool ok = false;
};

struct MultikernelReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
  std::string text() const;
};

MultikernelReport verify_multikernel_family(const Graph& g, int r,
                                            const HarnessOptions& opts = {});
/// dom_r and the (2r)-independence number for every r in [lambda, mu].
MultikernelReport verify_multikernel_dom_ind(const Graph& g, int lambda, int mu,
                                             const HarnessOptions& opts = {});

}  // namespace lilyk
