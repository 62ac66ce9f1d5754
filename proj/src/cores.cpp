#include "lilyk/cores.hpp"

#include <algorithm>

#include "lilyk/domination.hpp"
#include "lilyk/empirical.hpp"

namespace lilyk {

namespace {

using RatioFn = std::function<std::size_t(std::size_t roots)>;

// Keeps centres pairwise at distance > gap in g (greedy by id).
void spread_centres(const Graph& g, WaterLily& lily, int gap) {
  std::vector<char> blocked(g.size(), 0);
  VertexSet kept;
  for (Vertex c : lily.centres) {
    if (blocked[c]) continue;
    kept.push_back(c);
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&c, 1), gap)) blocked[w] = 1;
  }
  lily.centres = std::move(kept);
}

// Centres removed from the candidate set for one lily.
VertexSet centres_to_peel(const WaterLily& lily, const RatioFn& need, bool batch) {
  if (!batch) return {lily.centres.front()};
  std::size_t required = need(lily.roots.size());
  std::size_t count = lily.centres.size() > required ? lily.centres.size() - required : 1;
  count = std::max<std::size_t>(1, count);
  return VertexSet(lily.centres.begin(), lily.centres.begin() + static_cast<long>(count));
}

CoreResult peel_loop(const Graph& g, Problem problem, ProblemParams params, LilyParams lp,
                     const RatioFn& need, const LilyFilter& extra, const CoreOptions& opts) {
  CoreResult res;
  res.problem = problem;
  res.params = params;
  res.core = all_vertices(g);
  LilyFinder finder(g, lp);
  if (!finder.feasible()) {
    if (problem == Problem::rcdom)
      throw InfeasibleError("graph has no (" + std::to_string(params.r) + "," +
                            std::to_string(params.c) + ")-dominating set");
    return res;
  }
  LilyFilter filter = [&](WaterLily& lily) {
    if (extra && !extra(lily)) return false;
    return lily.centres.size() >= need(lily.roots.size());
  };
  while (auto lily = finder.find(res.core, filter)) {
    record_measurement("lily_ratio",
                       Rational::of(static_cast<std::int64_t>(lily->centres.size()),
                                    static_cast<std::int64_t>(lily->roots.size())));
    for (Vertex a : centres_to_peel(*lily, need, opts.batch)) {
      res.core.erase(std::lower_bound(res.core.begin(), res.core.end(), a));
      res.trace.push_back({a, 1, lily->roots.size(), lily->centres.size()});
    }
  }
  res.rounds = res.trace.size();
  return res;
}

LilyParams core_lily_params(int r, int adhesion, bool signature, const CoreOptions& opts) {
  if (r < 1) throw InputError("core: r must be >= 1");
  LilyParams lp;
  lp.depth = r;
  lp.radius = 2 * r;
  lp.adhesion = adhesion;
  lp.min_centres = 2;
  lp.use_signature = signature;
  lp.uqw = opts.uqw;
  return lp;
}

}  // namespace

CoreResult constraint_core_rc_dom(const Graph& g, int r, int c, const CoreOptions& opts) {
  if (c < 1) throw InputError("core: c must be >= 1");
  auto lp = core_lily_params(r, c, false, opts);
  LilyFilter extra;
  if (c >= 2) {
    // Every vertex within distance r of an r-pad must be (r,c)-dominated by
    // the roots, otherwise exchanging the pad for the roots can lose coverage.
    extra = [&g, r, c](WaterLily& lily) {
      auto rmask = membership(g.size(), lily.roots);
      auto cov = coverage(g, lily.roots, r);
      VertexSet kept;
      for (Vertex a : lily.centres) {
        VertexSet pad;
        for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&a, 1), r, rmask))
          pad.push_back(w);
        bool ok = true;
        for (auto [w, d] : truncated_bfs(g, pad, r))
          if (cov[w] < c) {
            ok = false;
            break;
          }
        if (ok) kept.push_back(a);
      }
      lily.centres = std::move(kept);
      return true;
    };
  }
  return peel_loop(g, Problem::rcdom, {r, c, 1, 1}, lp,
                   [](std::size_t roots) { return 2 * roots; }, extra, opts);
}

CoreResult constraint_core_total(const Graph& g, int r, const CoreOptions& opts) {
  auto lp = core_lily_params(r, 1, false, opts);
  LilyFilter extra = [&g, r](WaterLily& lily) {
    spread_centres(g, lily, r);
    return true;
  };
  return peel_loop(g, Problem::total, {r, 1, 1, 1}, lp,
                   [](std::size_t roots) { return 3 * roots; }, extra, opts);
}

CoreResult constraint_core_roman(const Graph& g, int r, const CoreOptions& opts) {
  auto lp = core_lily_params(r, 1, false, opts);
  return peel_loop(g, Problem::roman, {r, 1, 1, 1}, lp,
                   [](std::size_t roots) { return 3 * roots; }, {}, opts);
}

CoreResult solution_core_scattered(const Graph& g, int r, int c, const CoreOptions& opts) {
  if (c < 1) throw InputError("core: c must be >= 1");
  auto lp = core_lily_params(r, 1, true, opts);
  const std::size_t cc = static_cast<std::size_t>(c);
  return peel_loop(g, Problem::scatter, {r, c, 1, 1}, lp,
                   [cc](std::size_t roots) { return std::max(2 * roots, cc * roots + 1); }, {},
                   opts);
}

LambdaMuCore reduce_annotated_lambda_mu(const Graph& g, const VertexSet& L, const VertexSet& U,
                                        int r, int lambda, int mu, const VertexSet& dominator,
                                        int adhesion, const CoreOptions& opts) {
  if (lambda < 1 || mu < lambda) throw InputError("lambda/mu core: need 1 <= lambda <= mu");
  if (!is_rc_dominating(g, dominator, r, adhesion))
    throw InputError("lambda/mu core: dominator does not (r,adhesion)-dominate the graph");
  LambdaMuCore res;
  res.constraints = L;
  res.candidates = U;
  auto lp = core_lily_params(r, adhesion, true, opts);
  LilyFinder finder(g, lp, dominator);
  const std::size_t mm = static_cast<std::size_t>(mu);
  auto need = [mm](std::size_t roots) { return (mm + 1) * roots + 1; };
  auto dmask = membership(g.size(), dominator);
  std::vector<int> labels(g.size());
  auto relabel = [&] {
    std::fill(labels.begin(), labels.end(), 0);
    for (Vertex v : res.constraints) labels[v] |= 1;
    for (Vertex v : res.candidates) labels[v] |= 2;
  };

  for (int phase = 1; phase <= 2; ++phase) {
    LilyFilter filter = [&, phase](WaterLily& lily) {
      if (phase == 2) spread_centres(g, lily, 2 * r);
      return lily.centres.size() >= need(lily.roots.size());
    };
    for (;;) {
      relabel();
      VertexSet pool;
      if (phase == 1) {
        for (Vertex v : res.constraints)
          if (!dmask[v]) pool.push_back(v);
      } else {
        auto lmask = membership(g.size(), res.constraints);
        for (Vertex v : res.candidates)
          if (!dmask[v] && !lmask[v]) pool.push_back(v);
      }
      auto lily = finder.find(pool, filter, labels);
      if (!lily) break;
      VertexSet& target = phase == 1 ? res.constraints : res.candidates;
      for (Vertex a : centres_to_peel(*lily, need, opts.batch)) {
        target.erase(std::lower_bound(target.begin(), target.end(), a));
        res.trace.push_back({a, phase, lily->roots.size(), lily->centres.size()});
      }
    }
  }
  return res;
}

VertexSet replay_trace(const VertexSet& start, const std::vector<CoreStep>& trace, int phase) {
  VertexSet s = start;
  for (const auto& step : trace) {
    if (step.phase != phase) continue;
    auto it = std::lower_bound(s.begin(), s.end(), step.removed);
    if (it == s.end() || *it != step.removed)
      throw InputError("trace removes vertex " + std::to_string(step.removed) +
                       " which is not present");
    s.erase(it);
  }
  return s;
}

}  // namespace lilyk
