#include <doctest.h>

#include "fixtures.hpp"
#include "lilyk/cores.hpp"
#include "lilyk/domination.hpp"
#include "lilyk/generators.hpp"
#include "lilyk/harness.hpp"
#include "lilyk/oracle.hpp"

using namespace lilyk;

namespace {

Graph star_forest(int count, int leaves) { return spider_forest(count, leaves, 1); }

}  // namespace

TEST_CASE("constraint_core_rc_dom") {
  Graph k1(1);
  CHECK(constraint_core_rc_dom(k1, 1, 1).core == fx::set({0}));

  auto st = star(9);
  auto res = constraint_core_rc_dom(st, 1, 1);
  CHECK(res.core.size() < st.size());
  CHECK(res.rounds == st.size() - res.core.size());
  CHECK(replay_trace(all_vertices(st), res.trace) == res.core);
  CHECK(verify_peel_safety(st, Problem::rcdom, {1, 1, 1, 1}).ok());

  auto forest = star_forest(6, 5);
  auto fr = constraint_core_rc_dom(forest, 1, 1);
  CHECK(fr.core.size() < forest.size());
  // Every star keeps at least one leaf.
  for (int s = 0; s < 6; ++s) {
    bool leaf = false;
    for (Vertex v = s * 6 + 1; v < static_cast<Vertex>(s * 6 + 6); ++v)
      leaf |= set_contains(fr.core, v);
    CHECK(leaf);
  }
  CHECK(opt_rc_dom(forest, 1, 1, fr.core, OracleOptions{40}).optimum ==
        opt_rc_dom(forest, 1, 1, std::nullopt, OracleOptions{40}).optimum);

  CHECK_THROWS_AS(constraint_core_rc_dom(cycle(5), 1, 4), InfeasibleError);
}

TEST_CASE("constraint cores for total and roman domination") {
  auto p3 = fx::path(3);
  CHECK(constraint_core_total(p3, 1).core == all_vertices(p3));
  CHECK(constraint_core_roman(p3, 1).core == all_vertices(p3));

  auto forest = star_forest(3, 6);
  HarnessOptions opts;
  opts.oracle.size_guard = 24;
  CHECK(verify_peel_safety(forest, Problem::total, {1, 1, 1, 1}, opts).ok());
  CHECK(verify_peel_safety(forest, Problem::roman, {1, 1, 1, 1}, opts).ok());
  CHECK(constraint_core_total(forest, 1).core.size() < forest.size());
  CHECK(constraint_core_roman(forest, 1).core.size() < forest.size());

  Graph iso = star(6);
  iso.add_vertex();
  CHECK_FALSE(opt_total(iso, 1).feasible);
  auto core = constraint_core_total(iso, 1);
  CHECK_FALSE(opt_total(iso, 1, core.core).feasible);
}

TEST_CASE("solution_core_scattered") {
  auto c4 = cycle(4);
  CHECK(solution_core_scattered(c4, 1, 1).core == all_vertices(c4));
  auto forest = star_forest(3, 5);
  HarnessOptions opts;
  opts.oracle.size_guard = 24;
  auto res = solution_core_scattered(forest, 1, 1);
  CHECK(res.core.size() < forest.size());
  CHECK(verify_peel_safety(forest, Problem::scatter, {1, 1, 1, 1}, opts).ok());
  auto big = solution_core_scattered(forest, 1, static_cast<int>(forest.size()));
  CHECK(max_scattered(forest, 1, 18, big.core, OracleOptions{24}).optimum == 18);
}

TEST_CASE("reduce_annotated_lambda_mu") {
  auto c5 = cycle(5);
  auto all = all_vertices(c5);
  auto dom = approx_rc_dominating(c5, 1, 1);
  auto res = reduce_annotated_lambda_mu(c5, all, all, 1, 1, 1, dom.dominators, 1);
  CHECK(res.constraints == all);
  CHECK(res.candidates == all);

  auto forest = star_forest(8, 4);
  auto fd = approx_rc_dominating(forest, 1, 2);
  REQUIRE(fd.feasible);
  auto fall = all_vertices(forest);
  auto fr = reduce_annotated_lambda_mu(forest, fall, fall, 1, 1, 2, fd.dominators, 2);
  CHECK(is_subset(fr.constraints, fall));
  CHECK(is_subset(fr.constraints, fr.candidates));
  OracleOptions big{40};
  CHECK(opt_lambda_mu(forest, 1, 1, 2, fr.constraints, fr.candidates, big).optimum ==
        opt_lambda_mu(forest, 1, 1, 2, fall, fall, big).optimum);

  auto empty = reduce_annotated_lambda_mu(forest, {}, fall, 1, 1, 2, fd.dominators, 2);
  CHECK(empty.constraints.empty());
  for (const auto& step : empty.trace) CHECK(step.phase == 2);

  CHECK_THROWS_AS(reduce_annotated_lambda_mu(forest, fall, fall, 1, 1, 2, {}, 2), InputError);
}

TEST_CASE("peel safety on small random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = random_degenerate(12, 1 + seed % 2, seed + 300);
    for (Problem p : {Problem::rcdom, Problem::total, Problem::roman, Problem::scatter,
                      Problem::lambdamu}) {
      ProblemParams params{1 + static_cast<int>(seed % 2), 1, 1, 2};
      auto rep = verify_peel_safety(g, p, params);
      CHECK_MESSAGE(rep.ok(), problem_name(p) << " seed " << seed << "\n" << rep.detail);
    }
  }
}

TEST_CASE("replay_trace") {
  std::vector<CoreStep> trace{{2, 1, 1, 2}, {5, 2, 1, 3}, {3, 1, 1, 2}};
  CHECK(replay_trace(fx::set({1, 2, 3, 5}), trace, 1) == fx::set({1, 5}));
  CHECK(replay_trace(fx::set({1, 2, 3, 5}), trace, 2) == fx::set({1, 2, 3}));
  CHECK_THROWS_AS(replay_trace(fx::set({1}), trace, 1), InputError);
}
