#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lilyk/generators.hpp"
#include "lilyk/wideness.hpp"

using namespace lilyk;

TEST_CASE("uqw") {
  auto st = star(9);
  VertexSet leaves = fx::set({1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto res = uqw(st, leaves, 2, 9);
  REQUIRE(res);
  CHECK(res->separator == fx::set({0}));
  CHECK(res->scattered == leaves);

  auto g = spider_forest(4, 2, 3);
  VertexSet centres = fx::set({0, 7, 14, 21});
  auto far = uqw(g, centres, 2, 4);
  REQUIRE(far);
  CHECK(far->separator.empty());

  auto k6 = fx::complete(6);
  CHECK_FALSE(uqw(k6, all_vertices(k6), 1, 3, UqwOptions{4}));
}

TEST_CASE("uqw output invariants") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto g = random_degenerate(30, 2, rng());
    VertexSet x;
    for (Vertex v = 0; v < g.size(); ++v)
      if (rng() % 2) x.push_back(v);
    auto res = uqw(g, x, 2, 4);
    if (!res) continue;
    CHECK(res->scattered.size() >= 4);
    CHECK(is_subset(res->scattered, x));
    CHECK(set_intersection(res->separator, res->scattered).empty());
    auto rest = induced_subgraph(g, set_difference(all_vertices(g), res->separator));
    for (Vertex a : res->scattered)
      for (Vertex b : res->scattered)
        if (a < b)
          CHECK(bounded_distance(rest.graph, rest.from_parent[a], rest.from_parent[b], 2) ==
                kInfinity);
  }
}

TEST_CASE("find_uniform_lily on stars and spiders") {
  auto st = star(5);
  auto lily = find_uniform_lily(st, fx::set({1, 2, 3, 4, 5}), 1, 1, 1, 3);
  REQUIRE(lily);
  CHECK(lily->roots == fx::set({0}));
  CHECK(lily->centres.size() >= 3);
  CHECK(verify_lily(st, *lily).ok());

  CHECK_FALSE(find_uniform_lily(st, {}, 1, 1, 1, 1));

  auto sp = spider_forest(1, 8, 2);
  VertexSet tips;
  for (Vertex v = 2; v < sp.size(); v += 2) tips.push_back(v);
  auto sl = find_uniform_lily(sp, tips, 2, 2, 1, 2);
  REQUIRE(sl);
  CHECK(verify_lily(sp, *sl).ok());
  CHECK(sl->centres.size() >= 2 * sl->roots.size());
}

TEST_CASE("verify_lily detects broken lilies") {
  auto st = star(5);
  WaterLily good;
  good.roots = fx::set({0});
  good.centres = fx::set({1, 2, 3});
  good.depth = 1;
  good.radius = 1;
  good.shared_profile = profile(st, good.roots, 1, 1);
  CHECK(verify_lily(st, good).ok());

  // Root moved into the pads: centres now share a neighbour in g - R.
  WaterLily moved = good;
  moved.roots = fx::set({4});
  auto rep = verify_lily(st, moved);
  CHECK_FALSE(rep.ok());

  WaterLily empty = good;
  empty.centres.clear();
  auto er = verify_lily(st, empty);
  CHECK(er.ok());
  CHECK_FALSE(er.warnings.empty());

  WaterLily overlap = good;
  overlap.centres = fx::set({0, 1});
  CHECK_FALSE(verify_lily(st, overlap).ok());
}

TEST_CASE("pad_signature") {
  auto sp = spider_forest(1, 3, 2);
  VertexSet roots = fx::set({0});
  CHECK(pad_signature(sp, roots, 2, 1, 2, {}) == pad_signature(sp, roots, 2, 1, 4, {}));
  Graph iso(3);
  CHECK(pad_signature(iso, {}, 2, 1, 0, {}) == pad_signature(iso, {}, 2, 1, 1, {}));
  std::vector<int> labels{1, 0, 0};
  CHECK(pad_signature(iso, {}, 2, 1, 0, labels) != pad_signature(iso, {}, 2, 1, 1, labels));
}

TEST_CASE("sigma-uniform lily keeps one signature class") {
  // Star with 12 leaves, 7 labelled 1 and 5 labelled 0.
  auto st = star(12);
  std::vector<int> labels(13, 0);
  for (int i = 1; i <= 7; ++i) labels[i] = 1;
  VertexSet leaves;
  for (Vertex v = 1; v <= 12; ++v) leaves.push_back(v);
  auto lily = find_sigma_uniform_lily(st, leaves, 1, 1, 1, 2, labels);
  REQUIRE(lily);
  REQUIRE(lily->signature);
  CHECK(lily->centres == fx::set({1, 2, 3, 4, 5, 6, 7}));
  CHECK(verify_lily(st, *lily, labels).ok());
}

TEST_CASE("lily finder respects a filter") {
  auto st = star(8);
  LilyParams p;
  p.depth = 1;
  p.radius = 2;
  p.min_centres = 2;
  LilyFinder finder(st, p);
  CHECK(finder.feasible());
  auto all = finder.find(all_vertices(st));
  REQUIRE(all);
  auto none = finder.find(all_vertices(st), [](WaterLily&) { return false; });
  CHECK_FALSE(none);
  auto trimmed = finder.find(all_vertices(st), [](WaterLily& l) {
    l.centres.resize(2);
    return true;
  });
  REQUIRE(trimmed);
  CHECK(trimmed->centres.size() == 2);
}
