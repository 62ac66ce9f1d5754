#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lilyk/generators.hpp"
#include "lilyk/projections.hpp"

using namespace lilyk;

namespace {

using Entries = std::vector<std::pair<Vertex, int>>;

// Shortest x-avoiding path lengths by brute force: BFS in the graph where
// x-vertices have no outgoing edges.
Entries brute_profile(const Graph& g, const VertexSet& x, Vertex u, int r) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> queue{u};
  dist[u] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    if (v != u && set_contains(x, v)) continue;
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  Entries out;
  for (Vertex v : x)
    if (dist[v] > 0 && dist[v] <= r) out.emplace_back(v, dist[v]);
  return out;
}

}  // namespace

TEST_CASE("profile") {
  CHECK(profile(fx::path(3), fx::set({2}), 0, 2).entries == Entries{{2, 2}});
  CHECK(profile(fx::path(4), fx::set({1}), 3, 3).entries == Entries{{1, 2}});
  CHECK(profile(fx::path(5), fx::set({4}), 0, 2).entries.empty());
  CHECK_THROWS_AS(profile(fx::path(3), fx::set({1}), 1, 2), InputError);
  auto g = random_degenerate(14, 3, 21);
  VertexSet x = fx::set({0, 4, 5, 9, 13});
  for (Vertex u = 0; u < g.size(); ++u)
    if (!set_contains(x, u))
      for (int r = 1; r <= 3; ++r) CHECK(profile(g, x, u, r).entries == brute_profile(g, x, u, r));
}

TEST_CASE("projection") {
  auto g = random_degenerate(12, 3, 8);
  VertexSet x = fx::set({1, 2, 6, 7});
  for (Vertex u = 0; u < g.size(); ++u) {
    if (set_contains(x, u)) continue;
    VertexSet nb(g.neighbors(u).begin(), g.neighbors(u).end());
    CHECK(projection(g, x, u, 1) == set_intersection(nb, x));
    CHECK(projection(g, x, u, 2) == profile(g, x, u, 2).support());
  }
  CHECK(projection(star(5), fx::set({0}), 3, 2) == fx::set({0}));
  CHECK(projection(cycle(4), fx::set({1, 3}), 0, 2) == fx::set({1, 3}));
}

TEST_CASE("shadow") {
  CHECK(shadow(cycle(4), fx::set({1, 3}), 0, 2) == fx::set({2}));
  CHECK(shadow(fx::path(3), fx::set({1}), 0, 2) == fx::set({2}));
  auto g = random_degenerate(13, 2, 4);
  for (Vertex u = 1; u < g.size(); ++u) {
    CHECK(shadow(g, {}, u, 2).empty());
    VertexSet x = fx::set({0, 5, 8});
    if (set_contains(x, u)) continue;
    auto sh = shadow(g, x, u, 2);
    auto pr = projection(g, x, u, 2);
    CHECK(set_intersection(sh, pr).empty());
    CHECK(is_subset(set_union(sh, pr), ball(g, u, 2)));
    CHECK(sp_union(g, x, u, 2) == set_union(sh, pr));
  }
}

TEST_CASE("profile_partition") {
  auto p5 = fx::path(5);
  CHECK(profile_partition(p5, all_vertices(p5), 1).classes.empty());
  auto st = profile_partition(star(4), fx::set({0}), 1);
  REQUIRE(st.classes.size() == 1);
  CHECK(st.classes[0].members == fx::set({1, 2, 3, 4}));
  auto pp = profile_partition(p5, fx::set({2}), 1);
  REQUIRE(pp.classes.size() == 2);
  CHECK(pp.classes[0].members == fx::set({0, 4}));
  CHECK(pp.classes[0].profile.entries.empty());
  CHECK(pp.classes[1].members == fx::set({1, 3}));
}

TEST_CASE("projection_closure") {
  auto g = grid(4, 4);
  VertexSet x = fx::set({0, 5, 10});
  CHECK(projection_closure(g, x, 1, 4) == x);
  CHECK(projection_closure(g, all_vertices(g), 2, 1) == all_vertices(g));
  // K5 from {0} with threshold 1: vertex 1 sees {0} (size 1, stop immediately).
  CHECK(projection_closure(fx::complete(5), fx::set({0}), 1, 1) == fx::set({0}));
  // With {0,1} every outside vertex sees both; the loop adds 2, then 3, then 4.
  CHECK(projection_closure(fx::complete(5), fx::set({0, 1}), 1, 1) == fx::set({0, 1, 2, 3, 4}));
  auto h = random_degenerate(14, 3, 2);
  auto once = projection_closure(h, fx::set({0, 7}), 2, 2);
  CHECK(is_subset(fx::set({0, 7}), once));
  CHECK(projection_closure(h, once, 2, 2) == once);
  for (Vertex u = 0; u < h.size(); ++u)
    if (!set_contains(once, u)) CHECK(projection(h, once, u, 2).size() <= 2);
}

TEST_CASE("path_closure") {
  auto k4 = fx::complete(4);
  CHECK(path_closure(k4, fx::set({0, 2}), 3) == fx::set({0, 2}));
  CHECK(path_closure(fx::path(3), fx::set({0, 2}), 2) == fx::set({0, 1, 2}));
  CHECK(path_closure(cycle(6), fx::set({0, 3}), 3) == fx::set({0, 1, 2, 3}));
  auto g = random_degenerate(14, 2, 17);
  VertexSet x = fx::set({0, 3, 9, 12});
  auto xc = path_closure(g, x, 3);
  auto sub = induced_subgraph(g, xc);
  for (Vertex u : x)
    for (Vertex v : x) {
      int d = bounded_distance(g, u, v, 3);
      if (d != kInfinity)
        CHECK(bounded_distance(sub.graph, sub.from_parent[u], sub.from_parent[v], 3) == d);
    }
}

TEST_CASE("projection_kernel") {
  auto g = grid(3, 3);
  auto full = projection_kernel(g, all_vertices(g), 2, 1);
  CHECK(full.kept == all_vertices(g));
  auto st = projection_kernel(star(6), fx::set({0}), 1, 2);
  CHECK(st.kept == fx::set({0, 1, 2}));
  CHECK(verify_projection_kernel(star(6), fx::set({0}), st.kept, 1, 2).ok());
  // Dropping a representative breaks property 2.
  auto bad = verify_projection_kernel(star(6), fx::set({0}), fx::set({0, 1}), 1, 2);
  CHECK_FALSE(bad.profiles_realized);
  // Dropping the middle of a path breaks property 1.
  auto p = fx::path(3);
  CHECK_FALSE(verify_projection_kernel(p, fx::set({0, 2}), fx::set({0, 2}), 2, 1)
                  .distances_preserved);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_degenerate(12, 1 + trial % 3, rng());
    VertexSet x;
    for (Vertex v = 0; v < h.size(); ++v)
      if (rng() % 3 == 0) x.push_back(v);
    int r = 1 + trial % 3, c = 1 + trial % 2;
    auto kern = projection_kernel(h, x, r, c);
    CHECK(is_subset(x, kern.kept));
    CHECK(verify_projection_kernel(h, x, kern.kept, r, c).ok());
  }
}
