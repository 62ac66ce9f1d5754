#include "lilyk/domination.hpp"

#include <algorithm>

#include "lilyk/projections.hpp"

namespace lilyk {

std::vector<int> coverage(const Graph& g, const VertexSet& d, int r) {
  std::vector<int> cov(g.size(), 0);
  for (Vertex v : d)
    for (auto [w, dist] : truncated_bfs(g, std::span<const Vertex>(&v, 1), r)) ++cov[w];
  return cov;
}

bool is_rc_dominating(const Graph& g, const VertexSet& d, int r, int c,
                      const std::optional<VertexSet>& targets) {
  auto cov = coverage(g, d, r);
  if (targets) {
    for (Vertex v : *targets)
      if (cov[v] < c) return false;
    return true;
  }
  return std::all_of(cov.begin(), cov.end(), [c](int x) { return x >= c; });
}

std::size_t min_ball_size(const Graph& g, int r) {
  std::size_t best = g.size();
  for (Vertex v = 0; v < g.size(); ++v)
    best = std::min(best, truncated_bfs(g, std::span<const Vertex>(&v, 1), r).size());
  return best;
}

CertifiedDominator approx_dominating(const Graph& g, const VertexSet& x, int r,
                                     std::span<const char> removed) {
  if (r < 0) throw InputError("approx_dominating: negative radius");
  CertifiedDominator res;
  res.target = x;
  res.radius = r;
  std::vector<char> dominated(g.size(), 0), in_a(g.size(), 0);
  auto mark = [&](Vertex v) {
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), r, removed))
      dominated[w] = 1;
  };
  for (Vertex v : x) {
    g.check_vertex(v);
    if (!removed.empty() && removed[v])
      throw InputError("approx_dominating: target vertex " + std::to_string(v) + " is removed");
    if (dominated[v]) continue;
    // Nearest witness within 2r; ties go to the smallest id.
    int best_d = kInfinity;
    Vertex best_a = 0;
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), 2 * r, removed)) {
      if (!in_a[w]) continue;
      if (d < best_d || (d == best_d && w < best_a)) {
        best_d = d;
        best_a = w;
      }
    }
    Vertex dom = v;
    if (best_d == kInfinity) {
      in_a[v] = 1;
      res.witnesses.push_back(v);
    } else {
      auto path = least_shortest_path(g, v, best_a, 2 * r, removed);
      if (path.empty()) throw InternalError("approx_dominating: lost path to witness");
      dom = path[static_cast<std::size_t>(std::min(r, best_d))];
    }
    res.dominators.push_back(dom);
    mark(dom);
  }
  res.dominators = make_set(std::move(res.dominators));
  res.witnesses = make_set(std::move(res.witnesses));
  res.certified_ratio = Rational::of(static_cast<std::int64_t>(res.dominators.size()),
                                     static_cast<std::int64_t>(res.witnesses.size()));
  if (!res.witnesses.empty()) record_measurement("dvorak_ratio", res.certified_ratio);
  return res;
}

RcDominationResult approx_rc_dominating(const Graph& g, int r, int c) {
  if (r < 1 || c < 1) throw InputError("approx_rc_dominating: r and c must be >= 1");
  RcDominationResult res;
  if (min_ball_size(g, r) < static_cast<std::size_t>(c)) return res;
  const std::size_t n = g.size();

  VertexSet d = approx_dominating(g, all_vertices(g), r).dominators;
  if (!is_rc_dominating(g, d, r, 1)) throw InternalError("stage 1 is not r-dominating");
  res.stage_sizes.push_back(d.size());

  for (int i = 1; i < c; ++i) {
    auto in_d = membership(n, d);
    std::vector<char> in_u(n, 0);
    for (const auto& cls : profile_partition(g, d, r).classes) {
      for (Vertex s : shadow(g, d, cls.members.front(), r)) {
        if (!in_d[s]) {
          in_u[s] = 1;
          break;
        }
      }
    }
    VertexSet u_set;
    for (Vertex v = 0; v < n; ++v)
      if (in_u[v]) u_set.push_back(v);
    auto cov = coverage(g, set_union(d, u_set), r);
    for (Vertex u : d) {
      if (cov[u] >= i + 1) continue;
      std::optional<Vertex> pick;
      for (Vertex w : ball(g, u, r)) {
        if (!in_d[w] && !in_u[w]) {
          pick = w;
          break;
        }
      }
      if (!pick) return RcDominationResult{};
      in_u[*pick] = 1;
      for (auto [w, dist] : truncated_bfs(g, std::span<const Vertex>(&*pick, 1), r)) ++cov[w];
    }

    std::vector<char> removed(n, 0);
    VertexSet deficient;
    for (Vertex v = 0; v < n; ++v) {
      removed[v] = in_d[v] || in_u[v];
      if (cov[v] < i + 1) deficient.push_back(v);
    }
    auto patch = approx_dominating(g, deficient, r, removed);

    VertexSet next = d;
    for (Vertex v = 0; v < n; ++v)
      if (in_u[v]) next.push_back(v);
    next.insert(next.end(), patch.dominators.begin(), patch.dominators.end());
    d = make_set(std::move(next));
    if (!is_rc_dominating(g, d, r, i + 1))
      throw InternalError("stage " + std::to_string(i + 1) + " is not (r," +
                          std::to_string(i + 1) + ")-dominating");
    res.stage_sizes.push_back(d.size());
  }
  res.feasible = true;
  res.dominators = std::move(d);
  return res;
}

}  // namespace lilyk
