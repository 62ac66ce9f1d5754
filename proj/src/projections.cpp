#include "lilyk/projections.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lilyk/empirical.hpp"

namespace lilyk {

namespace {

ProjectionProfile profile_in(const Graph& g, std::span<const char> removed,
                             std::span<const char> x_mask, Vertex u, int r) {
  ProjectionProfile p;
  p.radius = r;
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r, removed, x_mask))
    if (d > 0 && x_mask[w]) p.entries.emplace_back(w, d);
  std::sort(p.entries.begin(), p.entries.end());
  return p;
}

void require_outside(std::span<const char> x_mask, Vertex u) {
  if (x_mask[u]) throw InputError("vertex " + std::to_string(u) + " lies in the projection target");
}

void add_path_internals(const std::vector<Vertex>& path, std::vector<char>& keep) {
  for (std::size_t i = 1; i + 1 < path.size(); ++i) keep[path[i]] = 1;
}

VertexSet mask_to_set(const std::vector<char>& m) {
  VertexSet out;
  for (Vertex v = 0; v < m.size(); ++v)
    if (m[v]) out.push_back(v);
  return out;
}

}  // namespace

VertexSet ProjectionProfile::support() const {
  VertexSet out;
  out.reserve(entries.size());
  for (auto [v, d] : entries) out.push_back(v);
  return out;
}

int ProjectionProfile::distance_to(Vertex v) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(v, 0));
  return it != entries.end() && it->first == v ? it->second : kInfinity;
}

std::string ProjectionProfile::encode() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < entries.size(); ++i)
    out << (i ? "," : "") << entries[i].first << ':' << entries[i].second;
  out << '}';
  return out.str();
}

ProjectionProfile profile_masked(const Graph& g, std::span<const char> x_mask, Vertex u, int r) {
  g.check_vertex(u);
  require_outside(x_mask, u);
  return profile_in(g, {}, x_mask, u, r);
}

ProjectionProfile profile(const Graph& g, const VertexSet& x, Vertex u, int r) {
  g.check_vertex(u);
  auto mask = membership(g.size(), x);
  return profile_masked(g, mask, u, r);
}

VertexSet projection(const Graph& g, const VertexSet& x, Vertex u, int r) {
  return profile(g, x, u, r).support();
}

VertexSet shadow(const Graph& g, const VertexSet& x, Vertex u, int r) {
  g.check_vertex(u);
  auto mask = membership(g.size(), x);
  require_outside(mask, u);
  std::vector<char> reach(g.size(), 0);
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r, {}, mask)) reach[w] = 1;
  VertexSet out;
  for (Vertex w : ball(g, u, r))
    if (!reach[w]) out.push_back(w);
  return out;
}

VertexSet sp_union(const Graph& g, const VertexSet& x, Vertex u, int r) {
  return set_union(shadow(g, x, u, r), projection(g, x, u, r));
}

int ProfilePartition::class_of(Vertex v) const {
  return v < class_index.size() ? class_index[v] : -1;
}

ProfilePartition profile_partition(const Graph& g, const VertexSet& x, int r,
                                   const std::optional<VertexSet>& ground) {
  ProfilePartition part;
  part.radius = r;
  part.x = x;
  part.class_index.assign(g.size(), -1);
  auto mask = membership(g.size(), x);
  std::map<std::vector<std::pair<Vertex, int>>, int> index;
  auto visit = [&](Vertex u) {
    if (mask[u]) return;
    auto p = profile_in(g, {}, mask, u, r);
    auto [it, fresh] = index.try_emplace(p.entries, static_cast<int>(part.classes.size()));
    if (fresh) part.classes.push_back({std::move(p), {}});
    part.classes[it->second].members.push_back(u);
    part.class_index[u] = it->second;
  };
  if (ground) {
    for (Vertex u : *ground) {
      g.check_vertex(u);
      visit(u);
    }
  } else {
    for (Vertex u = 0; u < g.size(); ++u) visit(u);
  }
  if (!x.empty())
    record_measurement("projection_bound_ratio",
                       Rational::of(static_cast<std::int64_t>(part.classes.size()),
                                    static_cast<std::int64_t>(x.size())));
  return part;
}

int default_closure_threshold(const Graph& g) { return std::max(1, 4 * degeneracy(g)); }

VertexSet projection_closure(const Graph& g, const VertexSet& x, int r,
                             std::optional<int> threshold) {
  for (Vertex v : x) g.check_vertex(v);
  int tau = threshold ? *threshold : default_closure_threshold(g);
  if (tau < 1) throw InputError("closure threshold must be >= 1");
  auto mask = membership(g.size(), x);
  const std::size_t cap = 10 * g.size();
  std::size_t added = 0;
  for (;;) {
    std::size_t best = 0;
    Vertex best_v = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
      if (mask[u]) continue;
      std::size_t size = 0;
      for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r, {}, mask))
        size += d > 0 && mask[w];
      if (size > best) {
        best = size;
        best_v = u;
      }
    }
    if (best <= static_cast<std::size_t>(tau)) break;
    if (++added > cap) throw ResourceGuardError("closure diverged");
    mask[best_v] = 1;
  }
  auto out = mask_to_set(mask);
  if (!x.empty())
    record_measurement("closure_blowup", Rational::of(static_cast<std::int64_t>(out.size()),
                                                      static_cast<std::int64_t>(x.size())));
  return out;
}

VertexSet path_closure(const Graph& g, const VertexSet& x, int r) {
  for (Vertex v : x) g.check_vertex(v);
  auto keep = membership(g.size(), x);
  std::vector<char> outside(g.size());
  std::vector<int> dist_g(g.size()), dist_k(g.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vertex u = x[i];
    std::fill(dist_g.begin(), dist_g.end(), kInfinity);
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r)) dist_g[w] = d;
    bool stale = true;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Vertex v = x[j];
      if (dist_g[v] == kInfinity) continue;
      if (stale) {
        for (Vertex w = 0; w < g.size(); ++w) outside[w] = !keep[w];
        std::fill(dist_k.begin(), dist_k.end(), kInfinity);
        for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r, outside))
          dist_k[w] = d;
        stale = false;
      }
      if (dist_k[v] == dist_g[v]) continue;
      add_path_internals(least_shortest_path(g, u, v, r), keep);
      stale = true;
    }
  }
  return mask_to_set(keep);
}

ProjectionKernel projection_kernel(const Graph& g, const VertexSet& x, int r, int c,
                                   std::optional<int> threshold) {
  if (c < 1) throw InputError("projection_kernel: c must be >= 1");
  if (r < 1) throw InputError("projection_kernel: r must be >= 1");
  for (Vertex v : x) g.check_vertex(v);
  const std::size_t n = g.size();

  VertexSet x1 = projection_closure(g, x, r, threshold);
  VertexSet x2 = path_closure(g, x1, r);
  auto x1_mask = membership(n, x1);

  std::vector<char> keep = membership(n, x2);
  VertexSet reps;
  for (const auto& cls : profile_partition(g, x1, r).classes) {
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(c), cls.members.size());
    for (std::size_t i = 0; i < take; ++i) reps.push_back(cls.members[i]);
  }
  for (Vertex u : reps) keep[u] = 1;

  auto connect_projection = [&](Vertex u, std::span<const char> target) {
    for (auto [w, d] : profile_in(g, {}, target, u, r).entries)
      add_path_internals(least_shortest_path(g, u, w, r, target), keep);
  };
  for (Vertex u : set_union(x2, make_set(reps)))
    if (!x1_mask[u]) connect_projection(u, x1_mask);

  // Repair: every class of V \ x needs min(c, p) members whose profile onto x
  // is the same in the kernel as in g. A member kept together with its
  // shortest x-avoiding paths has that property, and later additions cannot
  // break it (distances in g[kept] stay sandwiched between old and g values).
  auto x_mask = membership(n, x);
  ProjectionKernel res;
  std::vector<char> dropped(n);
  for (const auto& cls : profile_partition(g, x, r).classes) {
    std::size_t need = std::min<std::size_t>(static_cast<std::size_t>(c), cls.members.size());
    for (Vertex w = 0; w < n; ++w) dropped[w] = !keep[w];
    std::size_t stable = 0;
    for (Vertex m : cls.members)
      if (keep[m] && profile_in(g, dropped, x_mask, m, r) == cls.profile) ++stable;
    for (Vertex m : cls.members) {
      if (stable >= need) break;
      if (keep[m]) {
        for (Vertex w = 0; w < n; ++w) dropped[w] = !keep[w];
        if (profile_in(g, dropped, x_mask, m, r) == cls.profile) continue;
      } else {
        keep[m] = 1;
        ++res.repaired;
      }
      connect_projection(m, x_mask);
      ++stable;
    }
  }

  res.kept = mask_to_set(keep);
  res.sub = induced_subgraph(g, res.kept);
  auto check = verify_projection_kernel(g, x, res.kept, r, c);
  if (!check.ok()) throw InternalError("projection_kernel self-check failed: " + check.detail);
  if (!x.empty())
    record_measurement("kernel_blowup", Rational::of(static_cast<std::int64_t>(res.kept.size()),
                                                     static_cast<std::int64_t>(x.size())));
  return res;
}

ProjectionKernelCheck verify_projection_kernel(const Graph& g, const VertexSet& x,
                                               const VertexSet& kept, int r, int c) {
  ProjectionKernelCheck out;
  const std::size_t n = g.size();
  if (!is_subset(x, kept)) {
    out.distances_preserved = false;
    out.detail = "x is not contained in the kernel";
    return out;
  }
  auto x_mask = membership(n, x);
  auto keep = membership(n, kept);
  std::vector<char> dropped(n);
  for (Vertex w = 0; w < n; ++w) dropped[w] = !keep[w];

  std::vector<int> dg(n), dk(n);
  for (Vertex v : x) {
    std::fill(dg.begin(), dg.end(), kInfinity);
    std::fill(dk.begin(), dk.end(), kInfinity);
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), r)) dg[w] = d;
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), r, dropped)) dk[w] = d;
    for (Vertex w : x) {
      if (dg[w] != dk[w]) {
        out.distances_preserved = false;
        out.detail = "distance " + std::to_string(v) + "-" + std::to_string(w) + " changed";
        return out;
      }
    }
  }

  std::map<std::vector<std::pair<Vertex, int>>, std::size_t> in_kernel;
  for (Vertex u : kept)
    if (!x_mask[u]) ++in_kernel[profile_in(g, dropped, x_mask, u, r).entries];
  for (const auto& cls : profile_partition(g, x, r).classes) {
    std::size_t need = std::min<std::size_t>(static_cast<std::size_t>(c), cls.members.size());
    auto it = in_kernel.find(cls.profile.entries);
    std::size_t have = it == in_kernel.end() ? 0 : it->second;
    if (have < need) {
      out.profiles_realized = false;
      out.detail = "profile " + cls.profile.encode() + " realised " + std::to_string(have) +
                   " < " + std::to_string(need) + " times";
      return out;
    }
  }
  return out;
}

}  // namespace lilyk
