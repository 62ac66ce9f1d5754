#include "lilyk/wideness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lilyk/domination.hpp"
#include "lilyk/empirical.hpp"

namespace lilyk {

namespace {

LilyCheck named_check(std::string name) {
  LilyCheck c;
  c.name = std::move(name);
  return c;
}

ProjectionProfile depth_profile(const Graph& g, std::span<const char> roots_mask, Vertex u,
                                int depth) {
  ProjectionProfile p;
  p.radius = depth;
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), depth, {}, roots_mask))
    if (d > 0 && roots_mask[w]) p.entries.emplace_back(w, d);
  std::sort(p.entries.begin(), p.entries.end());
  return p;
}

// Greedy subset of x \ removed, pairwise at distance > sep in g - removed.
VertexSet separated_subset(const Graph& g, const VertexSet& x, int sep,
                           const std::vector<char>& removed) {
  std::vector<char> blocked(g.size(), 0);
  VertexSet out;
  for (Vertex v : x) {
    if (removed[v] || blocked[v]) continue;
    out.push_back(v);
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), sep, removed))
      blocked[w] = 1;
  }
  return out;
}

template <class Key>
std::vector<VertexSet> group_by(const VertexSet& items, const std::vector<Key>& keys) {
  std::map<Key, std::size_t> index;
  std::vector<VertexSet> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, fresh] = index.try_emplace(keys[i], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(items[i]);
  }
  // Largest first; ties by smallest member (groups are built in id order).
  std::stable_sort(groups.begin(), groups.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return groups;
}

}  // namespace

// ---- uqw -------------------------------------------------------------------

std::optional<UqwResult> uqw(const Graph& g, const VertexSet& x, int separation,
                             std::size_t target, const UqwOptions& opts) {
  if (target < 1) throw InputError("uqw: target must be >= 1");
  if (separation < 0) throw InputError("uqw: negative separation");
  for (Vertex v : x) g.check_vertex(v);
  const std::size_t n = g.size();
  auto in_x = membership(n, x);
  std::vector<char> removed(n, 0);
  VertexSet sep_set;
  const int reach = (separation + 1) / 2;
  std::vector<int> score(n);
  std::vector<long> dist_sum(n);
  for (;;) {
    auto scattered = separated_subset(g, x, separation, removed);
    if (scattered.size() >= target) return UqwResult{make_set(sep_set), std::move(scattered)};
    if (sep_set.size() >= opts.max_separator) return std::nullopt;
    std::fill(score.begin(), score.end(), 0);
    std::fill(dist_sum.begin(), dist_sum.end(), 0);
    for (Vertex w : x) {
      if (removed[w]) continue;
      for (auto [v, d] : truncated_bfs(g, std::span<const Vertex>(&w, 1), reach, removed))
        if (!in_x[v]) {
          ++score[v];
          dist_sum[v] += d;
        }
    }
    // Most x-vertices nearby; among those the most central one.
    int best = 0;
    Vertex best_v = 0;
    for (Vertex v = 0; v < n; ++v)
      if (score[v] > best || (score[v] == best && best > 0 && dist_sum[v] < dist_sum[best_v])) {
        best = score[v];
        best_v = v;
      }
    if (best == 0) return std::nullopt;
    removed[best_v] = 1;
    sep_set.push_back(best_v);
  }
}

// ---- signatures and verification ------------------------------------------

std::string pad_signature(const Graph& g, const VertexSet& roots, int radius, int depth,
                          Vertex centre, std::span<const int> labels) {
  g.check_vertex(centre);
  auto rmask = membership(g.size(), roots);
  std::vector<std::set<std::string>> levels(static_cast<std::size_t>(radius) + 1);
  for (auto [x, i] : truncated_bfs(g, std::span<const Vertex>(&centre, 1), radius, rmask)) {
    int label = labels.empty() ? 0 : labels[x];
    levels[static_cast<std::size_t>(i)].insert(depth_profile(g, rmask, x, depth).encode() + "#" +
                                               std::to_string(label));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << (i ? "|" : "") << i << ':';
    bool first = true;
    for (const auto& s : levels[i]) {
      out << (first ? "" : ";") << s;
      first = false;
    }
  }
  return out.str();
}

bool LilyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LilyCheck& c) { return c.passed; });
}

std::string LilyReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (c.counterexample) out << " at " << *c.counterexample;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  for (const auto& w : warnings) out << "warning " << w << '\n';
  return out.str();
}

LilyReport verify_lily(const Graph& g, const WaterLily& lily, std::span<const int> labels) {
  LilyReport rep;
  const std::size_t n = g.size();
  for (Vertex v : lily.roots) g.check_vertex(v);
  for (Vertex v : lily.centres) g.check_vertex(v);
  auto rmask = membership(n, lily.roots);

  auto disjoint = named_check("disjoint");
  for (Vertex c : lily.centres)
    if (rmask[c]) {
      disjoint.passed = false;
      disjoint.counterexample = c;
      disjoint.detail = "centre is a root";
      break;
    }
  rep.checks.push_back(disjoint);

  auto depth = named_check("depth");
  if (lily.depth > lily.radius || lily.depth < 0) {
    depth.passed = false;
    depth.detail = "depth " + std::to_string(lily.depth) + " > radius " +
                   std::to_string(lily.radius);
  }
  rep.checks.push_back(depth);

  if (lily.centres.empty()) rep.warnings.push_back("no centres; invariants hold vacuously");

  auto scattered = named_check("scattered");
  auto cmask = membership(n, lily.centres);
  for (Vertex c : lily.centres) {
    if (rmask[c]) continue;
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&c, 1), 2 * lily.radius, rmask))
      if (w != c && cmask[w]) {
        scattered.passed = false;
        scattered.counterexample = w;
        scattered.detail = "centres " + std::to_string(c) + " and " + std::to_string(w) +
                           " at distance " + std::to_string(d);
        break;
      }
    if (!scattered.passed) break;
  }
  rep.checks.push_back(scattered);

  auto dominated = named_check("dominated");
  auto cov = coverage(g, lily.roots, lily.depth);
  VertexSet live_centres;
  for (Vertex c : lily.centres)
    if (!rmask[c]) live_centres.push_back(c);
  for (auto [w, d] : truncated_bfs(g, live_centres, lily.radius, rmask))
    if (cov[w] < lily.adhesion) {
      dominated.passed = false;
      dominated.counterexample = w;
      dominated.detail = "pad vertex sees " + std::to_string(cov[w]) + " roots";
      break;
    }
  rep.checks.push_back(dominated);

  auto uniform = named_check("uniform");
  for (Vertex c : live_centres) {
    auto p = depth_profile(g, rmask, c, lily.depth);
    if (!(p.entries == lily.shared_profile.entries)) {
      uniform.passed = false;
      uniform.counterexample = c;
      uniform.detail = "profile " + p.encode() + " != " + lily.shared_profile.encode();
      break;
    }
  }
  rep.checks.push_back(uniform);

  if (lily.signature) {
    auto sig = named_check("signature");
    for (Vertex c : live_centres)
      if (pad_signature(g, lily.roots, lily.radius, lily.depth, c, labels) != *lily.signature) {
        sig.passed = false;
        sig.counterexample = c;
        break;
      }
    rep.checks.push_back(sig);
  }
  return rep;
}

// ---- finder ----------------------------------------------------------------

struct LilyFinder::Impl {
  const Graph& g;
  LilyParams p;
  bool feasible = false;
  VertexSet dprime;
  VertexSet closure;
  std::vector<char> dprime_mask, closure_mask;
  std::vector<std::optional<std::vector<std::pair<Vertex, int>>>> far_profile;

  Impl(const Graph& graph, LilyParams params, std::optional<VertexSet> dominator)
      : g(graph), p(params) {
    if (p.depth < 0 || p.depth > p.radius) throw InputError("lily: need 0 <= depth <= radius");
    if (p.adhesion < 1) throw InputError("lily: adhesion must be >= 1");
    if (p.min_centres < 1) throw InputError("lily: min_centres must be >= 1");
    if (dominator) {
      for (Vertex v : *dominator) g.check_vertex(v);
      dprime = make_set(*dominator);
      feasible = true;
    } else if (p.depth == 0) {
      // Depth 0 needs every vertex to be a root of itself: only adhesion 1 works.
      feasible = p.adhesion == 1;
      if (feasible) dprime = all_vertices(g);
    } else {
      auto dom = approx_rc_dominating(g, p.depth, p.adhesion);
      feasible = dom.feasible;
      dprime = std::move(dom.dominators);
    }
    if (!feasible) return;
    closure = projection_closure(g, dprime, p.radius + p.depth);
    dprime_mask = membership(g.size(), dprime);
    closure_mask = membership(g.size(), closure);
    far_profile.resize(g.size());
  }

  const std::vector<std::pair<Vertex, int>>& far(Vertex u) {
    if (!far_profile[u]) far_profile[u] = profile_in_closure(u);
    return *far_profile[u];
  }

  std::vector<std::pair<Vertex, int>> profile_in_closure(Vertex u) {
    return depth_profile(g, closure_mask, u, p.radius + p.depth).entries;
  }

  // Adds roots until every pad vertex sees `adhesion` roots within depth.
  std::optional<VertexSet> augment(const VertexSet& base_roots, const VertexSet& centres) {
    const std::size_t n = g.size();
    auto base_mask = membership(n, base_roots);
    auto rmask = base_mask;
    auto cov = coverage(g, base_roots, p.depth);
    VertexSet pad;
    for (auto [w, d] : truncated_bfs(g, centres, p.radius, base_mask)) pad.push_back(w);
    std::sort(pad.begin(), pad.end());
    auto add_root = [&](Vertex v) {
      rmask[v] = 1;
      for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), p.depth)) ++cov[w];
    };
    for (Vertex u : pad) {
      if (cov[u] >= p.adhesion) continue;
      // Preferred: dominators hidden behind the current roots.
      VertexSet reach;
      for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), p.depth, base_mask))
        reach.push_back(w);
      std::sort(reach.begin(), reach.end());
      VertexSet near = ball(g, u, p.depth);
      for (int pass = 0; pass < 2 && cov[u] < p.adhesion; ++pass) {
        for (Vertex w : near) {
          if (cov[u] >= p.adhesion) break;
          if (rmask[w] || !dprime_mask[w]) continue;
          bool hidden = !std::binary_search(reach.begin(), reach.end(), w);
          if ((pass == 0) == hidden) add_root(w);
        }
      }
      if (cov[u] < p.adhesion) return std::nullopt;
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
      if (rmask[v]) out.push_back(v);
    return out;
  }

  std::optional<WaterLily> try_centres(const VertexSet& base_roots, const VertexSet& centres,
                                       const LilyFilter& filter, std::span<const int> labels) {
    auto roots = augment(base_roots, centres);
    if (!roots) return std::nullopt;
    auto rmask = membership(g.size(), *roots);
    VertexSet live;
    for (Vertex c : centres)
      if (!rmask[c]) live.push_back(c);
    std::vector<std::vector<std::pair<Vertex, int>>> keys;
    for (Vertex c : live) keys.push_back(depth_profile(g, rmask, c, p.depth).entries);
    auto uniform_groups = group_by(live, keys);
    if (uniform_groups.empty()) return std::nullopt;
    // Extra roots can split the centres; keep the largest uniform part.
    const VertexSet& uniform = uniform_groups.front();
    if (uniform.size() < p.min_centres) return std::nullopt;

    std::vector<VertexSet> candidates;
    std::vector<std::optional<std::string>> sigs;
    if (p.use_signature) {
      std::vector<std::string> sk;
      for (Vertex c : uniform)
        sk.push_back(pad_signature(g, *roots, p.radius, p.depth, c, labels));
      std::map<Vertex, std::string> sig_of;
      for (std::size_t i = 0; i < uniform.size(); ++i) sig_of[uniform[i]] = sk[i];
      for (auto& grp : group_by(uniform, sk)) {
        if (grp.size() < p.min_centres) break;
        sigs.push_back(sig_of[grp.front()]);
        candidates.push_back(std::move(grp));
      }
    } else {
      candidates.push_back(uniform);
      sigs.emplace_back();
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      WaterLily lily;
      lily.roots = *roots;
      lily.centres = candidates[i];
      lily.depth = p.depth;
      lily.radius = p.radius;
      lily.adhesion = p.adhesion;
      lily.shared_profile = depth_profile(g, rmask, candidates[i].front(), p.depth);
      lily.signature = sigs[i];
      if (filter && !filter(lily)) continue;
      if (lily.centres.size() < p.min_centres || lily.centres.empty()) continue;
      auto rep = verify_lily(g, lily, labels);
      if (!rep.ok()) throw InternalError("lily failed verification:\n" + rep.str());
      record_measurement("lily_root_size",
                         Rational::of(static_cast<std::int64_t>(lily.roots.size()), 1));
      return lily;
    }
    return std::nullopt;
  }

  std::optional<WaterLily> find(const VertexSet& a_set, const LilyFilter& filter,
                                std::span<const int> labels) {
    if (!feasible) return std::nullopt;
    if (!labels.empty() && labels.size() != g.size())
      throw InputError("lily: label vector has wrong length");
    VertexSet pool;
    for (Vertex a : a_set) {
      g.check_vertex(a);
      if (!closure_mask[a]) pool.push_back(a);
    }
    std::vector<std::vector<std::pair<Vertex, int>>> keys;
    keys.reserve(pool.size());
    for (Vertex a : pool) keys.push_back(far(a));
    auto classes = group_by(pool, keys);

    for (const auto& cls : classes) {
      if (cls.size() < p.min_centres) break;
      VertexSet anchor_roots;
      for (auto [v, d] : far(cls.front())) anchor_roots.push_back(v);
      std::size_t target = p.min_centres;
      for (;;) {
        auto sep = uqw(g, cls, 2 * p.radius, target, p.uqw);
        if (!sep) break;
        VertexSet base = set_union(sep->separator, anchor_roots);
        auto bmask = membership(g.size(), base);
        VertexSet spread;
        for (Vertex v : sep->scattered)
          if (!bmask[v]) spread.push_back(v);
        std::vector<std::vector<std::pair<Vertex, int>>> pk;
        for (Vertex v : spread) pk.push_back(depth_profile(g, bmask, v, p.depth).entries);
        for (const auto& grp : group_by(spread, pk)) {
          if (grp.size() < p.min_centres) break;
          if (auto lily = try_centres(base, grp, filter, labels)) return lily;
        }
        if (target >= cls.size()) break;
        target = std::min(cls.size(), target * 2);
      }
    }
    return std::nullopt;
  }
};

LilyFinder::LilyFinder(const Graph& g, LilyParams params, std::optional<VertexSet> dominator)
    : impl_(std::make_unique<Impl>(g, params, std::move(dominator))) {}
LilyFinder::~LilyFinder() = default;
LilyFinder::LilyFinder(LilyFinder&&) noexcept = default;

std::optional<WaterLily> LilyFinder::find(const VertexSet& a_set, const LilyFilter& filter,
                                          std::span<const int> labels) {
  return impl_->find(a_set, filter, labels);
}
bool LilyFinder::feasible() const { return impl_->feasible; }
const VertexSet& LilyFinder::dominator() const { return impl_->dprime; }
const VertexSet& LilyFinder::closure() const { return impl_->closure; }

std::optional<WaterLily> find_uniform_lily(const Graph& g, const VertexSet& a_set, int depth,
                                           int radius, int adhesion, std::size_t min_centres,
                                           const UqwOptions& opts) {
  LilyParams p{depth, radius, adhesion, min_centres, false, opts};
  return LilyFinder(g, p).find(a_set);
}

std::optional<WaterLily> find_sigma_uniform_lily(const Graph& g, const VertexSet& a_set,
                                                 int depth, int radius, int adhesion,
                                                 std::size_t min_centres,
                                                 std::span<const int> labels,
                                                 const UqwOptions& opts) {
  LilyParams p{depth, radius, adhesion, min_centres, true, opts};
  return LilyFinder(g, p).find(a_set, {}, labels);
}

}  // namespace lilyk
