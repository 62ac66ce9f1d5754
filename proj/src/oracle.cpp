#include "lilyk/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace lilyk {

namespace {

void guard(const Graph& g, const OracleOptions& opts) {
  if (g.size() > opts.size_guard)
    throw ResourceGuardError("oracle size guard exceeded: " + std::to_string(g.size()) + " > " +
                             std::to_string(opts.size_guard) + " vertices");
}

VertexSet or_all(const Graph& g, const std::optional<VertexSet>& s) {
  if (!s) return all_vertices(g);
  for (Vertex v : *s) g.check_vertex(v);
  return *s;
}

std::vector<VertexSet> balls(const Graph& g, int r) {
  std::vector<VertexSet> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out[v] = ball(g, v, r);
  return out;
}

// Chooses a subset of the allowed vertices subject to per-vertex count
// constraints lo[v] <= |scope(v) & D| <= hi[v]; minimises or maximises |D|.
struct CountModel {
  std::size_t n = 0;
  std::vector<char> allowed;
  std::vector<VertexSet> scope;
  std::vector<int> lo, hi;
  bool maximize = false;
};

class CountSearch {
 public:
  explicit CountSearch(const CountModel& m) : m_(m) {
    const std::size_t n = m.n;
    hits_.assign(n, {});
    for (Vertex v = 0; v < n; ++v)
      if (m.lo[v] > 0 || m.hi[v] < INT_MAX)
        for (Vertex w : m.scope[v])
          if (m.allowed[w]) hits_[w].push_back(v);
    for (Vertex w = 0; w < n; ++w)
      if (m.allowed[w]) vars_.push_back(w);
    cnt_.assign(n, 0);
    avail_.assign(n, 0);
    for (Vertex w : vars_)
      for (Vertex v : hits_[w]) ++avail_[v];
    for (Vertex v = 0; v < n; ++v) totdef_ += std::max(0, m.lo[v]);
    for (Vertex w : vars_) {
      int h = 0;
      for (Vertex v : hits_[w]) h += m.lo[v] > 0;
      maxhits_ = std::max(maxhits_, h);
    }
    if (m.maximize) build_groups();
    chosen_.assign(n, 0);
  }

  OracleAnswer run() {
    OracleAnswer ans;
    for (Vertex v = 0; v < m_.n; ++v)
      if (m_.lo[v] > avail_[v]) return ans;
    best_ = m_.maximize ? -1 : INT_MAX;
    dfs(0, 0);
    ans.enumerated = nodes_;
    if (best_set_) {
      ans.feasible = true;
      ans.optimum = best_;
      ans.witness = *best_set_;
    }
    return ans;
  }

 private:
  void build_groups() {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < m_.n; ++v)
      if (m_.hi[v] < INT_MAX) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return m_.scope[a].size() > m_.scope[b].size();
    });
    group_of_.assign(m_.n, -1);
    for (Vertex v : order) {
      int idx = static_cast<int>(group_owner_.size());
      int size = 0;
      for (Vertex w : m_.scope[v])
        if (m_.allowed[w] && group_of_[w] < 0) {
          group_of_[w] = idx;
          ++size;
        }
      if (size > 0) {
        group_owner_.push_back(v);
        group_left_.push_back(size);
      }
    }
    for (Vertex w : vars_)
      if (group_of_[w] < 0) ++free_left_;
  }

  int upper_bound() const {
    int ub = free_left_;
    for (std::size_t i = 0; i < group_owner_.size(); ++i)
      ub += std::min(group_left_[i], m_.hi[group_owner_[i]] - cnt_[group_owner_[i]]);
    return ub;
  }

  int lower_bound() const {
    int maxdef = 0;
    for (Vertex v = 0; v < m_.n; ++v) maxdef = std::max(maxdef, m_.lo[v] - cnt_[v]);
    int spread = maxhits_ > 0 ? (totdef_ + maxhits_ - 1) / maxhits_ : 0;
    return std::max(maxdef, spread);
  }

  void record(int size) {
    best_ = size;
    VertexSet s;
    for (Vertex w : vars_)
      if (chosen_[w]) s.push_back(w);
    best_set_ = std::move(s);
  }

  void decided(Vertex w, int delta) {
    if (group_of_.empty()) return;
    if (group_of_[w] >= 0)
      group_left_[group_of_[w]] += delta;
    else
      free_left_ += delta;
  }

  void dfs(std::size_t pos, int size) {
    ++nodes_;
    if (!m_.maximize) {
      if (totdef_ == 0) {
        if (size < best_) record(size);
        return;
      }
      if (size + lower_bound() >= best_) return;
      if (pos == vars_.size()) return;
    } else {
      if (pos == vars_.size()) {
        if (totdef_ == 0 && size > best_) record(size);
        return;
      }
      if (size + upper_bound() <= best_) return;
    }
    Vertex w = vars_[pos];
    decided(w, -1);

    bool can_take = true;
    for (Vertex v : hits_[w])
      if (cnt_[v] + 1 > m_.hi[v]) can_take = false;
    if (can_take) {
      for (Vertex v : hits_[w]) {
        if (cnt_[v] < m_.lo[v]) --totdef_;
        ++cnt_[v];
        --avail_[v];
      }
      chosen_[w] = 1;
      dfs(pos + 1, size + 1);
      chosen_[w] = 0;
      for (Vertex v : hits_[w]) {
        --cnt_[v];
        ++avail_[v];
        if (cnt_[v] < m_.lo[v]) ++totdef_;
      }
    }

    bool can_skip = true;
    for (Vertex v : hits_[w]) {
      --avail_[v];
      if (cnt_[v] + avail_[v] < m_.lo[v]) can_skip = false;
    }
    if (can_skip) dfs(pos + 1, size);
    for (Vertex v : hits_[w]) ++avail_[v];

    decided(w, +1);
  }

  const CountModel& m_;
  std::vector<std::vector<Vertex>> hits_;
  std::vector<Vertex> vars_;
  std::vector<int> cnt_, avail_;
  std::vector<char> chosen_;
  int totdef_ = 0;
  int maxhits_ = 0;
  std::vector<int> group_of_, group_left_;
  std::vector<Vertex> group_owner_;
  int free_left_ = 0;
  int best_ = 0;
  std::optional<VertexSet> best_set_;
  std::uint64_t nodes_ = 0;
};

CountModel base_model(const Graph& g) {
  CountModel m;
  m.n = g.size();
  m.allowed.assign(m.n, 1);
  m.lo.assign(m.n, 0);
  m.hi.assign(m.n, INT_MAX);
  return m;
}

void require_positive(int r, const char* what) {
  if (r < 1) throw InputError(std::string(what) + ": r must be >= 1");
}

}  // namespace

OracleAnswer opt_rc_dom(const Graph& g, int r, int c, const std::optional<VertexSet>& L,
                        const OracleOptions& opts) {
  guard(g, opts);
  require_positive(r, "opt_rc_dom");
  if (c < 1) throw InputError("opt_rc_dom: c must be >= 1");
  auto m = base_model(g);
  m.scope = balls(g, r);
  for (Vertex v : or_all(g, L)) m.lo[v] = c;
  auto ans = CountSearch(m).run();
  if (ans.feasible && !check_rc_dom(g, r, c, or_all(g, L), ans.witness))
    throw InternalError("opt_rc_dom: witness failed re-check");
  return ans;
}

OracleAnswer opt_total(const Graph& g, int r, const std::optional<VertexSet>& L,
                       const OracleOptions& opts) {
  guard(g, opts);
  require_positive(r, "opt_total");
  auto m = base_model(g);
  m.scope = balls(g, r);
  for (Vertex v = 0; v < g.size(); ++v)
    m.scope[v].erase(std::lower_bound(m.scope[v].begin(), m.scope[v].end(), v));
  for (Vertex v : or_all(g, L)) m.lo[v] = 1;
  auto ans = CountSearch(m).run();
  if (ans.feasible && !check_total(g, r, or_all(g, L), ans.witness))
    throw InternalError("opt_total: witness failed re-check");
  return ans;
}

OracleAnswer max_scattered(const Graph& g, int r, int c, const std::optional<VertexSet>& U,
                           const OracleOptions& opts) {
  guard(g, opts);
  require_positive(r, "max_scattered");
  if (c < 1) throw InputError("max_scattered: c must be >= 1");
  auto m = base_model(g);
  m.scope = balls(g, r);
  m.maximize = true;
  auto u = or_all(g, U);
  std::fill(m.allowed.begin(), m.allowed.end(), 0);
  for (Vertex v : u) m.allowed[v] = 1;
  for (Vertex v = 0; v < g.size(); ++v) m.hi[v] = c;
  auto ans = CountSearch(m).run();
  if (!ans.feasible || !check_scattered(g, r, c, u, ans.witness))
    throw InternalError("max_scattered: witness failed re-check");
  return ans;
}

OracleAnswer opt_lambda_mu(const Graph& g, int r, int lambda, int mu,
                           const std::optional<VertexSet>& L, const std::optional<VertexSet>& U,
                           const OracleOptions& opts) {
  guard(g, opts);
  require_positive(r, "opt_lambda_mu");
  if (lambda < 0 || mu < lambda) throw InputError("opt_lambda_mu: need 0 <= lambda <= mu");
  auto m = base_model(g);
  m.scope = balls(g, r);
  auto l = or_all(g, L);
  auto u = or_all(g, U);
  std::fill(m.allowed.begin(), m.allowed.end(), 0);
  for (Vertex v : u) m.allowed[v] = 1;
  for (Vertex v : l) m.lo[v] = lambda;
  for (Vertex v = 0; v < g.size(); ++v) m.hi[v] = mu;
  auto ans = CountSearch(m).run();
  if (ans.feasible && !check_lambda_mu(g, r, lambda, mu, l, u, ans.witness))
    throw InternalError("opt_lambda_mu: witness failed re-check");
  return ans;
}

OracleAnswer opt_perfect_code(const Graph& g, int r, const OracleOptions& opts) {
  return opt_lambda_mu(g, r, 1, 1, std::nullopt, std::nullopt, opts);
}

namespace {

class RomanSearch {
 public:
  RomanSearch(const Graph& g, int r, const VertexSet& L) : n_(g.size()) {
    in_l_ = membership(n_, L);
    scope_ = balls(g, r);
    hits_.assign(n_, {});
    for (Vertex v : L)
      for (Vertex w : scope_[v]) hits_[w].push_back(v);
    heavy_.assign(n_, 0);
    self_.assign(n_, 0);
    avail_.assign(n_, 0);
    for (Vertex v : L) avail_[v] = static_cast<int>(scope_[v].size());
    uncovered_ = static_cast<int>(L.size());
    int maxball = 0;
    for (Vertex w = 0; w < n_; ++w) maxball = std::max(maxball, static_cast<int>(hits_[w].size()));
    reach_ = std::max(2, maxball);
    value_.assign(n_, 0);
  }

  OracleAnswer run() {
    best_ = INT_MAX;
    dfs(0, 0);
    OracleAnswer ans;
    ans.enumerated = nodes_;
    ans.feasible = true;
    ans.optimum = best_;
    for (Vertex v = 0; v < n_; ++v) {
      if (best_value_[v] == 1) ans.witness.push_back(v);
      if (best_value_[v] == 2) ans.witness_heavy.push_back(v);
    }
    return ans;
  }

 private:
  bool covered(Vertex v) const { return self_[v] || heavy_[v] > 0; }

  void dfs(Vertex pos, int cost) {
    ++nodes_;
    if (uncovered_ == 0) {
      if (cost < best_) {
        best_ = cost;
        best_value_ = value_;
      }
      return;
    }
    if (pos == n_) return;
    if (cost + (2 * uncovered_ + reach_ - 1) / reach_ >= best_) return;
    Vertex w = pos;
    for (Vertex v : hits_[w]) --avail_[v];

    // weight 2
    for (Vertex v : hits_[w]) {
      if (!covered(v)) --uncovered_;
      ++heavy_[v];
    }
    value_[w] = 2;
    dfs(pos + 1, cost + 2);
    for (Vertex v : hits_[w]) {
      --heavy_[v];
      if (!covered(v)) ++uncovered_;
    }

    // weight 1 covers only w itself
    bool dead = false;
    for (Vertex v : hits_[w])
      if (v != w && !covered(v) && avail_[v] == 0) dead = true;
    if (!dead) {
      bool was = in_l_[w] && covered(w);
      self_[w] = 1;
      if (in_l_[w] && !was) --uncovered_;
      value_[w] = 1;
      dfs(pos + 1, cost + 1);
      if (in_l_[w] && !was) ++uncovered_;
      self_[w] = 0;
    }

    // weight 0
    dead = false;
    for (Vertex v : hits_[w])
      if (!covered(v) && avail_[v] == 0) dead = true;
    if (!dead) {
      value_[w] = 0;
      dfs(pos + 1, cost);
    }
    value_[w] = 0;
    for (Vertex v : hits_[w]) ++avail_[v];
  }

  std::size_t n_;
  std::vector<char> in_l_;
  std::vector<VertexSet> scope_;
  std::vector<std::vector<Vertex>> hits_;
  std::vector<int> heavy_, avail_;
  std::vector<char> self_;
  std::vector<int> value_, best_value_;
  int uncovered_ = 0;
  int reach_ = 2;
  int best_ = INT_MAX;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleAnswer opt_roman(const Graph& g, int r, const std::optional<VertexSet>& L,
                       const OracleOptions& opts) {
  guard(g, opts);
  require_positive(r, "opt_roman");
  auto l = or_all(g, L);
  auto ans = RomanSearch(g, r, l).run();
  if (!check_roman(g, r, l, ans.witness, ans.witness_heavy))
    throw InternalError("opt_roman: witness failed re-check");
  return ans;
}

// ---- evaluators ------------------------------------------------------------

namespace {
int count_in(const VertexSet& s, const std::vector<char>& mask) {
  int c = 0;
  for (Vertex v : s) c += mask[v] ? 1 : 0;
  return c;
}
bool valid_ids(const Graph& g, const VertexSet& s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < g.size(); });
}
}  // namespace

bool check_rc_dom(const Graph& g, int r, int c, const VertexSet& L, const VertexSet& d) {
  if (!valid_ids(g, d)) return false;
  auto mask = membership(g.size(), d);
  for (Vertex v : L)
    if (count_in(ball(g, v, r), mask) < c) return false;
  return true;
}

bool check_total(const Graph& g, int r, const VertexSet& L, const VertexSet& d) {
  if (!valid_ids(g, d)) return false;
  auto mask = membership(g.size(), d);
  for (Vertex v : L)
    if (count_in(ball(g, v, r), mask) - (mask[v] ? 1 : 0) < 1) return false;
  return true;
}

bool check_roman(const Graph& g, int r, const VertexSet& L, const VertexSet& d1,
                 const VertexSet& d2) {
  if (!valid_ids(g, d1) || !valid_ids(g, d2)) return false;
  auto m1 = membership(g.size(), d1);
  auto m2 = membership(g.size(), d2);
  for (Vertex v : L)
    if (!m1[v] && count_in(ball(g, v, r), m2) < 1) return false;
  return true;
}

bool check_scattered(const Graph& g, int r, int c, const VertexSet& U, const VertexSet& s) {
  if (!valid_ids(g, s) || !is_subset(s, U)) return false;
  auto mask = membership(g.size(), s);
  for (Vertex v = 0; v < g.size(); ++v)
    if (count_in(ball(g, v, r), mask) > c) return false;
  return true;
}

bool check_lambda_mu(const Graph& g, int r, int lambda, int mu, const VertexSet& L,
                     const VertexSet& U, const VertexSet& d) {
  if (!valid_ids(g, d) || !is_subset(d, U)) return false;
  auto mask = membership(g.size(), d);
  auto in_l = membership(g.size(), L);
  for (Vertex v = 0; v < g.size(); ++v) {
    int k = count_in(ball(g, v, r), mask);
    if (k > mu) return false;
    if (in_l[v] && k < lambda) return false;
  }
  return true;
}

}  // namespace lilyk
