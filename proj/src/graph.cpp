#include "lilyk/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lilyk {

namespace {

// Reusable BFS scratch space; avoids an O(n) reset per traversal.
struct BfsScratch {
  std::vector<std::uint32_t> stamp;
  std::vector<int> dist;
  std::vector<Vertex> queue;
  std::uint32_t epoch = 0;

  void prepare(std::size_t n) {
    if (stamp.size() < n) {
      stamp.assign(n, 0);
      dist.assign(n, 0);
      epoch = 0;
    }
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    queue.clear();
  }
  bool seen(Vertex v) const { return stamp[v] == epoch; }
  void mark(Vertex v, int d) {
    stamp[v] = epoch;
    dist[v] = d;
  }
};

thread_local BfsScratch scratch;

bool flagged(std::span<const char> flags, Vertex v) { return !flags.empty() && flags[v]; }

}  // namespace

// ---- Graph -----------------------------------------------------------------

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!g.add_edge(u, v))
      throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adj_.size())
    throw InputError("vertex " + std::to_string(v) + " out of range (n=" +
                     std::to_string(adj_.size()) + ")");
}

Vertex Graph::add_vertex(int label) {
  adj_.emplace_back();
  if (label != 0 || !labels_.empty()) {
    labels_.resize(adj_.size() - 1, 0);
    labels_.push_back(label);
  }
  return static_cast<Vertex>(adj_.size() - 1);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

void Graph::set_label(Vertex v, int label) {
  check_vertex(v);
  if (labels_.size() < adj_.size()) labels_.resize(adj_.size(), 0);
  labels_[v] = label;
}

std::vector<int> Graph::labels() const {
  if (labels_.empty()) return std::vector<int>(adj_.size(), 0);
  auto out = labels_;
  out.resize(adj_.size(), 0);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---- sets ------------------------------------------------------------------

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out[v] = v;
  return out;
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---- traversal -------------------------------------------------------------

std::vector<Reached> truncated_bfs(const Graph& g, std::span<const Vertex> sources, int radius,
                                   std::span<const char> removed, std::span<const char> stop) {
  std::vector<Reached> out;
  if (radius < 0) return out;
  auto& s = scratch;
  s.prepare(g.size());
  for (Vertex v : sources) {
    g.check_vertex(v);
    if (s.seen(v) || flagged(removed, v)) continue;
    s.mark(v, 0);
    s.queue.push_back(v);
    out.push_back({v, 0});
  }
  const std::size_t num_sources = s.queue.size();
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    Vertex u = s.queue[head];
    int du = s.dist[u];
    if (du >= radius) continue;
    if (head >= num_sources && flagged(stop, u)) continue;
    for (Vertex w : g.neighbors(u)) {
      if (s.seen(w) || flagged(removed, w)) continue;
      s.mark(w, du + 1);
      s.queue.push_back(w);
      out.push_back({w, du + 1});
    }
  }
  return out;
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  g.check_vertex(v);
  if (r < 0) throw InputError("negative radius");
  VertexSet out;
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), r)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int bounded_distance(const Graph& g, Vertex u, Vertex v, int cap) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), cap))
    if (w == v) return d;
  return kInfinity;
}

std::vector<Vertex> least_shortest_path(const Graph& g, Vertex from, Vertex to, int radius,
                                        std::span<const char> avoid) {
  g.check_vertex(from);
  g.check_vertex(to);
  if (from == to) return {from};
  // Distances towards `to`; `avoid` vertices other than the endpoints are
  // never entered, so every walk below is avoid-free internally.
  std::vector<int> dist(g.size(), kInfinity);
  std::vector<char> removed;
  if (!avoid.empty()) {
    removed.assign(avoid.begin(), avoid.end());
    removed[from] = 0;
    removed[to] = 0;
  }
  for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&to, 1), radius, removed)) {
    // `from` may be entered but must not be expanded as an internal vertex;
    // that is harmless here since the walk starts at `from`.
    dist[w] = d;
  }
  if (dist[from] == kInfinity) return {};
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1 && (w == to || removed.empty() || !removed[w]) && w != from) {
        next = w;
        break;
      }
    }
    if (next == cur) throw InternalError("least_shortest_path: broken distance layering");
    path.push_back(next);
    cur = next;
  }
  return path;
}

// ---- construction ----------------------------------------------------------

AttachResult attach_path(Graph& g, Vertex u, std::optional<Vertex> v, int len) {
  g.check_vertex(u);
  if (len < 1) throw InputError("attach_path: length must be >= 1");
  if (v) {
    g.check_vertex(*v);
    if (*v == u) throw InputError("attach_path: endpoints coincide");
  }
  AttachResult res;
  if (v && len == 1) {
    res.endpoint = *v;
    res.noop = !g.add_edge(u, *v);
    return res;
  }
  Vertex prev = u;
  for (int i = 1; i < len; ++i) {
    Vertex w = g.add_vertex();
    g.add_edge(prev, w);
    res.created.push_back(w);
    prev = w;
  }
  if (v) {
    g.add_edge(prev, *v);
    res.endpoint = *v;
  } else {
    Vertex w = g.add_vertex();
    g.add_edge(prev, w);
    res.created.push_back(w);
    res.endpoint = w;
  }
  return res;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  VertexSet out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_parent.at(v));
  return make_set(std::move(out));
}

VertexSet InducedSubgraph::project(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s)
    if (v < from_parent.size() && from_parent[v] >= 0)
      out.push_back(static_cast<Vertex>(from_parent[v]));
  return make_set(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph res;
  res.from_parent.assign(g.size(), -1);
  for (Vertex v : s) {
    g.check_vertex(v);
    if (res.from_parent[v] >= 0) continue;
    res.from_parent[v] = static_cast<std::int64_t>(res.to_parent.size());
    res.to_parent.push_back(v);
  }
  res.graph = Graph(res.to_parent.size());
  for (Vertex i = 0; i < res.to_parent.size(); ++i) {
    Vertex v = res.to_parent[i];
    if (g.label(v) != 0) res.graph.set_label(i, g.label(v));
    for (Vertex w : g.neighbors(v)) {
      auto j = res.from_parent[w];
      if (j > static_cast<std::int64_t>(i)) res.graph.add_edge(i, static_cast<Vertex>(j));
    }
  }
  return res;
}

// ---- sparsity ----------------------------------------------------------------

VertexSet greedy_scattered(const Graph& g, const VertexSet& x, int r) {
  std::vector<char> blocked(g.size(), 0);
  VertexSet a;
  for (Vertex v : x) {
    g.check_vertex(v);
    if (blocked[v]) continue;
    a.push_back(v);
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&v, 1), 2 * r)) blocked[w] = 1;
  }
  return a;
}

std::vector<Vertex> min_degree_removal_order(const Graph& g) {
  std::vector<std::size_t> deg(g.size());
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < g.size(); ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> gone(g.size(), 0);
  std::vector<Vertex> order;
  order.reserve(g.size());
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return order;
}

int degeneracy(const Graph& g) {
  std::vector<char> gone(g.size(), 0);
  int best = 0;
  for (Vertex v : min_degree_removal_order(g)) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += gone[w] ? 0 : 1;
    best = std::max(best, d);
    gone[v] = 1;
  }
  return best;
}

WcolBound wcol_upper_bound(const Graph& g, int r) {
  if (r < 1) throw InputError("wcol_upper_bound: r must be >= 1");
  WcolBound res;
  res.ordering = min_degree_removal_order(g);
  std::reverse(res.ordering.begin(), res.ordering.end());
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < res.ordering.size(); ++i) pos[res.ordering[i]] = i;

  // u is weakly r-reachable from w iff a path of length <= r from u to w
  // only visits vertices placed after u; so BFS from u over later vertices.
  std::vector<int> wreach(g.size(), 0);
  std::vector<char> earlier(g.size(), 0);
  for (Vertex u : res.ordering) {
    for (auto [w, d] : truncated_bfs(g, std::span<const Vertex>(&u, 1), r, earlier)) ++wreach[w];
    earlier[u] = 1;
  }
  for (int c : wreach) res.value = std::max(res.value, c);
  return res;
}

}  // namespace lilyk
