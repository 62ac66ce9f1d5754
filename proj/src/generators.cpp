#include "lilyk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace lilyk {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

std::vector<std::int64_t> parse_args(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      require(used == tok.size(), "bad generator argument '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad generator argument '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::string GeneratorSpec::str() const {
  std::ostringstream out;
  switch (family) {
    case Family::grid: out << "grid:" << a << ',' << b; break;
    case Family::random_degenerate: out << "degenerate:" << a << ',' << b; break;
    case Family::spider_forest: out << "spider:" << a << ',' << b << ',' << c; break;
    case Family::cycle: out << "cycle:" << a; break;
    case Family::star: out << "star:" << a; break;
  }
  out << "@" << seed;
  if (relabel) out << "~";
  return out.str();
}

GeneratorSpec parse_generator(const std::string& text, std::uint64_t seed) {
  auto colon = text.find(':');
  require(colon != std::string::npos, "generator spec must look like family:args");
  auto name = text.substr(0, colon);
  auto args = parse_args(text.substr(colon + 1));
  GeneratorSpec spec;
  spec.seed = seed;
  std::size_t want = 0;
  if (name == "grid") {
    spec.family = Family::grid;
    want = 2;
  } else if (name == "degenerate" || name == "random_degenerate") {
    spec.family = Family::random_degenerate;
    want = 2;
  } else if (name == "spider" || name == "spider_forest") {
    spec.family = Family::spider_forest;
    want = 3;
  } else if (name == "cycle") {
    spec.family = Family::cycle;
    want = 1;
  } else if (name == "star") {
    spec.family = Family::star;
    want = 1;
  } else {
    throw InputError("unknown generator family '" + name + "'");
  }
  require(args.size() == want, "generator '" + name + "' takes " + std::to_string(want) +
                                   " arguments");
  spec.a = args[0];
  if (want > 1) spec.b = args[1];
  if (want > 2) spec.c = args[2];
  return spec;
}

Graph generate(const GeneratorSpec& spec) {
  Graph g;
  switch (spec.family) {
    case Family::grid: g = grid(static_cast<int>(spec.a), static_cast<int>(spec.b)); break;
    case Family::random_degenerate:
      g = random_degenerate(static_cast<int>(spec.a), static_cast<int>(spec.b), spec.seed);
      break;
    case Family::spider_forest:
      g = spider_forest(static_cast<int>(spec.a), static_cast<int>(spec.b),
                        static_cast<int>(spec.c));
      break;
    case Family::cycle: g = cycle(static_cast<int>(spec.a)); break;
    case Family::star: g = star(static_cast<int>(spec.a)); break;
  }
  return spec.relabel ? relabel(g, spec.seed) : g;
}

Graph grid(int w, int h) {
  require(w > 0 && h > 0, "grid: w and h must be positive");
  Graph g(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      Vertex v = y * w + x;
      if (x + 1 < w) g.add_edge(v, v + 1);
      if (y + 1 < h) g.add_edge(v, v + w);
    }
  return g;
}

Graph random_degenerate(int n, int d, std::uint64_t seed) {
  require(n > 0 && d > 0, "random_degenerate: n and d must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Graph g(n);
  std::vector<Vertex> earlier;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      std::uniform_int_distribution<int> count(1, std::min(d, i));
      earlier.assign(order.begin(), order.begin() + i);
      std::shuffle(earlier.begin(), earlier.end(), rng);
      int k = count(rng);
      for (int j = 0; j < k; ++j) g.add_edge(order[i], earlier[j]);
    }
  }
  return g;
}

Graph spider_forest(int count, int legs, int leg_len) {
  require(count > 0 && legs > 0 && leg_len > 0, "spider_forest: parameters must be positive");
  Graph g;
  for (int s = 0; s < count; ++s) {
    Vertex centre = g.add_vertex();
    for (int l = 0; l < legs; ++l) {
      Vertex prev = centre;
      for (int i = 0; i < leg_len; ++i) {
        Vertex next = g.add_vertex();
        g.add_edge(prev, next);
        prev = next;
      }
    }
  }
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph star(int leaves) {
  require(leaves > 0, "star: need at least one leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Vertex> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  if (g.has_labels())
    for (Vertex v = 0; v < g.size(); ++v) out.set_label(perm[v], g.label(v));
  return out;
}

}  // namespace lilyk
