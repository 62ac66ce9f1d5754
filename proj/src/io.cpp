#include "lilyk/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace lilyk {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      line = line.substr(first);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
  }
};

std::int64_t parse_int(const std::string& tok, const LineReader& rd) {
  try {
    std::size_t used = 0;
    auto v = std::stoll(tok, &used);
    if (used != tok.size()) rd.fail("bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    rd.fail("bad integer '" + tok + "'");
  }
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

bool is_comment(const std::vector<std::string>& toks) { return toks[0] == "c"; }

// Reads the graph block; leaves the first non-graph line in `pending`.
Graph read_graph_block(LineReader& rd, std::string& pending, bool& has_pending) {
  std::string line;
  has_pending = false;
  std::int64_t n = -1, m = -1;
  while (rd.next(line)) {
    auto toks = split(line);
    if (is_comment(toks)) continue;
    if (toks[0] != "p" || toks.size() != 3) rd.fail("expected 'p <n> <m>'");
    n = parse_int(toks[1], rd);
    m = parse_int(toks[2], rd);
    break;
  }
  if (n < 0 || m < 0) throw InputError("missing or invalid 'p <n> <m>' header");
  Graph g(static_cast<std::size_t>(n));
  std::int64_t seen = 0;
  while (rd.next(line)) {
    auto toks = split(line);
    if (is_comment(toks)) continue;
    if (toks[0] == "e") {
      if (toks.size() != 3) rd.fail("expected 'e <u> <v>'");
      auto u = parse_int(toks[1], rd), v = parse_int(toks[2], rd);
      if (u < 0 || v < 0 || u >= n || v >= n) rd.fail("edge endpoint out of range");
      if (u == v) rd.fail("self-loop");
      if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) rd.fail("duplicate edge");
      ++seen;
    } else if (toks[0] == "l") {
      if (toks.size() != 3) rd.fail("expected 'l <v> <label>'");
      auto v = parse_int(toks[1], rd);
      if (v < 0 || v >= n) rd.fail("label vertex out of range");
      g.set_label(static_cast<Vertex>(v), static_cast<int>(parse_int(toks[2], rd)));
    } else {
      pending = line;
      has_pending = true;
      break;
    }
  }
  if (seen != m) throw InputError("header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen));
  return g;
}

VertexSet parse_ids(const std::vector<std::string>& toks, const Graph& g, const LineReader& rd) {
  std::vector<Vertex> ids;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    auto v = parse_int(toks[i], rd);
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) rd.fail("vertex id out of range");
    ids.push_back(static_cast<Vertex>(v));
  }
  return make_set(std::move(ids));
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader rd{in};
  std::string pending;
  bool has_pending = false;
  Graph g = read_graph_block(rd, pending, has_pending);
  if (has_pending) throw InputError("unexpected line after graph block: '" + pending + "'");
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.size() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.size(); ++v)
      if (g.label(v) != 0) out << "l " << v << ' ' << g.label(v) << '\n';
  return out.str();
}

AnnotatedInstance parse_instance(std::istream& in) {
  LineReader rd{in};
  std::string line;
  bool has_pending = false;
  AnnotatedInstance inst;
  inst.graph = read_graph_block(rd, line, has_pending);
  const auto n = inst.graph.size();
  bool have_l = false, have_u = false, have_origin = false, have_problem = false;
  while (has_pending || rd.next(line)) {
    has_pending = false;
    auto toks = split(line);
    const auto& key = toks[0];
    auto scalar = [&]() {
      if (toks.size() != 2) rd.fail("expected '" + key + " <int>'");
      return parse_int(toks[1], rd);
    };
    if (key == "c" && !(have_problem && toks.size() == 2)) continue;
    if (key == "problem") {
      if (toks.size() != 2) rd.fail("expected 'problem <id>'");
      inst.problem = parse_problem(toks[1]);
      have_problem = true;
    } else if (key == "r") {
      inst.params.r = static_cast<int>(scalar());
    } else if (key == "c") {
      inst.params.c = static_cast<int>(scalar());
    } else if (key == "lambda") {
      inst.params.lambda = static_cast<int>(scalar());
    } else if (key == "mu") {
      inst.params.mu = static_cast<int>(scalar());
    } else if (key == "k") {
      inst.k = scalar();
    } else if (key == "offset") {
      inst.offset = scalar();
    } else if (key == "L") {
      inst.L = parse_ids(toks, inst.graph, rd);
      have_l = true;
    } else if (key == "U") {
      inst.U = parse_ids(toks, inst.graph, rd);
      have_u = true;
    } else if (key == "origin") {
      inst.origin.assign(n, kGadgetOrigin);
      std::vector<char> seen(n, 0);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon == std::string::npos) rd.fail("expected '<v>:<origin>'");
        auto v = parse_int(toks[i].substr(0, colon), rd);
        if (v < 0 || static_cast<std::size_t>(v) >= n) rd.fail("origin vertex out of range");
        auto rhs = toks[i].substr(colon + 1);
        inst.origin[v] = rhs == "g" ? kGadgetOrigin : parse_int(rhs, rd);
        seen[v] = 1;
      }
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) rd.fail("origin misses vertex " + std::to_string(v));
      have_origin = true;
    } else if (key == "trivial") {
      if (toks.size() != 2 || (toks[1] != "yes" && toks[1] != "no"))
        rd.fail("expected 'trivial yes|no'");
      inst.trivial = toks[1] == "yes";
    } else {
      rd.fail("unknown key '" + key + "'");
    }
  }
  if (!have_l) inst.L = all_vertices(inst.graph);
  if (!have_u) inst.U = all_vertices(inst.graph);
  if (!have_origin) {
    inst.origin.resize(n);
    std::iota(inst.origin.begin(), inst.origin.end(), 0);
  }
  return inst;
}

AnnotatedInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const AnnotatedInstance& inst) {
  std::ostringstream out;
  out << serialize_graph(inst.graph);
  out << "problem " << problem_name(inst.problem) << '\n';
  out << "r " << inst.params.r << "\nc " << inst.params.c << "\nlambda " << inst.params.lambda
      << "\nmu " << inst.params.mu << "\nk " << inst.k << '\n';
  out << 'L';
  for (Vertex v : inst.L) out << ' ' << v;
  out << "\nU";
  for (Vertex v : inst.U) out << ' ' << v;
  out << "\noffset " << inst.offset << "\norigin";
  for (std::size_t v = 0; v < inst.origin.size(); ++v) {
    out << ' ' << v << ':';
    if (inst.origin[v] == kGadgetOrigin)
      out << 'g';
    else
      out << inst.origin[v];
  }
  out << '\n';
  if (inst.trivial) out << "trivial " << (*inst.trivial ? "yes" : "no") << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in);
}

AnnotatedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_instance(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace lilyk
