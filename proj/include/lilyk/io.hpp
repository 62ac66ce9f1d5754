#pragma once

#include <iosfwd>
#include <string>

#include "lilyk/graph.hpp"
#include "lilyk/kernels.hpp"

namespace lilyk {

/// Text format: `p <n> <m>`, then m lines `e <u> <v>`. Lines starting with
/// `c` are comments. Optional `l <v> <label>` lines carry vertex labels.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// Graph block followed by `problem`, parameter lines (`r`, `c`, `lambda`,
/// `mu`, `k`), `L`, `U`, `offset`, `origin` and an optional `trivial`.
/// Inside the annotation block `c <int>` is the c parameter; any other line
/// starting with `c` is still a comment. Missing L/U default to all of V and a
/// missing origin to the identity. A bare graph parses as a plain instance.
AnnotatedInstance parse_instance(std::istream& in);
AnnotatedInstance parse_instance(const std::string& text);
std::string serialize_instance(const AnnotatedInstance& inst);

Graph read_graph_file(const std::string& path);
AnnotatedInstance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lilyk
