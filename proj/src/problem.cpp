#include "lilyk/problem.hpp"

#include "lilyk/graph.hpp"

namespace lilyk {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::rcdom: return "rcdom";
    case Problem::total: return "total";
    case Problem::roman: return "roman";
    case Problem::scatter: return "scatter";
    case Problem::lambdamu: return "lambdamu";
    case Problem::perfectcode: return "perfectcode";
  }
  return "?";
}

Problem parse_problem(std::string_view s) {
  for (Problem p : {Problem::rcdom, Problem::total, Problem::roman, Problem::scatter,
                    Problem::lambdamu, Problem::perfectcode})
    if (problem_name(p) == s) return p;
  if (s == "dom") return Problem::rcdom;
  throw InputError("unknown problem '" + std::string(s) + "'");
}

}  // namespace lilyk
