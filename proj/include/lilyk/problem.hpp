#pragma once

#include <string>
#include <string_view>

namespace lilyk {

enum class Problem { rcdom, total, roman, scatter, lambdamu, perfectcode };

std::string problem_name(Problem p);
/// Accepts the names produced by problem_name; throws InputError otherwise.
Problem parse_problem(std::string_view s);

/// Maximisation problems ask for a solution of size at least k.
inline bool is_maximisation(Problem p) { return p == Problem::scatter; }

struct ProblemParams {
  int r = 1;
  int c = 1;
  int lambda = 1;
  int mu = 1;

  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

}  // namespace lilyk
