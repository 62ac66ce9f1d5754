#pragma once

#include <cstdint>
#include <string>

#include "lilyk/graph.hpp"

namespace lilyk {

enum class Family { grid, random_degenerate, spider_forest, cycle, star };

struct GeneratorSpec {
  Family family = Family::grid;
  /// grid: w, h. random_degenerate: n, d. spider_forest: count, legs, leg_len.
  /// cycle: n. star: leaves.
  std::int64_t a = 0, b = 0, c = 0;
  std::uint64_t seed = 0;
  /// Shuffle vertex ids with the seed after construction.
  bool relabel = false;

  std::string str() const;
};

/// Parses "grid:4,3", "degenerate:12,2", "spider:3,4,2", "cycle:5", "star:6".
GeneratorSpec parse_generator(const std::string& text, std::uint64_t seed = 0);
Graph generate(const GeneratorSpec& spec);

/// Vertex y * w + x is cell (x, y).
Graph grid(int w, int h);
/// Vertices are inserted in a random order; each gets between 1 and d random
/// neighbours among those inserted before it.
Graph random_degenerate(int n, int d, std::uint64_t seed);
/// Each spider is a centre followed by its legs, leg by leg from the centre out.
Graph spider_forest(int count, int legs, int leg_len);
Graph cycle(int n);
/// Centre 0 plus `leaves` leaves.
Graph star(int leaves);
Graph relabel(const Graph& g, std::uint64_t seed);

}  // namespace lilyk
