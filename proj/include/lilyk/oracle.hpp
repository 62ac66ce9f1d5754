#pragma once

#include <cstdint>
#include <optional>

#include "lilyk/graph.hpp"

namespace lilyk {

struct OracleOptions {
  /// Largest vertex count accepted; exceeding it throws ResourceGuardError.
  std::size_t size_guard = 20;
};

struct OracleAnswer {
  bool feasible = false;
  /// Minimum size/cost (or maximum size for scattered sets).
  std::int64_t optimum = 0;
  /// Lexicographically least optimal set; for Roman domination the
  /// weight-1 part.
  VertexSet witness;
  /// Weight-2 part of a Roman witness, empty otherwise.
  VertexSet witness_heavy;
  /// Search-tree nodes visited.
  std::uint64_t enumerated = 0;
};

/// Minimum D with |N^r[v] & D| >= c for every v in L (default: all of V).
OracleAnswer opt_rc_dom(const Graph& g, int r, int c,
                        const std::optional<VertexSet>& L = std::nullopt,
                        const OracleOptions& opts = {});

/// Minimum D with |(N^r[v] \ {v}) & D| >= 1 for every v in L.
OracleAnswer opt_total(const Graph& g, int r, const std::optional<VertexSet>& L = std::nullopt,
                       const OracleOptions& opts = {});

/// Minimum |D1| + 2|D2| such that D2 r-dominates L \ D1.
OracleAnswer opt_roman(const Graph& g, int r, const std::optional<VertexSet>& L = std::nullopt,
                       const OracleOptions& opts = {});

/// Maximum I inside U with |N^r[v] & I| <= c for every vertex v.
OracleAnswer max_scattered(const Graph& g, int r, int c,
                           const std::optional<VertexSet>& U = std::nullopt,
                           const OracleOptions& opts = {});

/// Minimum D inside U with lambda <= |N^r[v] & D| on L and
/// |N^r[v] & D| <= mu on every vertex.
OracleAnswer opt_lambda_mu(const Graph& g, int r, int lambda, int mu,
                           const std::optional<VertexSet>& L = std::nullopt,
                           const std::optional<VertexSet>& U = std::nullopt,
                           const OracleOptions& opts = {});

/// Minimum I with |N^r[v] & I| = 1 for every vertex.
OracleAnswer opt_perfect_code(const Graph& g, int r, const OracleOptions& opts = {});

// Independent constraint evaluators, written without any search state. Used to
// re-check oracle witnesses and kernel solutions.
bool check_rc_dom(const Graph& g, int r, int c, const VertexSet& L, const VertexSet& d);
bool check_total(const Graph& g, int r, const VertexSet& L, const VertexSet& d);
bool check_roman(const Graph& g, int r, const VertexSet& L, const VertexSet& d1,
                 const VertexSet& d2);
bool check_scattered(const Graph& g, int r, int c, const VertexSet& U, const VertexSet& s);
bool check_lambda_mu(const Graph& g, int r, int lambda, int mu, const VertexSet& L,
                     const VertexSet& U, const VertexSet& d);

}  // namespace lilyk
