#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lilyk/graph.hpp"
#include "lilyk/projections.hpp"

namespace lilyk {

struct UqwOptions {
  /// Maximum separator size before giving up.
  std::size_t max_separator = 64;
};

struct UqwResult {
  VertexSet separator;
  VertexSet scattered;
};

/// Finds S outside x and X' in x \ S, |X'| >= target, with X' pairwise at
/// distance > `separation` in g - S. Empty optional when the separator cap is
/// reached (or no candidate separator helps).
std::optional<UqwResult> uqw(const Graph& g, const VertexSet& x, int separation,
                             std::size_t target, const UqwOptions& opts = {});

/// Roots R and centres C. Pads are the balls of `radius` around centres in
/// g - R; each pad vertex sees `adhesion` roots within `depth`.
struct WaterLily {
  VertexSet roots;
  VertexSet centres;
  int depth = 0;
  int radius = 0;
  int adhesion = 1;
  /// depth-profile of every centre onto the roots.
  ProjectionProfile shared_profile;
  /// Common pad signature of the centres, when one was requested.
  std::optional<std::string> signature;
};

/// Per-level sets of (depth-profile onto R, label) over the spheres of radius
/// 0..radius around `centre` in g - R, canonically encoded. `labels` may be
/// empty (all labels 0).
std::string pad_signature(const Graph& g, const VertexSet& roots, int radius, int depth,
                          Vertex centre, std::span<const int> labels = {});

struct LilyCheck {
  std::string name;
  bool passed = true;
  std::optional<Vertex> counterexample;
  std::string detail;
};

struct LilyReport {
  std::vector<LilyCheck> checks;
  std::vector<std::string> warnings;
  bool ok() const;
  std::string str() const;
};

/// Recomputes every lily invariant from scratch. Signatures are recomputed
/// with `labels` when the lily carries one.
LilyReport verify_lily(const Graph& g, const WaterLily& lily, std::span<const int> labels = {});

struct LilyParams {
  int depth = 1;
  int radius = 1;
  int adhesion = 1;
  /// Minimum number of centres.
  std::size_t min_centres = 1;
  /// Restrict centres to one pad-signature class.
  bool use_signature = false;
  UqwOptions uqw;
};

/// Optional post-processing hook: may shrink lily.centres, returns false to
/// reject the lily. Runs before the size check and verification.
using LilyFilter = std::function<bool(WaterLily&)>;

/// Lily search with the expensive parts (dominator, closure, profiles) cached
/// across calls on the same graph.
class LilyFinder {
 public:
  /// `dominator` replaces the internally computed (depth, adhesion)-dominating
  /// set when given.
  LilyFinder(const Graph& g, LilyParams params,
             std::optional<VertexSet> dominator = std::nullopt);
  ~LilyFinder();
  LilyFinder(LilyFinder&&) noexcept;

  /// Empty optional on failure. Centres are drawn from a_set.
  std::optional<WaterLily> find(const VertexSet& a_set, const LilyFilter& filter = {},
                                std::span<const int> labels = {});

  /// False when no (depth, adhesion)-dominating set exists.
  bool feasible() const;
  const VertexSet& dominator() const;
  const VertexSet& closure() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::optional<WaterLily> find_uniform_lily(const Graph& g, const VertexSet& a_set, int depth,
                                           int radius, int adhesion, std::size_t min_centres,
                                           const UqwOptions& opts = {});

std::optional<WaterLily> find_sigma_uniform_lily(const Graph& g, const VertexSet& a_set,
                                                 int depth, int radius, int adhesion,
                                                 std::size_t min_centres,
                                                 std::span<const int> labels = {},
                                                 const UqwOptions& opts = {});

}  // namespace lilyk
