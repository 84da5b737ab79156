#pragma once

#include <cstdint>

#include "coeven/graph.hpp"

namespace coeven {

/// Optimum value with one optimal certificate. The certificate is the
/// lexicographically smallest optimal set (as a sorted id sequence).
struct DominationResult {
  int value = 0;
  VertexSet certificate;
  /// Search nodes visited; statistics only.
  std::uint64_t explored = 0;
};

/// Every vertex outside `s` has a neighbour in `s`.
bool is_dominating_set(const Graph& g, VertexSet s);

/// Dominating, and every vertex outside `s` has even degree.
bool is_coeven_dominating_set(const Graph& g, VertexSet s);

/// Vertices of odd or zero degree; they lie in every co-even dominating set.
VertexSet forced_vertices(const Graph& g);

struct SolveOptions {
  /// Solve each connected component separately and combine.
  bool decompose = true;
};

DominationResult domination_number(const Graph& g, SolveOptions options = {});

/// Exact co-even domination number. The forced vertices seed the search and
/// only even-degree vertices are branched on.
DominationResult coeven_domination_number(const Graph& g, SolveOptions options = {});

inline constexpr int kDefaultOracleCap = 20;

/// Exhaustive scan of all subsets in order of increasing size (lexicographic
/// within a size). Independent of the main solver; use as a test oracle.
DominationResult coeven_brute_force(const Graph& g, int cap = kDefaultOracleCap);

/// Same scan for plain domination.
DominationResult domination_brute_force(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace coeven
