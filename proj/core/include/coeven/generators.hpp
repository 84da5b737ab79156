#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

/// Exhaustive labeled enumeration is refused above this order.
inline constexpr int kMaxEnumerationOrder = 7;

/// The graph on n vertices whose upper-triangle bits, in the order
/// x(0,1), x(0,2), x(1,2), x(0,3), ..., are the bits of `mask` starting at the
/// least significant one.
Graph labeled_graph(int n, std::uint64_t mask);

/// Inverse of labeled_graph.
std::uint64_t labeled_mask(const Graph& g);

/// All 2^(n(n-1)/2) labeled graphs on n vertices, indexed by mask.
class LabeledEnumeration {
 public:
  explicit LabeledEnumeration(int n);

  int order() const { return n_; }
  std::uint64_t count() const { return count_; }
  Graph operator[](std::uint64_t mask) const { return labeled_graph(n_, mask); }

 private:
  int n_;
  std::uint64_t count_;
};

LabeledEnumeration enumerate_labeled(int n);

/// G(n, p): pairs (i, j), i < j, are visited lexicographically and kept when
/// the next uniform draw is below p. Deterministic for fixed (n, p, seed).
Graph gnp(int n, double p, std::uint64_t seed);

// Named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Centre 0, leaves 1..k.
Graph star_graph(int leaves);
/// Adjacent centres 0 and 1; centre 0 carries `left` leaves, centre 1 `right`.
Graph double_star(int left, int right);
/// Two triangles {0,1,2} and {3,4,5} joined by the edges 0-3 and 1-4. Removing
/// 0-3 drops the co-even domination number from 4 to 2.
Graph triangle_bridge();
/// Vertex 0 of degree 4 whose removal raises the co-even domination number
/// from 2 to 5 (upper bound of vertex removal attained).
Graph vertex_removal_upper_gadget();
/// Vertex 0 of degree 3 whose removal lowers the co-even domination number
/// from 10 to 6 (lower bound of vertex removal attained).
Graph vertex_removal_lower_gadget();
/// Vertex 0 of degree 3 whose contraction lowers the co-even domination
/// number from 10 to 6 (lower bound of vertex contraction attained).
Graph vertex_contraction_lower_gadget();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The sharpness families used by witness searches.
std::vector<NamedGraph> named_families();

}  // namespace coeven
