#include "coeven/generators.hpp"

#include <random>

namespace coeven {

Graph labeled_graph(int n, std::uint64_t mask) {
  if (n < 0 || n > kMaxVertices) throw UnsupportedSize("graph order " + std::to_string(n) + " unsupported");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if (b < 64 && ((mask >> b) & 1U) != 0) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::uint64_t labeled_mask(const Graph& g) {
  const int n = g.order();
  if (n * (n - 1) / 2 > 64) throw UnsupportedSize("labeled mask needs at most 64 vertex pairs");
  std::uint64_t mask = 0;
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if (((g.row(i) >> j) & 1U) != 0) mask |= std::uint64_t{1} << b;
    }
  }
  return mask;
}

LabeledEnumeration::LabeledEnumeration(int n) : n_(n) {
  if (n < 0) throw RangeError("graph order must be non-negative");
  if (n > kMaxEnumerationOrder) {
    throw RangeError("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                     " (n = " + std::to_string(n) + " requested); sample with gnp instead");
  }
  count_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledEnumeration enumerate_labeled(int n) { return LabeledEnumeration(n); }

Graph gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw RangeError("edge probability must lie in [0, 1]");
  if (n < 0 || n > kMaxVertices) throw UnsupportedSize("graph order " + std::to_string(n) + " unsupported");
  std::mt19937_64 engine(seed);
  std::vector<EdgePair> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // 53 high bits give a uniform double in [0, 1) independent of the
      // standard library's distribution implementation.
      const double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (draw < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<EdgePair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw RangeError("a cycle needs at least 3 vertices");
  std::vector<EdgePair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<EdgePair> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<EdgePair> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph double_star(int left, int right) {
  std::vector<EdgePair> edges{{0, 1}};
  int next = 2;
  for (int i = 0; i < left; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < right; ++i) edges.emplace_back(1, next++);
  return Graph(next, edges);
}

Graph triangle_bridge() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}});
}

Graph vertex_removal_upper_gadget() {
  // 0 = v; 1..4 its neighbours; 2 sits in the triangle {2, 5, 6};
  // 1, 3, 4 share the neighbour 7.
  return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {5, 6}, {1, 7}, {3, 7}, {4, 7}});
}

Graph vertex_removal_lower_gadget() {
  // 0 = v; 1..3 its neighbours, each with two private neighbours among 4..9;
  // every one of 4..9 is also joined to both 10 and 11.
  std::vector<EdgePair> edges{{0, 1}, {0, 2}, {0, 3}};
  for (int k = 0; k < 3; ++k) {
    for (int t = 0; t < 2; ++t) {
      const int q = 4 + 2 * k + t;
      edges.emplace_back(1 + k, q);
      edges.emplace_back(q, 10);
      edges.emplace_back(q, 11);
    }
  }
  return Graph(12, edges);
}

Graph vertex_contraction_lower_gadget() {
  // 0 = v; 1..3 its neighbours, each carrying two leaves.
  std::vector<EdgePair> edges{{0, 1}, {0, 2}, {0, 3}};
  for (int k = 0; k < 3; ++k) {
    edges.emplace_back(1 + k, 4 + 2 * k);
    edges.emplace_back(1 + k, 5 + 2 * k);
  }
  return Graph(10, edges);
}

std::vector<NamedGraph> named_families() {
  return {
      {"path-5", path_graph(5)},
      {"cycle-4", cycle_graph(4)},
      {"triangle-bridge", triangle_bridge()},
      {"double-star-2-2", double_star(2, 2)},
      {"double-star-3-3", double_star(3, 3)},
      {"vertex-removal-upper-gadget", vertex_removal_upper_gadget()},
      {"vertex-removal-lower-gadget", vertex_removal_lower_gadget()},
      {"vertex-contraction-lower-gadget", vertex_contraction_lower_gadget()},
  };
}

}  // namespace coeven
