#include <gtest/gtest.h>

#include <set>

#include "coeven/domination.hpp"
#include "coeven/generators.hpp"
#include "coeven/graph6.hpp"
#include "coeven/transforms.hpp"

namespace coeven {
namespace {

TEST(Enumeration, CountsAndDistinctness) {
  const std::uint64_t expected[] = {1, 1, 2, 8, 64, 1024, 32768};
  for (int n = 0; n <= 6; ++n) {
    const LabeledEnumeration all = enumerate_labeled(n);
    ASSERT_EQ(all.count(), expected[n]);
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < all.count(); ++mask) {
      const Graph g = all[mask];
      ASSERT_EQ(g.order(), n);
      ASSERT_EQ(labeled_mask(g), mask);
      seen.insert(emit_graph6(g));
    }
    EXPECT_EQ(seen.size(), all.count());
  }
  EXPECT_EQ(enumerate_labeled(7).count(), std::uint64_t{1} << 21);
}

TEST(Enumeration, BitOrder) {
  EXPECT_EQ(labeled_graph(3, 0b001).edges(), (std::vector<EdgePair>{{0, 1}}));
  EXPECT_EQ(labeled_graph(3, 0b010).edges(), (std::vector<EdgePair>{{0, 2}}));
  EXPECT_EQ(labeled_graph(3, 0b100).edges(), (std::vector<EdgePair>{{1, 2}}));
  EXPECT_EQ(labeled_graph(4, 0b001000).edges(), (std::vector<EdgePair>{{0, 3}}));
}

TEST(Enumeration, RefusesLargeOrders) {
  EXPECT_THROW(enumerate_labeled(8), RangeError);
  EXPECT_THROW(enumerate_labeled(-1), RangeError);
  EXPECT_THROW(labeled_graph(65, 0), UnsupportedSize);
}

TEST(Gnp, Extremes) {
  EXPECT_EQ(gnp(10, 0.0, 1).size(), 0);
  EXPECT_EQ(gnp(10, 1.0, 1), complete_graph(10));
  EXPECT_EQ(gnp(0, 0.5, 1).order(), 0);
  EXPECT_THROW(gnp(10, 1.5, 1), RangeError);
  EXPECT_THROW(gnp(10, -0.1, 1), RangeError);
  EXPECT_THROW(gnp(65, 0.5, 1), UnsupportedSize);
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(gnp(30, 0.3, 99), gnp(30, 0.3, 99));
  EXPECT_NE(gnp(30, 0.3, 99), gnp(30, 0.3, 100));
}

TEST(Gnp, EdgeCountConcentrates) {
  // 435 pairs at p = 0.5: the mean over 100 samples sits well within 20%.
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) total += gnp(30, 0.5, seed).size();
  const double mean = total / 100;
  EXPECT_NEAR(mean, 217.5, 217.5 * 0.2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int m = gnp(30, 0.5, seed).size();
    EXPECT_GT(m, 174);
    EXPECT_LT(m, 261);
  }
}

TEST(Families, Shapes) {
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_EQ(complete_graph(5).size(), 10);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  const Graph ds = double_star(2, 3);
  EXPECT_EQ(ds.order(), 7);
  EXPECT_TRUE(ds.adjacent(0, 1));
  EXPECT_EQ(ds.degree(0), 3);
  EXPECT_EQ(ds.degree(1), 4);
  EXPECT_THROW(cycle_graph(2), RangeError);
}

TEST(Families, DocumentedValues) {
  const auto coe = [](const Graph& g) { return coeven_domination_number(g).value; };
  EXPECT_EQ(coe(triangle_bridge()), 4);
  EXPECT_EQ(coe(remove_edge(triangle_bridge(), {0, 3}).graph), 2);

  const Graph up = vertex_removal_upper_gadget();
  EXPECT_EQ(up.degree(0), 4);
  EXPECT_EQ(coe(up), 2);
  EXPECT_EQ(coe(remove_vertex(up, 0).graph), 5);

  const Graph low = vertex_removal_lower_gadget();
  EXPECT_EQ(low.degree(0), 3);
  EXPECT_EQ(coe(low), 10);
  EXPECT_EQ(coe(remove_vertex(low, 0).graph), 6);

  const Graph spider = vertex_contraction_lower_gadget();
  EXPECT_EQ(spider.degree(0), 3);
  EXPECT_EQ(coe(spider), 10);
  EXPECT_EQ(coe(contract_vertex(spider, 0).graph), 6);

  EXPECT_EQ(coe(double_star(2, 2)), 6);
  EXPECT_EQ(coe(contract_edge(double_star(2, 2), {0, 1}).graph), 4);
  EXPECT_EQ(coe(double_star(3, 3)), 6);
  EXPECT_EQ(coe(contract_edge(double_star(3, 3), {0, 1}).graph), 6);

  std::set<std::string> names;
  for (const NamedGraph& f : named_families()) names.insert(f.name);
  EXPECT_EQ(names.size(), named_families().size());
  EXPECT_TRUE(names.contains("triangle-bridge"));
  EXPECT_TRUE(names.contains("path-5"));
}

}  // namespace
}  // namespace coeven
