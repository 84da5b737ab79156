#include <gtest/gtest.h>

#include "coeven/constructions.hpp"
#include "coeven/domination.hpp"
#include "coeven/generators.hpp"
#include "naive.hpp"

namespace coeven {
namespace {

const Graph kC4 = cycle_graph(4);
const Graph kK3 = complete_graph(3);
const Graph kK4 = complete_graph(4);
const Graph kP3 = path_graph(3);

// Independent validity judgement for candidates.
bool reference_valid(const Graph& g, VertexSet s) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()));
  for (VertexId v : s) in[v] = true;
  return naive::coeven(naive::matrix_of(g), in);
}

TEST(VertexRemovalLift, Examples) {
  CandidateCert c = vertex_removal_lift(kC4, 3, {0, 2}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 2}));
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(reference_valid(path_graph(3), c.vertex_set));
  EXPECT_EQ(c.claimed_bound, 3);
  EXPECT_TRUE(c.within_bound);
  EXPECT_EQ(c.proof_case, ProofCase::EvenDegreeOutside);

  c = vertex_removal_lift(kC4, 3, {0, 2}, Direction::Backward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 2, 3}));
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(reference_valid(kC4, c.vertex_set));
  EXPECT_EQ(c.claimed_bound, 5);
  EXPECT_EQ(c.proof_case, ProofCase::AddClosedNeighbourhood);

  c = vertex_removal_lift(kK4, 0, {0, 1, 2, 3}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 6);
  EXPECT_EQ(c.proof_case, ProofCase::OddDegree);
}

TEST(EdgeRemovalLift, Examples) {
  CandidateCert c = edge_removal_lift(kC4, {0, 1}, {0, 2}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(reference_valid(remove_edge(kC4, {0, 1}).graph, c.vertex_set));
  EXPECT_EQ(c.claimed_bound, 3);
  EXPECT_EQ(c.proof_case, ProofCase::OneEndpoint);

  c = edge_removal_lift(kK3, {0, 1}, {0}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1}));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 2);

  // C4 - {0,1} is the path 1-2-3-0.
  const Graph p4 = remove_edge(kC4, {0, 1}).graph;
  const DominationResult opt = coeven_domination_number(p4);
  EXPECT_EQ(opt.value, naive::coeven_optimum(p4).value);
  c = edge_removal_lift(kC4, {0, 1}, opt.certificate, Direction::Backward);
  EXPECT_EQ(c.vertex_set, (opt.certificate | VertexSet{0, 1}));
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(reference_valid(kC4, c.vertex_set));
  EXPECT_EQ(c.claimed_bound, opt.value + 2);
  EXPECT_TRUE(c.within_bound);

  EXPECT_THROW(edge_removal_lift(kC4, {0, 1}, {0, 3}, Direction::Backward), InvalidCertificate);
}

TEST(VertexContractionLift, Examples) {
  CandidateCert c = vertex_contraction_lift(kC4, 0, {0, 2}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1, 2}));  // all of K3
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 3);
  EXPECT_EQ(c.proof_case, ProofCase::EvenDegreeInside);

  c = vertex_contraction_lift(kP3, 1, {0, 2}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1}));  // both vertices of K2
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 3);

  c = vertex_contraction_lift(kK3, 0, {0, 1}, Direction::Backward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 5);
}

TEST(EdgeContractionLift, Examples) {
  CandidateCert c = edge_contraction_lift(kC4, {0, 1}, {0, 2}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1}));  // w = 0, old 2 -> 1
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 2);
  EXPECT_EQ(c.proof_case, ProofCase::OneEndpoint);

  // The construction breaks on a triangle: the common neighbour ends up with degree 1.
  c = edge_contraction_lift(kK3, {0, 1}, {0}, Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0}));
  EXPECT_FALSE(c.valid);
  EXPECT_FALSE(reference_valid(complete_graph(2), c.vertex_set));
  EXPECT_TRUE(c.within_bound);

  const Graph ds = double_star(2, 2);
  c = edge_contraction_lift(ds, {0, 1}, ds.vertices(), Direction::Forward);
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.claimed_bound, 5);
  EXPECT_EQ(c.proof_case, ProofCase::BothEndpoints);

  c = edge_contraction_lift(kC4, {0, 1}, {0}, Direction::Backward);  // {w} in K3
  EXPECT_EQ(c.vertex_set, (VertexSet{0, 1}));
  EXPECT_EQ(c.proof_case, ProofCase::SplitMergedVertex);
  EXPECT_EQ(c.claimed_bound, 3);
}

TEST(Lifts, RejectInvalidCertificates) {
  EXPECT_THROW(vertex_removal_lift(kC4, 0, {0}, Direction::Forward), InvalidCertificate);
  EXPECT_THROW(vertex_removal_lift(kC4, 0, {1}, Direction::Backward), InvalidCertificate);
  EXPECT_THROW(edge_removal_lift(kP3, {0, 1}, {1}, Direction::Forward), InvalidCertificate);
  EXPECT_THROW(edge_removal_lift(kC4, {0, 2}, {0, 2}, Direction::Forward), NotAnEdge);
  EXPECT_THROW(edge_contraction_lift(kC4, {0, 2}, {0, 2}, Direction::Forward), NotAnEdge);
  EXPECT_THROW(vertex_contraction_lift(kC4, 0, {7}, Direction::Forward), InvalidVertex);
  EXPECT_THROW(lift_vertex(kC4, Operation::EdgeRemoval, 0, {0, 2}, Direction::Forward), InvalidQuery);
}

// Every co-even dominating set (not only optimal ones) of every labeled graph
// with n <= 4: the three sound constructions always produce valid candidates
// within their bounds, and every invalid edge-contraction candidate involves
// an edge whose endpoints share a neighbour.
TEST(LiftProperties, SoundConstructionsOnEveryCertificate) {
  for (int n = 1; n <= 4; ++n) {
    const LabeledEnumeration all(n);
    for (std::uint64_t mask = 0; mask < all.count(); ++mask) {
      const Graph g = all[mask];
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet d(bits);
        if (!is_coeven_dominating_set(g, d)) continue;
        for (VertexId v = 0; v < n; ++v) {
          for (const CandidateCert& c : {vertex_removal_lift(g, v, d, Direction::Forward),
                                         vertex_contraction_lift(g, v, d, Direction::Forward)}) {
            EXPECT_TRUE(c.valid);
            EXPECT_TRUE(c.within_bound);
          }
        }
        for (const EdgePair& e : g.edges()) {
          const CandidateCert c = edge_removal_lift(g, e, d, Direction::Forward);
          EXPECT_TRUE(c.valid);
          EXPECT_TRUE(c.within_bound);
          const CandidateCert k = edge_contraction_lift(g, e, d, Direction::Forward);
          EXPECT_TRUE(k.within_bound);
          if (!k.valid) { EXPECT_TRUE(g.neighborhood(e.u).intersects(g.neighborhood(e.v))); }
        }
      }
      // Backward: every certificate on the modified graph.
      for (VertexId v = 0; v < n; ++v) {
        for (Operation op : {Operation::VertexRemoval, Operation::VertexContraction}) {
          const Graph h = apply_vertex_transform(g, op, v).graph;
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.order()); ++bits) {
            if (!is_coeven_dominating_set(h, VertexSet(bits))) continue;
            const CandidateCert c = lift_vertex(g, op, v, VertexSet(bits), Direction::Backward);
            EXPECT_TRUE(c.valid);
            EXPECT_TRUE(c.within_bound);
          }
        }
      }
      for (const EdgePair& e : g.edges()) {
        for (Operation op : {Operation::EdgeRemoval, Operation::EdgeContraction}) {
          const Graph h = apply_edge_transform(g, op, e).graph;
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.order()); ++bits) {
            if (!is_coeven_dominating_set(h, VertexSet(bits))) continue;
            const CandidateCert c = lift_edge(g, op, e, VertexSet(bits), Direction::Backward);
            EXPECT_TRUE(c.within_bound);
            if (op == Operation::EdgeRemoval) { EXPECT_TRUE(c.valid); }
            if (!c.valid) { EXPECT_TRUE(g.neighborhood(e.u).intersects(g.neighborhood(e.v))); }
          }
        }
      }
    }
  }
}

TEST(LiftProperties, ValidCandidatesRederiveTheBounds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp(9, 0.45, seed);
    const DominationResult opt = coeven_domination_number(g);
    for (VertexId v = 0; v < g.order(); ++v) {
      const CandidateCert c = vertex_contraction_lift(g, v, opt.certificate, Direction::Forward);
      ASSERT_TRUE(c.valid);
      const int target = coeven_domination_number(contract_vertex(g, v).graph).value;
      EXPECT_LE(target, c.vertex_set.size());
      EXPECT_LE(c.vertex_set.size(), c.claimed_bound);
    }
  }
}

}  // namespace
}  // namespace coeven
