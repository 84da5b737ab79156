#include "coeven/constructions.hpp"

#include "coeven/domination.hpp"

namespace coeven {

namespace {

void require_certificate(const Graph& g, VertexSet d, std::string_view where) {
  g.check_set(d);
  if (!is_coeven_dominating_set(g, d)) {
    throw InvalidCertificate(d.to_string() + " is not a co-even dominating set of " + std::string(where));
  }
}

CandidateCert judge(const Graph& target, VertexSet candidate, int bound, ProofCase c) {
  CandidateCert out;
  out.vertex_set = candidate;
  out.valid = is_coeven_dominating_set(target, candidate);
  out.claimed_bound = bound;
  out.within_bound = candidate.size() <= bound;
  out.proof_case = c;
  return out;
}

ProofCase vertex_case(const Graph& g, VertexId v, VertexSet d) {
  if (g.degree(v) % 2 == 1) return ProofCase::OddDegree;
  return d.contains(v) ? ProofCase::EvenDegreeInside : ProofCase::EvenDegreeOutside;
}

// Shared by vertex removal and vertex contraction: both constructions put the
// open neighbourhood in on the way forward and the closed one on the way back.
CandidateCert lift_through_vertex(const Graph& g, VertexId v, VertexSet d, Direction dir,
                                  const TransformResult& t) {
  const int deg = g.degree(v);
  if (dir == Direction::Forward) {
    require_certificate(g, d, "G");
    VertexSet in_g = d | g.neighborhood(v);
    in_g.erase(v);
    return judge(t.graph, t.map_forward(in_g), d.size() + deg - 1, vertex_case(g, v, d));
  }
  require_certificate(t.graph, d, "the modified graph");
  const VertexSet in_g = t.map_backward(d) | g.neighborhood(v, true);
  return judge(g, in_g, d.size() + deg + 1, ProofCase::AddClosedNeighbourhood);
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

std::string_view to_string(ProofCase c) {
  switch (c) {
    case ProofCase::EvenDegreeOutside: return "even-degree-outside";
    case ProofCase::EvenDegreeInside: return "even-degree-inside";
    case ProofCase::OddDegree: return "odd-degree";
    case ProofCase::NeitherEndpoint: return "neither-endpoint";
    case ProofCase::OneEndpoint: return "one-endpoint";
    case ProofCase::BothEndpoints: return "both-endpoints";
    case ProofCase::AddClosedNeighbourhood: return "add-closed-neighbourhood";
    case ProofCase::AddEndpoints: return "add-endpoints";
    case ProofCase::SplitMergedVertex: return "split-merged-vertex";
  }
  return "unknown";
}

CandidateCert vertex_removal_lift(const Graph& g, VertexId v, VertexSet d, Direction dir) {
  return lift_through_vertex(g, v, d, dir, remove_vertex(g, v));
}

CandidateCert vertex_contraction_lift(const Graph& g, VertexId v, VertexSet d, Direction dir) {
  return lift_through_vertex(g, v, d, dir, contract_vertex(g, v));
}

CandidateCert edge_removal_lift(const Graph& g, EdgePair e, VertexSet d, Direction dir) {
  const TransformResult t = remove_edge(g, e);
  const VertexSet ends{e.u, e.v};
  if (dir == Direction::Forward) {
    require_certificate(g, d, "G");
    const int missing = (ends - d).size();
    const ProofCase c = missing == 2   ? ProofCase::NeitherEndpoint
                        : missing == 1 ? ProofCase::OneEndpoint
                                       : ProofCase::BothEndpoints;
    return judge(t.graph, d | ends, d.size() + missing, c);
  }
  require_certificate(t.graph, d, "G - e");
  return judge(g, d | ends, d.size() + 2, ProofCase::AddEndpoints);
}

CandidateCert edge_contraction_lift(const Graph& g, EdgePair e, VertexSet d, Direction dir) {
  const TransformResult t = contract_edge(g, e);
  const VertexId w = *t.merged_into;
  if (dir == Direction::Forward) {
    require_certificate(g, d, "G");
    const VertexSet ends{e.u, e.v};
    const int inside = (d & ends).size();
    if (inside == 0) {
      return judge(t.graph, t.map_forward(d), d.size(), ProofCase::NeitherEndpoint);
    }
    VertexSet image = t.map_forward(d - ends);
    image.insert(w);
    if (inside == 1) return judge(t.graph, image, d.size(), ProofCase::OneEndpoint);
    return judge(t.graph, image, d.size() - 1, ProofCase::BothEndpoints);
  }
  require_certificate(t.graph, d, "G / e");
  VertexSet without_w = d;
  without_w.erase(w);
  const VertexSet in_g = t.map_backward(without_w) | VertexSet{e.u, e.v};
  return judge(g, in_g, d.size() + 2, ProofCase::SplitMergedVertex);
}

CandidateCert lift_vertex(const Graph& g, Operation op, VertexId v, VertexSet d, Direction dir) {
  switch (op) {
    case Operation::VertexRemoval: return vertex_removal_lift(g, v, d, dir);
    case Operation::VertexContraction: return vertex_contraction_lift(g, v, d, dir);
    default: throw InvalidQuery(std::string(to_string(op)) + " has no vertex lift");
  }
}

CandidateCert lift_edge(const Graph& g, Operation op, EdgePair e, VertexSet d, Direction dir) {
  switch (op) {
    case Operation::EdgeRemoval: return edge_removal_lift(g, e, d, dir);
    case Operation::EdgeContraction: return edge_contraction_lift(g, e, d, dir);
    default: throw InvalidQuery(std::string(to_string(op)) + " has no edge lift");
  }
}

}  // namespace coeven
