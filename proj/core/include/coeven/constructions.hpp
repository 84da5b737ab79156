#pragma once

#include <string_view>

#include "coeven/graph.hpp"
#include "coeven/transforms.hpp"

namespace coeven {

// Certificate lifting: turn a co-even dominating set on one side of a graph
// modification into the candidate set the bound's proof builds on the other
// side. The candidate is checked, never assumed, to be co-even dominating.

enum class Direction {
  /// Certificate on G, candidate on the modified graph.
  Forward,
  /// Certificate on the modified graph, candidate on G.
  Backward,
};

std::string_view to_string(Direction d);

enum class ProofCase {
  // vertex removal / vertex contraction, forward
  EvenDegreeOutside,  // deg(v) even, v not in D
  EvenDegreeInside,   // deg(v) even, v in D
  OddDegree,          // deg(v) odd (v forced into D)
  // edge removal / edge contraction, forward
  NeitherEndpoint,
  OneEndpoint,
  BothEndpoints,
  // backward constructions have a single case
  AddClosedNeighbourhood,
  AddEndpoints,
  SplitMergedVertex,
};

std::string_view to_string(ProofCase c);

struct CandidateCert {
  /// In the target graph's labels.
  VertexSet vertex_set;
  bool valid = false;
  int claimed_bound = 0;
  bool within_bound = false;
  ProofCase proof_case = ProofCase::NeitherEndpoint;
};

CandidateCert vertex_removal_lift(const Graph& g, VertexId v, VertexSet d, Direction dir);
CandidateCert edge_removal_lift(const Graph& g, EdgePair e, VertexSet d, Direction dir);
CandidateCert vertex_contraction_lift(const Graph& g, VertexId v, VertexSet d, Direction dir);

/// The forward construction is not sound in general: when u and v share
/// neighbours their parity flips in G/e, and `valid` comes back false.
CandidateCert edge_contraction_lift(const Graph& g, EdgePair e, VertexSet d, Direction dir);

/// Dispatches on a transform operation.
CandidateCert lift_vertex(const Graph& g, Operation op, VertexId v, VertexSet d, Direction dir);
CandidateCert lift_edge(const Graph& g, Operation op, EdgePair e, VertexSet d, Direction dir);

}  // namespace coeven
