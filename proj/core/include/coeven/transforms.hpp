#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

/// Result of one of the four graph modifications. `mapping[old]` is the id of
/// the old vertex in `graph`, or nullopt when it was deleted.
struct TransformResult {
  Graph graph;
  std::vector<std::optional<VertexId>> mapping;
  /// Id of the merged vertex; set by contract_edge only.
  std::optional<VertexId> merged_into;

  /// Image of a set of old ids; deleted vertices are dropped.
  VertexSet map_forward(VertexSet old_ids) const;
  /// All old ids whose image lies in `new_ids`.
  VertexSet map_backward(VertexSet new_ids) const;
};

/// G - v. Ids above v shift down by one.
TransformResult remove_vertex(const Graph& g, VertexId v);

/// G - e. Vertex ids are unchanged.
TransformResult remove_edge(const Graph& g, EdgePair e);

/// G / v: delete v and make its open neighbourhood a clique.
TransformResult contract_vertex(const Graph& g, VertexId v);

/// G / e: merge u and v into w = min(u, v); loops dropped, parallels merged.
/// Ids above max(u, v) shift down by one.
TransformResult contract_edge(const Graph& g, EdgePair e);

enum class Operation {
  VertexRemoval,
  EdgeRemoval,
  VertexContraction,
  EdgeContraction,
  VertexCorollary,
  EdgeCorollary,
  Additivity,
  DominationOrder,
  ForcedInclusion,
  OutsideDegree,
};

std::string_view to_string(Operation op);
std::optional<Operation> parse_operation(std::string_view name);

/// True for the four operations that take a vertex or an edge and produce a new graph.
bool is_transform(Operation op);
bool acts_on_vertex(Operation op);
bool acts_on_edge(Operation op);

TransformResult apply_vertex_transform(const Graph& g, Operation op, VertexId v);
TransformResult apply_edge_transform(const Graph& g, Operation op, EdgePair e);

}  // namespace coeven
