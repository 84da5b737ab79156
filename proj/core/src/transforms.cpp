#include "coeven/transforms.hpp"

#include <array>
#include <utility>

namespace coeven {

namespace {

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

// Drops vertex `gone` from `rows` and packs the remaining ids densely.
TransformResult drop_and_pack(std::vector<std::uint64_t> rows, VertexId gone) {
  const int n = static_cast<int>(rows.size());
  const std::uint64_t low = bit(gone) - 1;
  std::vector<std::uint64_t> packed;
  packed.reserve(rows.size() - 1);
  std::vector<std::optional<VertexId>> mapping(rows.size());
  for (VertexId x = 0; x < n; ++x) {
    if (x == gone) continue;
    const std::uint64_t r = rows[static_cast<std::size_t>(x)] & ~bit(gone);
    packed.push_back((r & low) | ((r & ~low) >> 1));
    mapping[static_cast<std::size_t>(x)] = x < gone ? x : x - 1;
  }
  return {Graph::from_rows(std::move(packed)), std::move(mapping), std::nullopt};
}

}  // namespace

VertexSet TransformResult::map_forward(VertexSet old_ids) const {
  VertexSet out;
  for (VertexId v : old_ids) {
    if (static_cast<std::size_t>(v) < mapping.size() && mapping[static_cast<std::size_t>(v)]) {
      out.insert(*mapping[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

VertexSet TransformResult::map_backward(VertexSet new_ids) const {
  VertexSet out;
  for (std::size_t v = 0; v < mapping.size(); ++v) {
    if (mapping[v] && new_ids.contains(*mapping[v])) out.insert(static_cast<VertexId>(v));
  }
  return out;
}

TransformResult remove_vertex(const Graph& g, VertexId v) {
  g.check_vertex(v);
  return drop_and_pack({g.rows().begin(), g.rows().end()}, v);
}

TransformResult remove_edge(const Graph& g, EdgePair e) {
  g.check_edge(e);
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  rows[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
  rows[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
  std::vector<std::optional<VertexId>> mapping(rows.size());
  for (VertexId x = 0; x < g.order(); ++x) mapping[static_cast<std::size_t>(x)] = x;
  return {Graph::from_rows(std::move(rows)), std::move(mapping), std::nullopt};
}

TransformResult contract_vertex(const Graph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  const std::uint64_t nbrs = g.row(v);
  for (VertexId a : VertexSet(nbrs)) rows[static_cast<std::size_t>(a)] |= nbrs & ~bit(a);
  return drop_and_pack(std::move(rows), v);
}

TransformResult contract_edge(const Graph& g, EdgePair e) {
  g.check_edge(e);
  const VertexId w = e.u;
  const VertexId gone = e.v;
  std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
  const std::uint64_t merged = (g.row(e.u) | g.row(e.v)) & ~bit(e.u) & ~bit(e.v);
  rows[static_cast<std::size_t>(w)] = merged;
  for (VertexId x : VertexSet(merged)) rows[static_cast<std::size_t>(x)] |= bit(w);
  TransformResult out = drop_and_pack(std::move(rows), gone);
  out.mapping[static_cast<std::size_t>(gone)] = w;
  out.merged_into = w;
  return out;
}

namespace {

constexpr std::array<std::pair<Operation, std::string_view>, 10> kOperationNames{{
    {Operation::VertexRemoval, "vertex-removal"},
    {Operation::EdgeRemoval, "edge-removal"},
    {Operation::VertexContraction, "vertex-contraction"},
    {Operation::EdgeContraction, "edge-contraction"},
    {Operation::VertexCorollary, "vertex-corollary"},
    {Operation::EdgeCorollary, "edge-corollary"},
    {Operation::Additivity, "additivity"},
    {Operation::DominationOrder, "domination-order"},
    {Operation::ForcedInclusion, "forced-inclusion"},
    {Operation::OutsideDegree, "outside-degree"},
}};

}  // namespace

std::string_view to_string(Operation op) {
  for (const auto& [value, name] : kOperationNames) {
    if (value == op) return name;
  }
  return "unknown";
}

std::optional<Operation> parse_operation(std::string_view name) {
  for (const auto& [value, label] : kOperationNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

bool is_transform(Operation op) {
  return op == Operation::VertexRemoval || op == Operation::EdgeRemoval ||
         op == Operation::VertexContraction || op == Operation::EdgeContraction;
}

bool acts_on_vertex(Operation op) {
  return op == Operation::VertexRemoval || op == Operation::VertexContraction ||
         op == Operation::VertexCorollary;
}

bool acts_on_edge(Operation op) {
  return op == Operation::EdgeRemoval || op == Operation::EdgeContraction ||
         op == Operation::EdgeCorollary;
}

TransformResult apply_vertex_transform(const Graph& g, Operation op, VertexId v) {
  switch (op) {
    case Operation::VertexRemoval:
      return remove_vertex(g, v);
    case Operation::VertexContraction:
      return contract_vertex(g, v);
    default:
      throw InvalidQuery(std::string(to_string(op)) + " is not a vertex transform");
  }
}

TransformResult apply_edge_transform(const Graph& g, Operation op, EdgePair e) {
  switch (op) {
    case Operation::EdgeRemoval:
      return remove_edge(g, e);
    case Operation::EdgeContraction:
      return contract_edge(g, e);
    default:
      throw InvalidQuery(std::string(to_string(op)) + " is not an edge transform");
  }
}

}  // namespace coeven
