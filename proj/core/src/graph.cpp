#include "coeven/graph.hpp"

#include <algorithm>
#include <sstream>

namespace coeven {

namespace {

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw UnsupportedSize("graph order " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

EdgePair::EdgePair(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw NotAnEdge("edge endpoints must be distinct, got " + std::to_string(a) + " twice");
  }
}

std::string to_string(const EdgePair& e) {
  return std::to_string(e.u) + "," + std::to_string(e.v);
}

VertexSet::VertexSet(std::initializer_list<VertexId> ids) {
  for (VertexId v : ids) insert(v);
}

VertexSet VertexSet::from_ids(std::span<const VertexId> ids) {
  VertexSet s;
  for (VertexId v : ids) s.insert(v);
  return s;
}

VertexSet VertexSet::range(int n) {
  check_order(n);
  return VertexSet(n == 64 ? ~std::uint64_t{0} : bit(n) - 1);
}

void VertexSet::insert(VertexId v) {
  if (v < 0 || v >= kMaxVertices) throw InvalidVertex("vertex id " + std::to_string(v) + " out of range");
  bits_ |= bit(v);
}

void VertexSet::erase(VertexId v) {
  if (v < 0 || v >= kMaxVertices) return;
  bits_ &= ~bit(v);
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (VertexId v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexId v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  // For equal-size sets the one holding the smallest element of the
  // symmetric difference sorts first.
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  return (a.bits_ & (diff & (~diff + 1))) != 0;
}

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const EdgePair> edges) : Graph(n) {
  for (const EdgePair& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    rows_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    rows_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) : Graph(n) {
  for (auto [a, b] : edges) {
    EdgePair e(a, b);
    check_vertex(e.u);
    check_vertex(e.v);
    rows_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    rows_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t r = rows[static_cast<std::size_t>(v)];
    if ((r & ~all) != 0) throw InvalidVertex("adjacency row " + std::to_string(v) + " references ids >= n");
    if ((r & bit(v)) != 0) throw Error("self-loop at vertex " + std::to_string(v));
    for (VertexId u : VertexSet(r)) {
      if ((rows[static_cast<std::size_t>(u)] & bit(v)) == 0) {
        throw Error("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
      }
    }
  }
  return Graph(std::move(rows), 0);
}

int Graph::size() const noexcept {
  int twice = 0;
  for (std::uint64_t r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order()) {
    throw InvalidVertex("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order()));
  }
}

void Graph::check_edge(EdgePair e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  if (!adjacent(e.u, e.v)) throw NotAnEdge("{" + coeven::to_string(e) + "} is not an edge");
}

void Graph::check_set(VertexSet s) const {
  if (!vertices().includes(s)) {
    throw InvalidVertex("vertex set " + s.to_string() + " not contained in graph of order " +
                        std::to_string(order()));
  }
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return std::popcount(row(v));
}

VertexSet Graph::neighborhood(VertexId v, bool closed) const {
  check_vertex(v);
  return VertexSet(closed ? row(v) | bit(v) : row(v));
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u) & bit(v)) != 0;
}

bool Graph::has_edge(EdgePair e) const {
  if (e.u < 0 || e.v >= order()) return false;
  return (row(e.u) & bit(e.v)) != 0;
}

std::vector<EdgePair> Graph::edges() const {
  std::vector<EdgePair> out;
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : VertexSet(row(u) & ~((bit(u) << 1) - 1))) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t unseen = g.vertices().bits();
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (VertexId v : VertexSet(frontier)) next |= g.row(v);
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(comp);
    unseen &= ~comp;
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  g.check_set(keep);
  std::vector<std::optional<VertexId>> mapping(static_cast<std::size_t>(g.order()));
  VertexId next = 0;
  for (VertexId v : keep) mapping[static_cast<std::size_t>(v)] = next++;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(next), 0);
  for (VertexId v : keep) {
    std::uint64_t r = 0;
    for (VertexId u : VertexSet(g.row(v) & keep.bits())) r |= bit(*mapping[static_cast<std::size_t>(u)]);
    rows[static_cast<std::size_t>(*mapping[static_cast<std::size_t>(v)])] = r;
  }
  return {Graph::from_rows(std::move(rows)), std::move(mapping)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  check_order(shift + b.order());
  std::vector<std::uint64_t> rows(a.rows().begin(), a.rows().end());
  for (std::uint64_t r : b.rows()) rows.push_back(r << shift);
  return Graph::from_rows(std::move(rows));
}

}  // namespace coeven
