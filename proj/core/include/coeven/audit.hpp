#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coeven/corpus.hpp"
#include "coeven/graph.hpp"
#include "coeven/transforms.hpp"

namespace coeven {

/// A vertex, an edge, or nothing (whole-graph checks).
using Element = std::variant<std::monostate, VertexId, EdgePair>;

std::string to_string(const Element& e);

/// Exact multiple of one half, stored as its double.
class Half {
 public:
  constexpr Half() = default;
  static constexpr Half whole(int v) { return Half(2 * static_cast<std::int64_t>(v)); }
  static constexpr Half halves(std::int64_t twice) { return Half(twice); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;

  friend constexpr auto operator<=>(Half, Half) = default;
  friend constexpr bool operator==(Half, Half) = default;
  friend constexpr bool operator<=(Half a, int b) { return a.twice_ <= 2 * static_cast<std::int64_t>(b); }
  friend constexpr bool operator<=(int a, Half b) { return 2 * static_cast<std::int64_t>(a) <= b.twice_; }
  friend constexpr bool operator==(Half a, int b) { return a.twice_ == 2 * static_cast<std::int64_t>(b); }

 private:
  constexpr explicit Half(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// One evaluated inequality. `value` is the quantity the bounds constrain:
/// the co-even domination number of the modified graph for the four
/// transforms, of G itself for the corollaries and domination-order, the sum
/// over components for additivity, and a violation count (bounded by [0, 0])
/// for forced-inclusion and outside-degree.
struct BoundCheck {
  Operation operation = Operation::VertexRemoval;
  Element element;
  int base_value = 0;  // co-even domination number of G
  int value = 0;
  std::optional<Half> lower;
  std::optional<Half> upper;
  bool holds_lower = true;
  bool holds_upper = true;

  std::optional<int> degree;             // vertex operations
  std::optional<int> common_neighbours;  // edge operations
  std::optional<int> removed_value;      // corollaries: value after removal
  std::optional<int> contracted_value;   // corollaries: value after contraction

  bool holds() const { return holds_lower && holds_upper; }
};

BoundCheck check_operation_bounds(const Graph& g, const Element& element, Operation op);

/// Vertex corollary for a vertex element, edge corollary for an edge element.
BoundCheck check_corollaries(const Graph& g, const Element& element);

BoundCheck check_additivity(const Graph& g);

/// Domination order (gamma <= co-even gamma <= n), forced-vertex inclusion and
/// outside-degree parity, evaluated on the solver's optimal certificate.
std::vector<BoundCheck> check_certificate_properties(const Graph& g);

struct AuditOptions {
  /// Operations to evaluate; empty means all.
  std::set<Operation> operations;
  /// Worker threads for corpus runs.
  int jobs = 1;

  bool wants(Operation op) const { return operations.empty() || operations.contains(op); }
};

/// Per vertex (ascending): removal, contraction, vertex corollary; then per
/// edge (lexicographic): removal, contraction, edge corollary; then additivity
/// and the certificate properties. Filtered by options.operations.
std::vector<BoundCheck> audit_graph(const Graph& g, const AuditOptions& options = {});

enum class Relation {
  UpperEquality,
  LowerEquality,
  MidEquality,
  UpperViolation,
  LowerViolation,
  BaseEquality,
};

std::string_view to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view name);

struct WitnessRecord {
  Graph graph;
  Element element;
  Operation operation = Operation::VertexRemoval;
  Relation relation = Relation::UpperEquality;
  int base_value = 0;
  int value = 0;
  std::optional<int> degree;
  std::optional<int> common_neighbours;
  std::optional<Half> lower;
  std::optional<Half> upper;
  /// Position of the graph in its source stream.
  std::size_t line = 0;
};

/// True when `relation` holds exactly for `check`.
bool relation_holds(const BoundCheck& check, Relation relation);

/// Throws InvalidQuery for combinations without meaning (mid-equality outside
/// edge contraction, base-equality on a corollary, whole-graph operations).
void validate_query(Operation op, Relation relation);

struct BoundTally {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t lower_violations = 0;
  std::uint64_t upper_violations = 0;

  bool operator==(const BoundTally&) const = default;
};

struct AuditSummary {
  std::uint64_t graphs = 0;
  std::map<Operation, BoundTally> tallies;
  /// Sorted by (order, graph6 text, element, operation).
  std::vector<WitnessRecord> violations;
  /// (line, message) for entries that could not be audited.
  std::vector<std::pair<std::size_t, std::string>> errors;
  /// Largest observed gain of edge contraction over G, keyed by the number of
  /// common neighbours of the contracted edge's endpoints.
  std::map<int, int> contraction_gain_by_common;

  std::uint64_t violation_count() const;
  void merge(const AuditSummary& other);
  /// Restores the canonical violation order.
  void finalize();
};

/// Audits one graph into a partial summary, recording every check.
AuditSummary summarize_graph(const Graph& g, const AuditOptions& options, std::vector<BoundCheck>* checks);

/// Streams `source` through audit_graph on options.jobs workers.
/// `on_checks`, when set, receives each graph's checks in source order.
AuditSummary audit_corpus(const GraphSource& source, const AuditOptions& options = {},
                          const std::function<void(const CorpusItem&, const std::vector<BoundCheck>&)>& on_checks = {});

/// First `limit` (0 = unlimited) witnesses of `relation` for `op`, in stream
/// order: graphs as they arrive, then vertices ascending or edges lexicographic.
std::vector<WitnessRecord> witness_search(const GraphSource& source, Operation op, Relation relation,
                                          std::size_t limit, int jobs = 1);

}  // namespace coeven
