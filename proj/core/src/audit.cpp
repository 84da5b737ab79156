#include "coeven/audit.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "coeven/domination.hpp"
#include "coeven/graph6.hpp"
#include "coeven/parallel.hpp"

namespace coeven {

namespace {

int coeven_value(const Graph& g) { return coeven_domination_number(g).value; }

int common_neighbour_count(const Graph& g, EdgePair e) {
  return std::popcount(g.row(e.u) & g.row(e.v));
}

void set_verdicts(BoundCheck& c) {
  c.holds_lower = !c.lower || *c.lower <= c.value;
  c.holds_upper = !c.upper || c.value <= *c.upper;
}

BoundCheck transform_check(const Graph& g, int base, const Element& element, Operation op, int transformed) {
  BoundCheck c;
  c.operation = op;
  c.element = element;
  c.base_value = base;
  c.value = transformed;
  switch (op) {
    case Operation::VertexRemoval:
    case Operation::VertexContraction: {
      const int deg = g.degree(std::get<VertexId>(element));
      c.degree = deg;
      c.lower = Half::whole(base - deg - 1);
      c.upper = Half::whole(base + deg - 1);
      break;
    }
    case Operation::EdgeRemoval:
      c.common_neighbours = common_neighbour_count(g, std::get<EdgePair>(element));
      c.lower = Half::whole(base - 2);
      c.upper = Half::whole(base + 2);
      break;
    case Operation::EdgeContraction:
      c.common_neighbours = common_neighbour_count(g, std::get<EdgePair>(element));
      c.lower = Half::whole(base - 2);
      c.upper = Half::whole(base);
      break;
    default:
      throw InvalidQuery(std::string(to_string(op)) + " is not a graph transform");
  }
  set_verdicts(c);
  return c;
}

BoundCheck corollary_check(const Graph& g, int base, const Element& element, int removed, int contracted) {
  BoundCheck c;
  c.element = element;
  c.base_value = base;
  c.value = base;
  c.removed_value = removed;
  c.contracted_value = contracted;
  // Bounds are kept as exact halves of (removed + contracted) +/- offsets.
  const std::int64_t sum = static_cast<std::int64_t>(removed) + contracted;
  if (std::holds_alternative<VertexId>(element)) {
    const int deg = g.degree(std::get<VertexId>(element));
    c.operation = Operation::VertexCorollary;
    c.degree = deg;
    c.lower = Half::halves(sum - 2 * deg + 2);
    c.upper = Half::halves(sum + 2 * deg + 2);
  } else {
    c.operation = Operation::EdgeCorollary;
    c.common_neighbours = common_neighbour_count(g, std::get<EdgePair>(element));
    c.lower = Half::halves(sum - 2);
    c.upper = Half::halves(sum + 4);
  }
  set_verdicts(c);
  return c;
}

TransformResult apply(const Graph& g, const Element& element, Operation op) {
  if (std::holds_alternative<VertexId>(element)) {
    if (!acts_on_vertex(op)) throw InvalidQuery(std::string(to_string(op)) + " needs an edge element");
    return apply_vertex_transform(g, op, std::get<VertexId>(element));
  }
  if (std::holds_alternative<EdgePair>(element)) {
    if (!acts_on_edge(op)) throw InvalidQuery(std::string(to_string(op)) + " needs a vertex element");
    return apply_edge_transform(g, op, std::get<EdgePair>(element));
  }
  throw InvalidQuery(std::string(to_string(op)) + " needs a vertex or edge element");
}

// Removal and contraction values for one element, shared by the window and
// corollary checks.
struct ElementValues {
  int removed;
  int contracted;
};

ElementValues element_values(const Graph& g, const Element& element) {
  if (std::holds_alternative<VertexId>(element)) {
    const VertexId v = std::get<VertexId>(element);
    return {coeven_value(remove_vertex(g, v).graph), coeven_value(contract_vertex(g, v).graph)};
  }
  if (std::holds_alternative<EdgePair>(element)) {
    const EdgePair e = std::get<EdgePair>(element);
    return {coeven_value(remove_edge(g, e).graph), coeven_value(contract_edge(g, e).graph)};
  }
  throw InvalidQuery("corollaries need a vertex or edge element");
}

void validate_element(const Graph& g, const Element& element) {
  if (std::holds_alternative<VertexId>(element)) g.check_vertex(std::get<VertexId>(element));
  if (std::holds_alternative<EdgePair>(element)) g.check_edge(std::get<EdgePair>(element));
}

std::string graph_key(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return emit_graph6(g);
  std::string key;
  for (std::uint64_t r : g.rows()) key += std::to_string(r) + ";";
  return key;
}

WitnessRecord make_record(const Graph& g, const BoundCheck& c, Relation r, std::size_t line) {
  WitnessRecord w;
  w.graph = g;
  w.element = c.element;
  w.operation = c.operation;
  w.relation = r;
  w.base_value = c.base_value;
  w.value = c.value;
  w.degree = c.degree;
  w.common_neighbours = c.common_neighbours;
  w.lower = c.lower;
  w.upper = c.upper;
  w.line = line;
  return w;
}

}  // namespace

std::string to_string(const Element& e) {
  if (std::holds_alternative<VertexId>(e)) return std::to_string(std::get<VertexId>(e));
  if (std::holds_alternative<EdgePair>(e)) return to_string(std::get<EdgePair>(e));
  return "-";
}

std::string Half::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  const std::int64_t whole = twice_ / 2;
  // -1/2 truncates to 0, so the sign is spelled out.
  if (twice_ < 0 && whole == 0) return "-0.5";
  return std::to_string(whole) + ".5";
}

BoundCheck check_operation_bounds(const Graph& g, const Element& element, Operation op) {
  validate_element(g, element);
  const TransformResult t = apply(g, element, op);
  return transform_check(g, coeven_value(g), element, op, coeven_value(t.graph));
}

BoundCheck check_corollaries(const Graph& g, const Element& element) {
  validate_element(g, element);
  const ElementValues vals = element_values(g, element);
  return corollary_check(g, coeven_value(g), element, vals.removed, vals.contracted);
}

BoundCheck check_additivity(const Graph& g) {
  BoundCheck c;
  c.operation = Operation::Additivity;
  c.base_value = coeven_domination_number(g, SolveOptions{.decompose = false}).value;
  int sum = 0;
  for (VertexSet comp : connected_components(g)) sum += coeven_value(induced_subgraph(g, comp).graph);
  c.value = sum;
  c.lower = Half::whole(c.base_value);
  c.upper = Half::whole(c.base_value);
  set_verdicts(c);
  return c;
}

std::vector<BoundCheck> check_certificate_properties(const Graph& g) {
  const DominationResult coe = coeven_domination_number(g);
  const int gamma = domination_number(g).value;
  std::vector<BoundCheck> out;

  BoundCheck order;
  order.operation = Operation::DominationOrder;
  order.base_value = coe.value;
  order.value = coe.value;
  order.lower = Half::whole(gamma);
  order.upper = Half::whole(g.order());
  set_verdicts(order);
  out.push_back(order);

  BoundCheck forced;
  forced.operation = Operation::ForcedInclusion;
  forced.base_value = coe.value;
  forced.value = (forced_vertices(g) - coe.certificate).size();
  forced.lower = Half::whole(0);
  forced.upper = Half::whole(0);
  set_verdicts(forced);
  out.push_back(forced);

  BoundCheck outside;
  outside.operation = Operation::OutsideDegree;
  outside.base_value = coe.value;
  for (VertexId v : g.vertices() - coe.certificate) {
    const int d = g.degree(v);
    if (d < 2 || d % 2 != 0) ++outside.value;
  }
  outside.lower = Half::whole(0);
  outside.upper = Half::whole(0);
  set_verdicts(outside);
  out.push_back(outside);
  return out;
}

std::vector<BoundCheck> audit_graph(const Graph& g, const AuditOptions& options) {
  std::vector<BoundCheck> out;
  const int base = coeven_value(g);

  const auto per_element = [&](const Element& element, Operation removal, Operation contraction,
                               Operation corollary) {
    const bool need_removal = options.wants(removal) || options.wants(corollary);
    const bool need_contraction = options.wants(contraction) || options.wants(corollary);
    if (!need_removal && !need_contraction) return;
    const TransformResult removed = need_removal ? apply(g, element, removal) : TransformResult{};
    const TransformResult contracted = need_contraction ? apply(g, element, contraction) : TransformResult{};
    const int a = need_removal ? coeven_value(removed.graph) : 0;
    const int b = need_contraction ? coeven_value(contracted.graph) : 0;
    if (options.wants(removal)) out.push_back(transform_check(g, base, element, removal, a));
    if (options.wants(contraction)) out.push_back(transform_check(g, base, element, contraction, b));
    if (options.wants(corollary)) out.push_back(corollary_check(g, base, element, a, b));
  };

  for (VertexId v = 0; v < g.order(); ++v) {
    per_element(v, Operation::VertexRemoval, Operation::VertexContraction, Operation::VertexCorollary);
  }
  for (const EdgePair& e : g.edges()) {
    per_element(e, Operation::EdgeRemoval, Operation::EdgeContraction, Operation::EdgeCorollary);
  }
  if (options.wants(Operation::Additivity)) out.push_back(check_additivity(g));
  const bool props = options.wants(Operation::DominationOrder) || options.wants(Operation::ForcedInclusion) ||
                     options.wants(Operation::OutsideDegree);
  if (props) {
    for (BoundCheck& c : check_certificate_properties(g)) {
      if (options.wants(c.operation)) out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

constexpr std::array<std::pair<Relation, std::string_view>, 6> kRelationNames{{
    {Relation::UpperEquality, "upper-equality"},
    {Relation::LowerEquality, "lower-equality"},
    {Relation::MidEquality, "mid-equality"},
    {Relation::UpperViolation, "upper-violation"},
    {Relation::LowerViolation, "lower-violation"},
    {Relation::BaseEquality, "base-equality"},
}};

}  // namespace

std::string_view to_string(Relation r) {
  for (const auto& [value, name] : kRelationNames) {
    if (value == r) return name;
  }
  return "unknown";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (const auto& [value, label] : kRelationNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

bool relation_holds(const BoundCheck& c, Relation relation) {
  switch (relation) {
    case Relation::UpperEquality: return c.upper && *c.upper == c.value;
    case Relation::LowerEquality: return c.lower && *c.lower == c.value;
    case Relation::MidEquality:
      return c.operation == Operation::EdgeContraction && c.value == c.base_value - 1;
    case Relation::BaseEquality: return is_transform(c.operation) && c.value == c.base_value;
    case Relation::UpperViolation: return !c.holds_upper;
    case Relation::LowerViolation: return !c.holds_lower;
  }
  return false;
}

void validate_query(Operation op, Relation relation) {
  const bool corollary = op == Operation::VertexCorollary || op == Operation::EdgeCorollary;
  if (!is_transform(op) && !corollary) {
    throw InvalidQuery(std::string(to_string(op)) + " has no per-element witnesses");
  }
  if (relation == Relation::MidEquality && op != Operation::EdgeContraction) {
    throw InvalidQuery("mid-equality is only defined for edge-contraction");
  }
  if (relation == Relation::BaseEquality && corollary) {
    throw InvalidQuery("base-equality is only defined for the four graph transforms");
  }
}

std::uint64_t AuditSummary::violation_count() const {
  std::uint64_t total = 0;
  for (const auto& [op, t] : tallies) total += t.checked - t.held;
  return total;
}

void AuditSummary::merge(const AuditSummary& other) {
  graphs += other.graphs;
  for (const auto& [op, t] : other.tallies) {
    BoundTally& mine = tallies[op];
    mine.checked += t.checked;
    mine.held += t.held;
    mine.lower_violations += t.lower_violations;
    mine.upper_violations += t.upper_violations;
  }
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  errors.insert(errors.end(), other.errors.begin(), other.errors.end());
  for (const auto& [common, gain] : other.contraction_gain_by_common) {
    auto [it, inserted] = contraction_gain_by_common.emplace(common, gain);
    if (!inserted) it->second = std::max(it->second, gain);
  }
}

void AuditSummary::finalize() {
  const auto key = [](const WitnessRecord& w) {
    return std::make_tuple(w.graph.order(), graph_key(w.graph), w.element, static_cast<int>(w.operation),
                           static_cast<int>(w.relation));
  };
  std::stable_sort(violations.begin(), violations.end(),
                   [&](const WitnessRecord& a, const WitnessRecord& b) { return key(a) < key(b); });
  std::stable_sort(errors.begin(), errors.end());
}

AuditSummary summarize_graph(const Graph& g, const AuditOptions& options, std::vector<BoundCheck>* checks) {
  AuditSummary s;
  s.graphs = 1;
  std::vector<BoundCheck> local = audit_graph(g, options);
  for (const BoundCheck& c : local) {
    BoundTally& t = s.tallies[c.operation];
    ++t.checked;
    if (c.holds()) ++t.held;
    if (!c.holds_lower) {
      ++t.lower_violations;
      s.violations.push_back(make_record(g, c, Relation::LowerViolation, 0));
    }
    if (!c.holds_upper) {
      ++t.upper_violations;
      s.violations.push_back(make_record(g, c, Relation::UpperViolation, 0));
    }
    if (c.operation == Operation::EdgeContraction) {
      const int gain = c.value - c.base_value;
      auto [it, inserted] = s.contraction_gain_by_common.emplace(*c.common_neighbours, gain);
      if (!inserted) it->second = std::max(it->second, gain);
    }
  }
  if (checks != nullptr) *checks = std::move(local);
  return s;
}

AuditSummary audit_corpus(const GraphSource& source, const AuditOptions& options,
                          const std::function<void(const CorpusItem&, const std::vector<BoundCheck>&)>& on_checks) {
  struct Partial {
    AuditSummary summary;
    std::vector<BoundCheck> checks;
  };
  AuditSummary total;
  for_each_ordered<Partial>(
      source, options.jobs,
      [&](const CorpusItem& item) {
        Partial p;
        if (!item.graph) {
          p.summary.errors.emplace_back(item.line, item.error);
          return p;
        }
        try {
          p.summary = summarize_graph(*item.graph, options, on_checks ? &p.checks : nullptr);
          for (WitnessRecord& w : p.summary.violations) w.line = item.line;
        } catch (const Error& e) {
          p.summary = AuditSummary{};
          p.summary.errors.emplace_back(item.line, e.what());
        }
        return p;
      },
      [&](const CorpusItem& item, Partial&& p) {
        if (on_checks && item.graph && p.summary.errors.empty()) on_checks(item, p.checks);
        total.merge(p.summary);
        return true;
      });
  total.finalize();
  return total;
}

std::vector<WitnessRecord> witness_search(const GraphSource& source, Operation op, Relation relation,
                                          std::size_t limit, int jobs) {
  validate_query(op, relation);
  std::vector<WitnessRecord> found;
  for_each_ordered<std::vector<WitnessRecord>>(
      source, jobs,
      [&](const CorpusItem& item) {
        std::vector<WitnessRecord> local;
        if (!item.graph) return local;
        const Graph& g = *item.graph;
        const int base = coeven_value(g);
        const auto consider = [&](const Element& element) {
          BoundCheck c;
          if (is_transform(op)) {
            c = transform_check(g, base, element, op, coeven_value(apply(g, element, op).graph));
          } else {
            const ElementValues vals = element_values(g, element);
            c = corollary_check(g, base, element, vals.removed, vals.contracted);
          }
          if (relation_holds(c, relation)) local.push_back(make_record(g, c, relation, item.line));
        };
        if (acts_on_vertex(op)) {
          for (VertexId v = 0; v < g.order(); ++v) consider(v);
        } else {
          for (const EdgePair& e : g.edges()) consider(e);
        }
        return local;
      },
      [&](const CorpusItem&, std::vector<WitnessRecord>&& local) {
        for (WitnessRecord& w : local) {
          if (limit != 0 && found.size() >= limit) return false;
          found.push_back(std::move(w));
        }
        return limit == 0 || found.size() < limit;
      });
  return found;
}

}  // namespace coeven
