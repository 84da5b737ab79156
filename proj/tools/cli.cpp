#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coeven/audit.hpp"
#include "coeven/constructions.hpp"
#include "coeven/corpus.hpp"
#include "coeven/domination.hpp"
#include "coeven/generators.hpp"
#include "coeven/graph6.hpp"
#include "coeven/parallel.hpp"
#include "coeven/transforms.hpp"

namespace coeven::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    out.push_back(value);
  }
  return out;
}

EdgePair parse_edge(const std::string& text) {
  const std::vector<int> ends = parse_int_list(text, "--edge");
  if (ends.size() != 2) throw UsageError("--edge expects 'u,v', got '" + text + "'");
  return EdgePair(ends[0], ends[1]);
}

Operation parse_op(const std::string& name) {
  auto op = parse_operation(name);
  if (!op) throw UsageError("unknown operation '" + name + "'");
  return *op;
}

json set_json(VertexSet s) { return s.to_vector(); }

json element_json(const Element& e) {
  if (std::holds_alternative<VertexId>(e)) return std::get<VertexId>(e);
  if (std::holds_alternative<EdgePair>(e)) {
    const EdgePair& p = std::get<EdgePair>(e);
    return json::array({p.u, p.v});
  }
  return nullptr;
}

json half_json(const std::optional<Half>& h) {
  if (!h) return nullptr;
  if (h->is_integer()) return h->twice() / 2;
  return h->to_double();
}

std::string graph_text(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? emit_graph6(g) : std::string();
}

json check_json(const BoundCheck& c) {
  json j;
  j["op"] = to_string(c.operation);
  j["element"] = element_json(c.element);
  j["base"] = c.base_value;
  j["value"] = c.value;
  j["lower"] = half_json(c.lower);
  j["upper"] = half_json(c.upper);
  j["holds_lower"] = c.holds_lower;
  j["holds_upper"] = c.holds_upper;
  if (c.degree) j["degree"] = *c.degree;
  if (c.common_neighbours) j["common_neighbours"] = *c.common_neighbours;
  if (c.removed_value) j["removed"] = *c.removed_value;
  if (c.contracted_value) j["contracted"] = *c.contracted_value;
  return j;
}

json witness_json(const WitnessRecord& w, const char* type) {
  json j;
  j["type"] = type;
  j["line"] = w.line;
  j["graph6"] = graph_text(w.graph);
  j["n"] = w.graph.order();
  j["op"] = to_string(w.operation);
  j["relation"] = to_string(w.relation);
  j["element"] = element_json(w.element);
  j["base"] = w.base_value;
  j["value"] = w.value;
  j["lower"] = half_json(w.lower);
  j["upper"] = half_json(w.upper);
  if (w.degree) j["degree"] = *w.degree;
  if (w.common_neighbours) j["common_neighbours"] = *w.common_neighbours;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Owns whatever the source reads from (file streams, parsed inline graphs).
struct InputHandle {
  std::unique_ptr<std::ifstream> file;
  GraphSource source;
};

GraphSource inline_source(const std::vector<std::string>& texts) {
  auto items = std::make_shared<std::vector<CorpusItem>>();
  for (std::size_t i = 0; i < texts.size(); ++i) {
    CorpusItem item;
    item.line = i + 1;
    try {
      item.graph = parse_graph6(texts[i]);
    } catch (const Error& e) {
      item.error = e.what();
    }
    items->push_back(std::move(item));
  }
  auto at = std::make_shared<std::size_t>(0);
  return [items, at]() -> std::optional<CorpusItem> {
    if (*at >= items->size()) return std::nullopt;
    return (*items)[(*at)++];
  };
}

GraphSource generator_source(const RunConfig& c) {
  if (c.n < 0) throw UsageError("--model requires --n");
  if (c.model == "all") return source_from_enumeration(c.up_to ? 0 : c.n, c.n);
  if (c.model == "gnp") return source_from_gnp(c.n, c.p, c.seed, c.count);
  throw UsageError("unknown --model '" + c.model + "' (expected all or gnp)");
}

InputHandle open_input(const RunConfig& c, std::istream& in) {
  InputHandle h;
  const int chosen = (c.graphs.empty() ? 0 : 1) + (c.model.empty() ? 0 : 1) + (c.input.empty() ? 0 : 1);
  if (chosen > 1) throw UsageError("use only one of --input, --graph, --model");
  if (!c.graphs.empty()) {
    h.source = inline_source(c.graphs);
  } else if (!c.model.empty()) {
    h.source = generator_source(c);
  } else if (!c.input.empty() && c.input != "-") {
    h.file = std::make_unique<std::ifstream>(c.input);
    if (!*h.file) throw UsageError("cannot open input file '" + c.input + "'");
    h.source = source_from_graph6(*h.file);
  } else if (c.families) {
    h.source = source_from_graphs({});
  } else {
    h.source = source_from_graph6(in);
  }
  if (c.families) {
    std::vector<Graph> extra;
    for (const NamedGraph& f : named_families()) extra.push_back(f.graph);
    h.source = source_concat({std::move(h.source), source_from_graphs(std::move(extra))});
  }
  // Enforce the solver cap per entry.
  const int cap = c.cap;
  h.source = [inner = std::move(h.source), cap]() -> std::optional<CorpusItem> {
    auto item = inner();
    if (item && item->graph && item->graph->order() > cap) {
      item->error = "graph order " + std::to_string(item->graph->order()) + " exceeds --cap " + std::to_string(cap);
      item->graph.reset();
    }
    return item;
  };
  return h;
}

json error_json(std::size_t line, const std::string& message) {
  json j;
  j["type"] = "error";
  j["line"] = line;
  j["error"] = message;
  return j;
}

// Runs `per_graph` over the input in order; errors become error lines.
template <typename PerGraph>
int for_each_graph(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err, PerGraph per_graph) {
  InputHandle input = open_input(c, in);
  int status = kClean;
  struct Outcome {
    std::vector<json> lines;
    std::string error;
  };
  for_each_ordered<Outcome>(
      input.source, c.jobs,
      [&](const CorpusItem& item) {
        Outcome o;
        if (!item.graph) {
          o.error = item.error;
          return o;
        }
        try {
          o.lines = per_graph(item);
        } catch (const Error& e) {
          o.error = e.what();
        }
        return o;
      },
      [&](const CorpusItem& item, Outcome&& o) {
        if (!o.error.empty()) {
          err << "line " << item.line << ": " << o.error << '\n';
          emit(out, error_json(item.line, o.error));
          status = kError;
        }
        for (const json& j : o.lines) emit(out, j);
        return true;
      });
  return status;
}

json graph_header(const CorpusItem& item) {
  json j;
  j["line"] = item.line;
  j["graph6"] = graph_text(*item.graph);
  if (item.seed) j["seed"] = *item.seed;
  return j;
}

int cmd_solve(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_graph(c, in, out, err, [&](const CorpusItem& item) {
    const Graph& g = *item.graph;
    const DominationResult coe = c.oracle ? coeven_brute_force(g) : coeven_domination_number(g);
    const DominationResult dom = c.oracle ? domination_brute_force(g) : domination_number(g);
    json j = graph_header(item);
    j["n"] = g.order();
    j["m"] = g.size();
    j["gamma"] = dom.value;
    j["gamma_coe"] = coe.value;
    j["certificate"] = set_json(coe.certificate);
    j["gamma_certificate"] = set_json(dom.certificate);
    j["forced"] = set_json(forced_vertices(g));
    j["explored"] = coe.explored;
    return std::vector<json>{j};
  });
}

struct Selection {
  Operation op;
  Element element;
};

Selection select_element(const RunConfig& c) {
  if (c.op.empty()) throw UsageError("--op is required");
  const Operation op = parse_op(c.op);
  if (!is_transform(op)) throw UsageError("--op must be one of the four graph transforms");
  if (acts_on_vertex(op)) {
    if (!c.vertex) throw UsageError(c.op + " needs --vertex");
    return {op, *c.vertex};
  }
  if (c.edge.empty()) throw UsageError(c.op + " needs --edge u,v");
  return {op, parse_edge(c.edge)};
}

TransformResult apply_selection(const Graph& g, const Selection& s) {
  if (std::holds_alternative<VertexId>(s.element)) {
    return apply_vertex_transform(g, s.op, std::get<VertexId>(s.element));
  }
  return apply_edge_transform(g, s.op, std::get<EdgePair>(s.element));
}

int cmd_transform(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const Selection sel = select_element(c);
  return for_each_graph(c, in, out, err, [&](const CorpusItem& item) {
    const TransformResult t = apply_selection(*item.graph, sel);
    json j = graph_header(item);
    j["op"] = to_string(sel.op);
    j["element"] = element_json(sel.element);
    j["result"] = graph_text(t.graph);
    j["n"] = t.graph.order();
    j["m"] = t.graph.size();
    json mapping = json::array();
    for (const auto& m : t.mapping) mapping.push_back(m ? json(*m) : json(nullptr));
    j["mapping"] = mapping;
    j["merged_into"] = t.merged_into ? json(*t.merged_into) : json(nullptr);
    return std::vector<json>{j};
  });
}

int cmd_lift(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const Selection sel = select_element(c);
  Direction dir;
  if (c.direction == "forward") {
    dir = Direction::Forward;
  } else if (c.direction == "backward") {
    dir = Direction::Backward;
  } else {
    throw UsageError("--direction must be forward or backward");
  }
  std::optional<VertexSet> given;
  if (!c.set.empty()) given = VertexSet::from_ids(parse_int_list(c.set, "--set"));

  return for_each_graph(c, in, out, err, [&](const CorpusItem& item) {
    const Graph& g = *item.graph;
    const TransformResult t = apply_selection(g, sel);
    // Without --set the solver's optimal certificate on the source side is lifted.
    const VertexSet d = given ? *given
                              : coeven_domination_number(dir == Direction::Forward ? g : t.graph).certificate;
    const CandidateCert cert = std::holds_alternative<VertexId>(sel.element)
                                   ? lift_vertex(g, sel.op, std::get<VertexId>(sel.element), d, dir)
                                   : lift_edge(g, sel.op, std::get<EdgePair>(sel.element), d, dir);
    json j = graph_header(item);
    j["op"] = to_string(sel.op);
    j["element"] = element_json(sel.element);
    j["direction"] = to_string(dir);
    j["target_graph6"] = graph_text(dir == Direction::Forward ? t.graph : g);
    j["input_set"] = set_json(d);
    j["candidate"] = set_json(cert.vertex_set);
    j["valid"] = cert.valid;
    j["claimed_bound"] = cert.claimed_bound;
    j["within_bound"] = cert.within_bound;
    j["proof_case"] = to_string(cert.proof_case);
    return std::vector<json>{j};
  });
}

int cmd_audit(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  AuditOptions options;
  options.jobs = c.jobs;
  if (!c.op.empty()) {
    std::stringstream ss(c.op);
    std::string name;
    while (std::getline(ss, name, ',')) options.operations.insert(parse_op(name));
  }
  InputHandle input = open_input(c, in);
  const AuditSummary summary = audit_corpus(
      input.source, options, [&](const CorpusItem& item, const std::vector<BoundCheck>& checks) {
        if (c.violations_only) return;
        for (const BoundCheck& check : checks) {
          json j;
          j["type"] = "check";
          j["line"] = item.line;
          j["graph6"] = graph_text(*item.graph);
          const json fields = check_json(check);
          for (const auto& [k, v] : fields.items()) j[k] = v;
          emit(out, j);
        }
      });

  for (const auto& [line, message] : summary.errors) {
    err << "line " << line << ": " << message << '\n';
    emit(out, error_json(line, message));
  }
  for (const WitnessRecord& w : summary.violations) emit(out, witness_json(w, "violation"));

  json s;
  s["type"] = "summary";
  s["graphs"] = summary.graphs;
  json tallies = json::object();
  for (const auto& [op, t] : summary.tallies) {
    tallies[std::string(to_string(op))] = {{"checked", t.checked},
                                           {"held", t.held},
                                           {"lower_violations", t.lower_violations},
                                           {"upper_violations", t.upper_violations}};
  }
  s["tallies"] = tallies;
  s["violations"] = summary.violation_count();
  s["errors"] = summary.errors.size();
  json gains = json::object();
  for (const auto& [common, gain] : summary.contraction_gain_by_common) gains[std::to_string(common)] = gain;
  s["edge_contraction_max_gain_by_common_neighbours"] = gains;
  emit(out, s);

  if (!summary.errors.empty()) return kError;
  return summary.violation_count() > 0 ? kViolations : kClean;
}

int cmd_witness(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream&) {
  if (c.op.empty() || c.relation.empty()) throw UsageError("witness needs --op and --relation");
  const Operation op = parse_op(c.op);
  const auto relation = parse_relation(c.relation);
  if (!relation) throw UsageError("unknown relation '" + c.relation + "'");
  validate_query(op, *relation);
  InputHandle input = open_input(c, in);
  const std::vector<WitnessRecord> found = witness_search(input.source, op, *relation, c.limit, c.jobs);
  for (const WitnessRecord& w : found) emit(out, witness_json(w, "witness"));
  json s;
  s["type"] = "summary";
  s["op"] = to_string(op);
  s["relation"] = to_string(*relation);
  s["found"] = found.size();
  if (!c.model.empty() && c.model == "all") {
    s["max_order"] = c.n;
    s["report"] = found.empty() ? "none found at n <= " + std::to_string(c.n)
                                : std::to_string(found.size()) + " witnesses found";
  }
  emit(out, s);
  return kClean;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  if (c.model.empty()) throw UsageError("gen needs --model all|gnp");
  GraphSource source = generator_source(c);
  while (auto item = source()) out << emit_graph6(*item->graph) << '\n';
  return kClean;
}

void add_input_options(CLI::App* app, RunConfig& c) {
  app->add_option("-i,--input", c.input, "graph6 file, or - for stdin");
  app->add_option("-g,--graph", c.graphs, "inline graph6 string (repeatable)");
  app->add_option("--model", c.model, "generate the input: all | gnp");
  app->add_option("--n", c.n, "order for --model");
  app->add_flag("--up-to", c.up_to, "with --model all: every order from 0 to --n");
  app->add_option("--p", c.p, "edge probability for --model gnp");
  app->add_option("--seed", c.seed, "seed for --model gnp");
  app->add_option("--count", c.count, "number of gnp samples");
  app->add_flag("--families", c.families, "append the named sharpness families");
  app->add_option("-o,--output", c.output, "output file (default stdout)");
  app->add_option("--cap", c.cap, "largest graph order accepted");
  app->add_option("--jobs", c.jobs, "worker threads");
}

}  // namespace

int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty() && config.output != "-") {
    file.open(config.output);
    if (!file) {
      err << "cannot open output file '" << config.output << "'\n";
      return kError;
    }
    sink = &file;
  }
  try {
    if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (config.cap < 0 || config.cap > kMaxVertices) {
      throw UsageError("--cap must lie in [0, " + std::to_string(kMaxVertices) + "]");
    }
    if (config.command == "solve") return cmd_solve(config, in, *sink, err);
    if (config.command == "transform") return cmd_transform(config, in, *sink, err);
    if (config.command == "lift") return cmd_lift(config, in, *sink, err);
    if (config.command == "audit") return cmd_audit(config, in, *sink, err);
    if (config.command == "witness") return cmd_witness(config, in, *sink, err);
    if (config.command == "gen") return cmd_gen(config, *sink);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact co-even domination solver and bound auditor", "coeven"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "domination and co-even domination numbers with certificates");
  add_input_options(solve, c);
  solve->add_flag("--oracle", c.oracle, "use the exhaustive subset scan instead of the search");

  auto* transform = app.add_subcommand("transform", "apply a vertex or edge operation");
  add_input_options(transform, c);
  transform->add_option("--op", c.op, "vertex-removal | edge-removal | vertex-contraction | edge-contraction");
  transform->add_option("--vertex", c.vertex, "vertex id");
  transform->add_option("--edge", c.edge, "edge as u,v");

  auto* lift = app.add_subcommand("lift", "lift a co-even certificate across an operation");
  add_input_options(lift, c);
  lift->add_option("--op", c.op, "graph transform");
  lift->add_option("--vertex", c.vertex, "vertex id");
  lift->add_option("--edge", c.edge, "edge as u,v");
  lift->add_option("--direction", c.direction, "forward | backward");
  lift->add_option("--set", c.set, "certificate as a,b,c (default: an optimal one)");

  auto* audit = app.add_subcommand("audit", "check every bound on every vertex and edge");
  add_input_options(audit, c);
  audit->add_option("--op", c.op, "restrict to these operations (comma separated)");
  audit->add_flag("--violations-only", c.violations_only, "omit per-check lines");

  auto* witness = app.add_subcommand("witness", "search for graphs where a bound relation holds");
  add_input_options(witness, c);
  witness->add_option("--op", c.op, "operation");
  witness->add_option("--relation", c.relation,
                      "upper-equality | lower-equality | mid-equality | upper-violation | lower-violation | "
                      "base-equality");
  witness->add_option("--limit", c.limit, "stop after this many witnesses (0 = all)");

  auto* gen = app.add_subcommand("gen", "write graphs in graph6");
  add_input_options(gen, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  c.command = app.get_subcommands().front()->get_name();
  return execute(c, in, out, err);
}

}  // namespace coeven::cli
