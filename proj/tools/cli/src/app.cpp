#include "tsgraph/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "tsgraph/canonical.hpp"
#include "tsgraph/cli/dot.hpp"
#include "tsgraph/cli/io.hpp"
#include "tsgraph/equivalence.hpp"
#include "tsgraph/error.hpp"
#include "tsgraph/limits.hpp"
#include "tsgraph/marginal.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph::cli {

namespace {

struct Options {
  std::string format = "json";
  int budget = 0;
  std::vector<std::string> inputs;
  int tau_max = -1;
  int tau_tilde = -1;
  int stride = 1;
  std::string knowledge = "b_d";
  std::string mode = "mixed";
  int stability_window = 0;
  bool dmag_only = false;
  bool with_dpags = false;
  std::uint64_t seed = 0;
  int vars = 3;
  int order = 1;
  double density = 0.3;
  int latent = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text, path);
}

std::vector<std::string> observed_names(const TemplateDoc& doc) {
  std::vector<std::string> out;
  for (int v : doc.observed) out.push_back(doc.names[static_cast<std::size_t>(v)]);
  return out;
}

ObservationScheme scheme_for(const TemplateDoc& doc, const Options& o) {
  return {doc.observed, o.tau_max >= 0 ? o.tau_max : doc.tmpl.order(), o.stride};
}

Knowledge parse_knowledge(const std::string& s) {
  auto k = knowledge_from_string(s);
  if (!k) throw UsageError("unknown knowledge \"" + s + "\"");
  return *k;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void json(const Json& j) { out_ << format_json(j) << '\n'; }

  void graph(const GraphDoc& g) {
    if (o_.format == "dot") {
      out_ << to_dot(g.graph, g.names);
    } else {
      json(graph_to_json(g));
    }
  }

  /// JSON report that embeds a graph under `key`; DOT renders the graph only.
  void report(Json j, const char* key, const GraphDoc& g) {
    if (o_.format == "dot") {
      out_ << to_dot(g.graph, g.names);
      return;
    }
    j[key] = graph_to_json(g);
    json(j);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

int cmd_marginalize(const Options& o, Emitter& emit) {
  const TemplateDoc doc = template_from_json(read_document(o.inputs.at(0)));
  emit.graph({observed_names(doc), ts_dmag(doc.tmpl, scheme_for(doc, o))});
  return kOk;
}

int cmd_stationarify(const Options& o, Emitter& emit) {
  GraphDoc doc = graph_from_json(read_document(o.inputs.at(0)));
  doc.graph = stationarify(doc.graph);
  emit.graph(doc);
  return kOk;
}

int cmd_canonical(const Options& o, Emitter& emit) {
  const GraphDoc doc = graph_from_json(read_document(o.inputs.at(0)));
  TemplateDoc out;
  out.tmpl = canonical_ts_dag(doc.graph);
  out.names = doc.names;
  for (const LatentLabel& l : latent_labels(doc.graph)) {
    out.names.push_back("L[" + doc.names[static_cast<std::size_t>(l.i)] + "," +
                        doc.names[static_cast<std::size_t>(l.j)] + "," + std::to_string(l.lag) + "]");
  }
  for (int k = 0; k < doc.graph.n_vars(); ++k) out.observed.push_back(k);
  emit.json(template_to_json(out));
  return kOk;
}

int cmd_check(const Options& o, Emitter& emit) {
  const GraphDoc doc = graph_from_json(read_document(o.inputs.at(0)));
  MembershipMode mode;
  if (o.mode == "dmag") {
    mode = MembershipMode::Dmag;
  } else if (o.mode == "mixed") {
    mode = MembershipMode::MixedGraph;
  } else {
    throw UsageError("unknown mode \"" + o.mode + "\"");
  }
  const MembershipReport r = is_ts_dmag(doc.graph, mode);
  Json j;
  j["ts_dmag"] = r.member;
  j["relation"] = r.reason.empty() ? to_string(r.relation) : "undecided";
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["only_in_input"] = edges_to_json(r.only_in_input, doc.names);
  j["only_in_marginal"] = edges_to_json(r.only_in_marginal, doc.names);
  j["stat_ts_dmag"] = is_stat_ts_dmag(doc.graph);
  emit.json(j);
  return kOk;
}

int cmd_dpag(const Options& o, Emitter& emit) {
  const Json input = read_document(o.inputs.at(0));
  const Knowledge k = parse_knowledge(o.knowledge);
  GraphDoc dmag;
  if (is_template(input)) {
    const TemplateDoc doc = template_from_json(input);
    dmag = {observed_names(doc), ts_dmag(doc.tmpl, scheme_for(doc, o))};
  } else {
    dmag = graph_from_json(input);
  }
  const DpagReport r = mi_dpag(dmag.graph, k, o.budget);
  Json j;
  j["knowledge"] = to_string(r.knowledge);
  j["class_size"] = r.class_size;
  emit.report(j, "dpag", {dmag.names, r.dpag});
  return kOk;
}

int cmd_equiv(const Options& o, Emitter& emit) {
  if (o.inputs.size() != 2) throw UsageError("equiv needs two graph files");
  const GraphDoc a = graph_from_json(read_document(o.inputs[0]));
  const GraphDoc b = graph_from_json(read_document(o.inputs[1]));
  if (a.names != b.names) throw SemanticError("graphs declare different variables");
  for (const GraphDoc* g : {&a, &b}) {
    if (g->graph.has_circles() || !validate_dmag(g->graph).is_dmag()) {
      throw SemanticError("Markov equivalence needs two DMAGs");
    }
  }
  Json j;
  j["markov_equivalent"] = markov_equivalent(a.graph, b.graph);
  emit.json(j);
  return kOk;
}

int cmd_limit(const Options& o, Emitter& emit, std::ostream& out) {
  const TemplateDoc doc = template_from_json(read_document(o.inputs.at(0)));
  const ObservationScheme scheme = scheme_for(doc, o);
  LimitOptions lo;
  lo.stability_window = o.stability_window;
  lo.max_edges = o.budget;
  const LimitResult m = limiting_ts_dmag(doc.tmpl, scheme, lo);
  const auto names = observed_names(doc);
  if (o.format == "dot") {
    out << to_dot(m.graph, names, "limiting ts-DMAG");
    if (!o.dmag_only) out << to_dot(limiting_ts_dpag(doc.tmpl, scheme, lo).graph, names, "limiting ts-DPAG");
    return kOk;
  }
  Json j;
  j["tau_max"] = scheme.tau_max;
  j["stability_window"] = lo.stability_window > 0 ? lo.stability_window
                                                   : default_stability_window(doc.tmpl, scheme.tau_max);
  j["dmag_tau_tilde"] = m.tau_tilde;
  j["dmag"] = graph_to_json({names, m.graph});
  if (!o.dmag_only) {
    const LimitResult p = limiting_ts_dpag(doc.tmpl, scheme, lo);
    j["dpag_tau_tilde"] = p.tau_tilde;
    j["dpag"] = graph_to_json({names, p.graph});
  }
  emit.json(j);
  return kOk;
}

int cmd_compare_windows(const Options& o, Emitter& emit) {
  const TemplateDoc doc = template_from_json(read_document(o.inputs.at(0)));
  if (o.tau_tilde < 0) throw UsageError("compare-windows needs --tau-tilde");
  const WindowComparison r = window_compare(doc.tmpl, scheme_for(doc, o), o.tau_tilde, o.with_dpags, o.budget);
  Json j;
  j["latest_subgraph"] = r.latest_subgraph;
  j["latest_proper"] = r.latest_proper;
  j["earliest_equal"] = r.earliest_equal;
  if (r.dpags_compared) {
    j["marks_monotone"] = r.marks_monotone;
    j["circles_contained"] = r.circles_contained;
    j["marks_gained"] = r.marks_gained;
  }
  j["holds"] = r.holds();
  emit.json(j);
  return kOk;
}

int cmd_random(const Options& o, Emitter& emit) {
  if (o.latent < 0 || o.latent >= o.vars) throw UsageError("--latent must lie in [0, vars)");
  TemplateDoc doc;
  doc.tmpl = random_ts_dag(o.vars, o.order, o.density, o.seed);
  doc.names = default_names(o.vars);
  // The last `latent` variables are unobserved.
  for (int k = 0; k < o.vars - o.latent; ++k) doc.observed.push_back(k);
  emit.json(template_to_json(doc));
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Json input = read_document(o.inputs.at(0));
  if (is_template(input)) {
    const TemplateDoc doc = template_from_json(input);
    const int depth = o.tau_max >= 0 ? o.tau_max : doc.tmpl.order();
    out << to_dot(unroll(doc.tmpl, depth), doc.names);
  } else {
    const GraphDoc doc = graph_from_json(input);
    out << to_dot(doc.graph, doc.names);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.budget = default_enumeration_budget();

  CLI::App app{"Marginal, membership and equivalence computations for time series causal graphs", "tsgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--budget", o.budget, "Maximum number of edges a class enumeration may retype")
      ->check(CLI::Range(1, 63));

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.inputs, what)->required();
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--tau-max", o.tau_max, "Window length (default: template order)")->check(CLI::NonNegativeNumber);
    sub->add_option("--stride", o.stride, "Sampling stride")->check(CLI::PositiveNumber);
  };

  auto* marginalize = app.add_subcommand("marginalize", "ts-DMAG of a template");
  add_input(marginalize, "Template file");
  add_window(marginalize);

  auto* stat = app.add_subcommand("stationarify", "Stationarification of a graph");
  add_input(stat, "Graph file");

  auto* canonical = app.add_subcommand("canonical", "Canonical ts-DAG of a graph");
  add_input(canonical, "Graph file");

  auto* check = app.add_subcommand("check", "ts-DMAG membership with edge diff");
  add_input(check, "Graph file");
  check->add_option("--mode", o.mode, "dmag: input asserted to be a DMAG; mixed: any directed mixed graph")
      ->check(CLI::IsMember({"dmag", "mixed"}));

  auto* dpag = app.add_subcommand("dpag", "Maximally informative DPAG under background knowledge");
  add_input(dpag, "Graph or template file");
  add_window(dpag);
  dpag->add_option("--knowledge", o.knowledge, "none, b_to, b_ta, b_d or b_d_stat")
      ->check(CLI::IsMember({"none", "b_to", "b_ta", "b_d", "b_d_stat"}));

  auto* equiv = app.add_subcommand("equiv", "Markov equivalence of two DMAGs");
  add_input(equiv, "Two graph files");

  auto* limit = app.add_subcommand("limit", "Limiting ts-DMAG and ts-DPAG");
  add_input(limit, "Template file");
  add_window(limit);
  limit->add_option("--stability-window", o.stability_window, "Unchanged deepening steps required")
      ->check(CLI::PositiveNumber);
  limit->add_flag("--dmag-only", o.dmag_only, "Skip the limiting ts-DPAG");

  auto* compare = app.add_subcommand("compare-windows", "Compare ts-DMAGs for two window lengths");
  add_input(compare, "Template file");
  add_window(compare);
  compare->add_option("--tau-tilde", o.tau_tilde, "Larger window length")->required();
  compare->add_flag("--dpags", o.with_dpags, "Also compare the ts-DPAGs");

  auto* random = app.add_subcommand("random", "Random template");
  random->add_option("--seed", o.seed, "Generator seed");
  random->add_option("--vars", o.vars, "Number of variables")->check(CLI::Range(1, 64));
  random->add_option("--order", o.order, "Largest lag")->check(CLI::NonNegativeNumber);
  random->add_option("--density", o.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  random->add_option("--latent", o.latent, "Number of unobserved variables (the last ones)");

  auto* render = app.add_subcommand("render", "Graphviz DOT of a graph or unrolled template");
  add_input(render, "Graph or template file");
  render->add_option("--tau-max", o.tau_max, "Unroll depth for templates")->check(CLI::NonNegativeNumber);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      err << "tsgraph: unknown subcommand \"" << args.front() << "\"\n";
      return kUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tsgraph: " << e.what() << '\n';
    return kUsage;
  }

  Emitter emit(o, out);
  try {
    for (auto* sub : {marginalize, stat, canonical, check, dpag, limit, compare, render}) {
      if (*sub && o.inputs.size() != 1) throw UsageError(sub->get_name() + " takes exactly one input file");
    }
    if (*marginalize) return cmd_marginalize(o, emit);
    if (*stat) return cmd_stationarify(o, emit);
    if (*canonical) return cmd_canonical(o, emit);
    if (*check) return cmd_check(o, emit);
    if (*dpag) return cmd_dpag(o, emit);
    if (*equiv) return cmd_equiv(o, emit);
    if (*limit) return cmd_limit(o, emit, out);
    if (*compare) return cmd_compare_windows(o, emit);
    if (*random) return cmd_random(o, emit);
    if (*render) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "tsgraph: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "tsgraph: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "tsgraph: " << e.what() << '\n';
    return kBudget;
  } catch (const SemanticError& e) {
    err << "tsgraph: " << e.what() << '\n';
    return kSemantic;
  }
  return kUsage;
}

}  // namespace tsgraph::cli
