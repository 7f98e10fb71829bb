#include "deonet/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "deonet/compiler.hpp"
#include "deonet/dot.hpp"
#include "deonet/serialize.hpp"

namespace deonet {

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

int effective_cap(const RunConfig& config) {
  if (config.cap > 0) return config.cap;
  if (const char* env = std::getenv("DEONET_CAP")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return kDefaultVariableCap;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string text_row(const NormSet& set, const CPNet& net, std::uint32_t var,
                     std::uint32_t ctx) {
  const CompiledRow& row = net.cpt[var][ctx];
  const auto& parents = net.parents[var];
  std::string ctx_text;
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (k) ctx_text += " AND ";
    ctx_text += format_literal(set, Literal{parents[k], ((ctx >> k) & 1u) != 0});
  }
  if (ctx_text.empty()) ctx_text = "-";

  std::string order;
  const std::string& name = net.variables[var];
  if (row.kind == RowKind::Strict)
    order = row.preferred ? name + " > not " + name : "not " + name + " > " + name;
  else
    order = name + " ~ not " + name;

  std::string out = "  " + name + ": [" + ctx_text + "] " + order + "  {norms";
  for (std::uint32_t i : row.provenance) out += ' ' + std::to_string(i);
  out += "}";
  return out;
}

void print_net_text(std::ostream& out, const NormSet& set, const CPNet& net) {
  out << "variables:";
  for (const std::string& v : net.variables) out << ' ' << v;
  out << "\nedges:";
  auto edges = net.edges();
  if (edges.empty()) out << " (none)";
  for (auto [p, c] : edges)
    out << ' ' << net.variables[p] << "->" << net.variables[c];
  out << "\ncpt:\n";
  for (std::uint32_t var = 0; var < net.size(); ++var) {
    bool any = false;
    for (std::uint32_t ctx = 0; ctx < net.cpt[var].size(); ++ctx) {
      if (net.cpt[var][ctx].kind == RowKind::Absent) continue;
      out << text_row(set, net, var, ctx) << "\n";
      any = true;
    }
    if (!any) out << "  " << net.variables[var] << ": (no rows)\n";
  }
}

std::string outcome_or_empty(const CPNet& net, Outcome o) {
  std::string s = format_outcome(net, o);
  return s.empty() ? "(empty)" : s;
}

struct LoadedInput {
  NormSet norms;
};

int load(const RunConfig& config, std::ostream& err, LoadedInput* input) {
  std::ifstream file(config.input_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.input_path << "'\n";
    return kInputError;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    ParseResult parsed = parse_norms(buffer.str());
    for (const std::string& w : parsed.warnings) err << "warning: " << w << "\n";
    input->norms = std::move(parsed.norms);
  } catch (const ParseError& e) {
    err << "error: " << config.input_path << ": " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

int run_parse(const RunConfig& config, const NormSet& set, std::ostream& out) {
  if (config.format == OutputFormat::Structured) {
    Json j = envelope("parse");
    j.update(norms_to_json(set));
    out << dump(j);
  } else {
    out << format_norms(set);
  }
  return kOk;
}

int run_compile(const RunConfig& config, const NormSet& set, std::ostream& out,
                std::ostream& err) {
  std::vector<std::string> warnings;
  CPNet net;
  try {
    net = compile(set, &warnings);
  } catch (const ConflictError& e) {
    for (const std::string& w : warnings) err << "warning: " << w << "\n";
    if (config.format == OutputFormat::Structured) {
      Json j = envelope("compile");
      j["conflicts"] = conflicts_to_json(set, e.reports());
      out << dump(j);
    } else {
      for (const ConflictReport& r : e.reports())
        out << describe_conflict(set, r) << "\n";
    }
    return kSemanticFailure;
  }
  for (const std::string& w : warnings) err << "warning: " << w << "\n";

  switch (config.format) {
    case OutputFormat::Dot: out << dot_dependency(net); break;
    case OutputFormat::Structured: {
      Json j = envelope("compile");
      j.update(net_to_json(set, net));
      j["conflicts"] = Json::array();
      out << dump(j);
      break;
    }
    case OutputFormat::Text: print_net_text(out, set, net); break;
  }
  return kOk;
}

int run_graph(const RunConfig& config, const NormSet& set, std::ostream& out) {
  CPNet net = compile(set);
  PreferenceGraph graph = PreferenceGraph::build(net, effective_cap(config));
  switch (config.format) {
    case OutputFormat::Dot:
      out << dot_induced(graph, config.merge_indifference);
      break;
    case OutputFormat::Structured: {
      Json j = envelope("graph");
      j.update(graph_to_json(graph, config.merge_indifference));
      out << dump(j);
      break;
    }
    case OutputFormat::Text: {
      auto comps = graph.weakly_connected_components();
      out << "variables: " << net.size()
          << "\noutcomes: " << graph.num_outcomes() << "\ncomponents: "
          << comps.size() << " (sizes:";
      for (const auto& c : comps) out << ' ' << c.size();
      out << ")\n";
      if (config.merge_indifference)
        out << "merged nodes: " << indifference_merged_nodes(graph).size()
            << "\n";
      out << "optimal:\n";
      for (Outcome o : graph.optimal_outcomes())
        out << "  " << outcome_or_empty(net, o) << "\n";
      break;
    }
  }
  return kOk;
}

int run_dominance(const RunConfig& config, const NormSet& set,
                  std::ostream& out, std::ostream& err) {
  if (config.args.size() != 2) {
    err << "error: dominance needs two outcomes\n";
    return kInputError;
  }
  CPNet net = compile(set);
  Outcome o = parse_outcome(net, config.args[0]);
  Outcome u = parse_outcome(net, config.args[1]);
  DominanceResult result = dominance(net, o, u);
  if (config.format == OutputFormat::Structured) {
    Json j = envelope("dominance");
    j.update(dominance_to_json(net, result));
    out << dump(j);
  } else {
    out << "verdict: " << relation_name(result.verdict) << "\n";
    if (!result.witness.empty()) {
      out << "witness (best first):\n";
      for (Outcome w : result.witness)
        out << "  " << outcome_or_empty(net, w) << "\n";
    }
  }
  return kOk;
}

int run_consistent(const RunConfig& config, const NormSet& set,
                   std::ostream& out) {
  CPNet net = compile(set);
  ConsistencyReport report =
      consistent(PreferenceGraph::build(net, effective_cap(config)));
  if (config.format == OutputFormat::Structured) {
    Json j = envelope("consistent");
    j.update(consistency_to_json(net, report));
    out << dump(j);
  } else if (report.consistent) {
    out << "consistent\n";
  } else {
    out << "inconsistent\nwitness cycle (improving loop):\n";
    for (Outcome o : report.witness_cycle)
      out << "  " << outcome_or_empty(net, o) << "\n";
  }
  return report.consistent ? kOk : kSemanticFailure;
}

int run_permission(const RunConfig& config, const NormSet& set,
                   std::ostream& out, std::ostream& err) {
  if (config.args.empty()) {
    err << "error: permission needs a literal query\n";
    return kInputError;
  }
  std::string query;
  for (const std::string& part : config.args) {
    if (!query.empty()) query += ' ';
    query += part;
  }
  CPNet net = compile(set);
  auto [lit, context] = parse_literal_query(set, query);
  std::vector<std::pair<std::uint32_t, bool>> ctx;
  for (const Literal& l : context.literals) ctx.emplace_back(l.atom, l.positive);
  PermissionStatus status = permission_status(net, lit.atom, lit.positive, ctx);

  if (config.format == OutputFormat::Structured) {
    Json j = envelope("permission");
    j.update(permission_to_json(net, lit.atom, lit.positive, status));
    out << dump(j);
  } else {
    out << format_literal(set, lit) << ": "
        << (status.overall ? permission_kind_name(*status.overall) : "mixed")
        << "\n";
    if (!status.overall || status.per_context.size() > 1) {
      for (const PermissionContext& pc : status.per_context) {
        std::string ctx_text;
        const auto& parents = net.parents[lit.atom];
        for (std::size_t k = 0; k < parents.size(); ++k) {
          if (k) ctx_text += " AND ";
          ctx_text += format_literal(
              set, Literal{parents[k], ((pc.context >> k) & 1u) != 0});
        }
        if (ctx_text.empty()) ctx_text = "-";
        out << "  [" << ctx_text << "] " << permission_kind_name(pc.kind) << "\n";
      }
    }
  }
  return kOk;
}

int run_ctd(const RunConfig& config, const NormSet& set, std::ostream& out) {
  auto pairs = ctd_pairs(set);
  if (config.format == OutputFormat::Structured) {
    Json j = envelope("ctd");
    j["pairs"] = ctd_to_json(set, pairs);
    out << dump(j);
  } else if (pairs.empty()) {
    out << "no contrary-to-duty pairs\n";
  } else {
    for (const CtdPair& p : pairs)
      out << format_norm(set, set.norms[p.primary]) << "  -> "
          << format_norm(set, set.norms[p.secondary]) << "  (violation: "
          << format_literal(set, p.violating) << ")\n";
  }
  return kOk;
}

int run_check(const RunConfig& config, const NormSet& set, std::ostream& out) {
  CPNet net = compile(set);
  PreferenceGraph graph = PreferenceGraph::build(net, effective_cap(config));
  NormSetCheck report;
  report.results.reserve(set.norms.size());
  for (const Norm& norm : set.norms) {
    report.results.push_back(check_norm(graph, set, norm));
    report.all_satisfied =
        report.all_satisfied && report.results.back().satisfied;
  }

  if (config.format == OutputFormat::Structured) {
    Json j = envelope("check");
    j.update(norm_set_check_to_json(set, net, report));
    out << dump(j);
  } else {
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      const NormCheck& check = report.results[i];
      out << format_norm(set, set.norms[i]) << ": "
          << (check.satisfied ? "satisfied" : "NOT satisfied") << "\n";
      if (check.counterexample)
        out << "  counterexample: "
            << outcome_or_empty(net, check.counterexample->first) << "  vs  "
            << outcome_or_empty(net, check.counterexample->second)
            << "  (found: " << relation_name(check.found) << ")\n";
    }
    out << (report.all_satisfied ? "all norms satisfied\n"
                                 : "some norms not satisfied\n");
  }
  return report.all_satisfied ? kOk : kSemanticFailure;
}

int run_optima(const RunConfig& config, const NormSet& set, std::ostream& out) {
  CPNet net = compile(set);
  PreferenceGraph graph = PreferenceGraph::build(net, effective_cap(config));
  auto optima = graph.optimal_outcomes();
  if (config.format == OutputFormat::Structured) {
    Json j = envelope("optima");
    Json arr = Json::array();
    for (Outcome o : optima) arr.push_back(format_outcome(net, o));
    j["optimal"] = arr;
    out << dump(j);
  } else {
    for (Outcome o : optima) out << outcome_or_empty(net, o) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.cap < 0) {
    err << "error: cap must be >= 1\n";
    return kInputError;
  }
  bool dot_ok =
      config.command == Command::Compile || config.command == Command::Graph;
  if (config.format == OutputFormat::Dot && !dot_ok) {
    err << "error: dot output is only available for compile and graph\n";
    return kInputError;
  }

  LoadedInput input;
  if (int rc = load(config, err, &input); rc != kOk) return rc;

  try {
    switch (config.command) {
      case Command::Parse: return run_parse(config, input.norms, out);
      case Command::Compile: return run_compile(config, input.norms, out, err);
      case Command::Graph: return run_graph(config, input.norms, out);
      case Command::Dominance:
        return run_dominance(config, input.norms, out, err);
      case Command::Consistent: return run_consistent(config, input.norms, out);
      case Command::Permission:
        return run_permission(config, input.norms, out, err);
      case Command::Ctd: return run_ctd(config, input.norms, out);
      case Command::Check: return run_check(config, input.norms, out);
      case Command::Optima: return run_optima(config, input.norms, out);
    }
  } catch (const ConflictError& e) {
    for (const ConflictReport& r : e.reports())
      err << "error: " << describe_conflict(input.norms, r) << "\n";
    return kSemanticFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"deontic norm sets as prescriptive CP-nets"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd, bool takes_file = true) {
    if (takes_file)
      cmd->add_option("file", config.input_path, "norm file")->required();
    cmd->add_option("--format", format, "text | structured | dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
    cmd->add_option("--cap", config.cap,
                    "variable cap for materializing the preorder")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* parse = app.add_subcommand("parse", "echo validated norms");
  add_common(parse);
  CLI::App* compile_cmd =
      app.add_subcommand("compile", "compile into a CP-net");
  add_common(compile_cmd);
  CLI::App* graph = app.add_subcommand("graph", "induced preference graph");
  add_common(graph);
  graph->add_flag("--merge-indifference", config.merge_indifference,
                  "collapse outcomes differing only on all-indifferent variables");
  CLI::App* dom = app.add_subcommand("dominance", "compare two outcomes");
  add_common(dom);
  dom->add_option("outcomes", config.args, "two outcomes (comma-separated literals)")
      ->expected(2);
  CLI::App* cons = app.add_subcommand("consistent", "dominance-cycle check");
  add_common(cons);
  CLI::App* perm =
      app.add_subcommand("permission", "status of a literal: <lit> [IF <ctx>]");
  add_common(perm);
  perm->add_option("query", config.args, "literal and optional IF context")
      ->expected(-1);
  CLI::App* ctd = app.add_subcommand("ctd", "contrary-to-duty pairs");
  add_common(ctd);
  CLI::App* check =
      app.add_subcommand("check", "verify every norm against the induced preorder");
  add_common(check);
  CLI::App* optima = app.add_subcommand("optima", "undominated outcomes");
  add_common(optima);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (parse->parsed()) config.command = Command::Parse;
  else if (compile_cmd->parsed()) config.command = Command::Compile;
  else if (graph->parsed()) config.command = Command::Graph;
  else if (dom->parsed()) config.command = Command::Dominance;
  else if (cons->parsed()) config.command = Command::Consistent;
  else if (perm->parsed()) config.command = Command::Permission;
  else if (ctd->parsed()) config.command = Command::Ctd;
  else if (check->parsed()) config.command = Command::Check;
  else if (optima->parsed()) config.command = Command::Optima;

  if (format == "structured") config.format = OutputFormat::Structured;
  else if (format == "dot") config.format = OutputFormat::Dot;

  return run(config, out, err);
}

}  // namespace deonet
