#include "deonet/serialize.hpp"

namespace deonet {

namespace {

std::string kind_name(NormKind k) {
  switch (k) {
    case NormKind::Obligation: return "O";
    case NormKind::Permission: return "P";
    case NormKind::Liberty: return "L";
  }
  return {};
}

Json context_literals(const CPNet& net, std::uint32_t var, std::uint32_t ctx) {
  Json out = Json::array();
  const auto& parents = net.parents[var];
  for (std::size_t k = 0; k < parents.size(); ++k) {
    std::string lit = ((ctx >> k) & 1u) ? "" : "not ";
    out.push_back(lit + net.variables[parents[k]]);
  }
  return out;
}

}  // namespace

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Less: return "dominated";
    case Relation::Greater: return "dominates";
    case Relation::Equivalent: return "indifferent";
    case Relation::Incomparable: return "incomparable";
  }
  return {};
}

std::string permission_kind_name(PermissionKind k) {
  switch (k) {
    case PermissionKind::Obligatory: return "obligatory";
    case PermissionKind::Forbidden: return "forbidden";
    case PermissionKind::StronglyPermittedBilateral:
      return "strongly permitted (bilateral)";
    case PermissionKind::WeaklyPermitted: return "weakly permitted";
  }
  return {};
}

Json envelope(const std::string& command) {
  Json out;
  out["schema"] = kSchemaTag;
  out["command"] = command;
  return out;
}

Json norms_to_json(const NormSet& set) {
  Json out;
  out["atoms"] = set.atoms;
  Json norms = Json::array();
  for (const Norm& n : set.norms) {
    Json j;
    j["kind"] = kind_name(n.kind);
    j["consequent"] = format_literal(set, n.consequent);
    Json cond = Json::array();
    for (const Literal& lit : n.condition.literals)
      cond.push_back(format_literal(set, lit));
    j["condition"] = cond;
    j["text"] = format_norm(set, n);
    norms.push_back(j);
  }
  out["norms"] = norms;
  return out;
}

Json net_to_json(const NormSet& set, const CPNet& net) {
  (void)set;
  Json out;
  Json vars = Json::array();
  for (std::uint32_t var = 0; var < net.size(); ++var) {
    Json v;
    v["name"] = net.variables[var];
    Json parents = Json::array();
    for (std::uint32_t p : net.parents[var]) parents.push_back(net.variables[p]);
    v["parents"] = parents;
    Json rows = Json::array();
    for (std::uint32_t ctx = 0; ctx < net.cpt[var].size(); ++ctx) {
      const CompiledRow& row = net.cpt[var][ctx];
      if (row.kind == RowKind::Absent) continue;
      Json r;
      r["context"] = context_literals(net, var, ctx);
      r["kind"] = row.kind == RowKind::Strict ? "strict" : "indifferent";
      if (row.kind == RowKind::Strict)
        r["preferred"] = (row.preferred ? "" : "not ") + net.variables[var];
      r["provenance"] = row.provenance;
      rows.push_back(r);
    }
    v["rows"] = rows;
    vars.push_back(v);
  }
  out["variables"] = vars;
  Json edges = Json::array();
  for (auto [parent, child] : net.edges())
    edges.push_back(Json::array({net.variables[parent], net.variables[child]}));
  out["edges"] = edges;
  return out;
}

Json conflicts_to_json(const NormSet& set,
                       const std::vector<ConflictReport>& reports) {
  Json out = Json::array();
  for (const ConflictReport& r : reports) {
    Json j;
    j["variable"] = set.atom_name(r.variable);
    j["nature"] = r.nature == ConflictNature::OppositeStrict
                      ? "opposite strict orders"
                      : "strict vs indifferent";
    j["norms"] = r.norms;
    j["description"] = describe_conflict(set, r);
    out.push_back(j);
  }
  return out;
}

Json graph_to_json(const PreferenceGraph& graph, bool merge_indifference) {
  const CPNet& net = graph.net();
  Json out;
  out["outcome_count"] = graph.num_outcomes();

  Json comps = Json::array();
  for (const auto& comp : graph.weakly_connected_components()) {
    Json members = Json::array();
    for (Outcome o : comp) members.push_back(format_outcome(net, o));
    comps.push_back(members);
  }
  out["components"] = comps;

  if (merge_indifference) {
    Json nodes = Json::array();
    for (const auto& node : indifference_merged_nodes(graph)) {
      Json members = Json::array();
      for (Outcome o : node) members.push_back(format_outcome(net, o));
      nodes.push_back(members);
    }
    out["merged_nodes"] = nodes;
  }

  Json edges = Json::array();
  for (Outcome o = 0; o < graph.num_outcomes(); ++o) {
    for (std::uint32_t var = 0; var < net.size(); ++var) {
      Outcome u = o ^ (Outcome{1} << var);
      if (u < o) continue;
      Json e;
      switch (graph.flip(o, var)) {
        case FlipVerdict::Better:
          e["better"] = format_outcome(net, o);
          e["worse"] = format_outcome(net, u);
          e["kind"] = "strict";
          break;
        case FlipVerdict::Worse:
          e["better"] = format_outcome(net, u);
          e["worse"] = format_outcome(net, o);
          e["kind"] = "strict";
          break;
        case FlipVerdict::Indifferent:
          e["better"] = format_outcome(net, o);
          e["worse"] = format_outcome(net, u);
          e["kind"] = "indifferent";
          break;
        case FlipVerdict::Incomparable: continue;
      }
      edges.push_back(e);
    }
  }
  out["flip_edges"] = edges;

  Json optima = Json::array();
  for (Outcome o : graph.optimal_outcomes())
    optima.push_back(format_outcome(net, o));
  out["optimal"] = optima;
  return out;
}

Json dominance_to_json(const CPNet& net, const DominanceResult& result) {
  Json out;
  out["verdict"] = relation_name(result.verdict);
  if (!result.witness.empty()) {
    Json w = Json::array();
    for (Outcome o : result.witness) w.push_back(format_outcome(net, o));
    out["witness"] = w;
  }
  return out;
}

Json consistency_to_json(const CPNet& net, const ConsistencyReport& report) {
  Json out;
  out["consistent"] = report.consistent;
  if (!report.consistent) {
    Json cycle = Json::array();
    for (Outcome o : report.witness_cycle)
      cycle.push_back(format_outcome(net, o));
    out["witness_cycle"] = cycle;
  }
  return out;
}

Json permission_to_json(const CPNet& net, std::uint32_t variable, bool positive,
                        const PermissionStatus& status) {
  Json out;
  out["literal"] = (positive ? "" : "not ") + net.variables[variable];
  out["overall"] =
      status.overall ? Json(permission_kind_name(*status.overall)) : Json("mixed");
  Json per = Json::array();
  for (const PermissionContext& pc : status.per_context) {
    Json j;
    j["context"] = context_literals(net, variable, pc.context);
    j["status"] = permission_kind_name(pc.kind);
    per.push_back(j);
  }
  out["per_context"] = per;
  return out;
}

Json ctd_to_json(const NormSet& set, const std::vector<CtdPair>& pairs) {
  Json out = Json::array();
  for (const CtdPair& p : pairs) {
    Json j;
    j["primary"] = format_norm(set, set.norms[p.primary]);
    j["secondary"] = format_norm(set, set.norms[p.secondary]);
    j["violation"] = format_literal(set, p.violating);
    j["primary_index"] = p.primary;
    j["secondary_index"] = p.secondary;
    out.push_back(j);
  }
  return out;
}

Json norm_set_check_to_json(const NormSet& set, const CPNet& net,
                      const NormSetCheck& report) {
  Json out;
  out["all_satisfied"] = report.all_satisfied;
  Json norms = Json::array();
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const NormCheck& check = report.results[i];
    Json j;
    j["norm"] = format_norm(set, set.norms[i]);
    j["satisfied"] = check.satisfied;
    if (check.counterexample) {
      j["counterexample"] =
          Json::array({format_outcome(net, check.counterexample->first),
                       format_outcome(net, check.counterexample->second)});
      j["relation_found"] = relation_name(check.found);
    }
    norms.push_back(j);
  }
  out["norms"] = norms;
  return out;
}

}  // namespace deonet
