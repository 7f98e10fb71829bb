#include "deonet/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "deonet/compiler.hpp"

namespace deonet {

namespace {

constexpr std::uint32_t kNoParent = UINT32_MAX;

// BFS along non-worsening flips (strict improvements and indifference).
// parents[x] records the predecessor on a shortest such chain from start.
std::vector<std::uint32_t> improving_bfs(const CPNet& net, Outcome start) {
  std::vector<std::uint32_t> parent(net.num_outcomes(), kNoParent);
  parent[start] = start;
  std::deque<Outcome> queue{start};
  while (!queue.empty()) {
    Outcome at = queue.front();
    queue.pop_front();
    for (std::uint32_t var = 0; var < net.size(); ++var) {
      FlipVerdict v = flip_verdict(net, at, var);
      if (v != FlipVerdict::Worse && v != FlipVerdict::Indifferent) continue;
      Outcome to = at ^ (Outcome{1} << var);
      if (parent[to] != kNoParent) continue;
      parent[to] = at;
      queue.push_back(to);
    }
  }
  return parent;
}

// Chain from `from` up to `to` (inclusive), following BFS parents.
std::vector<Outcome> chain(const std::vector<std::uint32_t>& parent,
                           Outcome from, Outcome to) {
  std::vector<Outcome> path;
  for (Outcome at = to;; at = parent[at]) {
    path.push_back(at);
    if (at == from) break;
  }
  // path currently runs winner..loser
  return path;
}

}  // namespace

DominanceResult dominance(const CPNet& net, Outcome o, Outcome u) {
  if (net.size() > 20)
    throw std::invalid_argument(
        "flip search enumerates 2^n outcomes; limit is 20 variables");
  check_outcome(net, o);
  check_outcome(net, u);

  DominanceResult result;
  if (o == u) {
    result.verdict = Relation::Equal;
    return result;
  }
  auto from_u = improving_bfs(net, u);
  auto from_o = improving_bfs(net, o);
  bool u_leq_o = from_u[o] != kNoParent;
  bool o_leq_u = from_o[u] != kNoParent;

  if (u_leq_o && o_leq_u) {
    result.verdict = Relation::Equivalent;
  } else if (u_leq_o) {
    result.verdict = Relation::Greater;
    result.witness = chain(from_u, u, o);
  } else if (o_leq_u) {
    result.verdict = Relation::Less;
    result.witness = chain(from_o, o, u);
  } else {
    result.verdict = Relation::Incomparable;
  }
  return result;
}

ConsistencyReport consistent(const PreferenceGraph& graph) {
  const CPNet& net = graph.net();
  for (Outcome o = 0; o < graph.num_outcomes(); ++o) {
    for (std::uint32_t var = 0; var < net.size(); ++var) {
      if (graph.flip(o, var) != FlipVerdict::Worse) continue;
      Outcome better = o ^ (Outcome{1} << var);
      // A strictly worsening flip that reachability undoes: dominance cycle.
      if (graph.scc_of(better) != graph.scc_of(o)) continue;
      ConsistencyReport report;
      report.consistent = false;
      auto parent = improving_bfs(net, better);
      std::vector<Outcome> back = chain(parent, better, o);
      // back = o..better following improving steps in reverse; reorder as the
      // improving loop o -> better -> ... -> o, start listed once.
      report.witness_cycle.assign(back.rbegin(), back.rend());
      report.witness_cycle.pop_back();  // drop the implied return to o
      report.witness_cycle.insert(report.witness_cycle.begin(), o);
      return report;
    }
  }
  return {};
}

ConsistencyReport consistent(const CPNet& net, int cap) {
  return consistent(PreferenceGraph::build(net, cap));
}

NormCheck check_norm(const PreferenceGraph& graph, const NormSet& set,
                     const Norm& norm) {
  const CPNet& net = graph.net();
  auto resolve = [&](Literal lit) -> std::pair<std::uint32_t, bool> {
    auto var = net.var_index(set.atom_name(lit.atom));
    if (!var)
      throw std::invalid_argument("norm mentions atom '" +
                                  set.atom_name(lit.atom) +
                                  "' which the net does not have");
    return {*var, lit.positive};
  };

  auto [cvar, cpos] = resolve(norm.consequent);
  Outcome cond_mask = 0, cond_bits = 0;
  for (const Literal& lit : norm.condition.literals) {
    auto [var, pos] = resolve(lit);
    if (var == cvar)
      throw std::invalid_argument("norm conditions on its own consequent atom");
    cond_mask |= Outcome{1} << var;
    if (pos) cond_bits |= Outcome{1} << var;
  }

  NormCheck check;
  Outcome cbit = Outcome{1} << cvar;
  for (Outcome w = 0; w < graph.num_outcomes(); ++w) {
    if ((w & cond_mask) != cond_bits) continue;
    if ((((w >> cvar) & 1u) != 0) != cpos) continue;
    Outcome good = w;          // satisfies the consequent
    Outcome bad = w ^ cbit;    // its ceteris-paribus violation twin

    bool ok = true;
    switch (norm.kind) {
      case NormKind::Obligation:
        ok = graph.compare(bad, good) == Relation::Less;
        if (!ok) {
          check.counterexample = {bad, good};
          check.found = graph.compare(bad, good);
        }
        break;
      case NormKind::Permission:
        ok = graph.compare(good, bad) != Relation::Less;
        if (!ok) {
          check.counterexample = {good, bad};
          check.found = Relation::Less;
        }
        break;
      case NormKind::Liberty: {
        Relation r = graph.compare(good, bad);
        ok = r != Relation::Less && r != Relation::Greater;
        if (!ok) {
          check.counterexample = r == Relation::Less
                                     ? std::make_pair(good, bad)
                                     : std::make_pair(bad, good);
          check.found = Relation::Less;
        }
        break;
      }
    }
    if (!ok) {
      check.satisfied = false;
      return check;
    }
  }
  return check;
}

NormSetCheck check_norm_set(const NormSet& set, int cap) {
  CPNet net = compile(set);
  PreferenceGraph graph = PreferenceGraph::build(net, cap);
  NormSetCheck report;
  report.results.reserve(set.norms.size());
  for (const Norm& norm : set.norms) {
    report.results.push_back(check_norm(graph, set, norm));
    report.all_satisfied = report.all_satisfied && report.results.back().satisfied;
  }
  return report;
}

PermissionStatus permission_status(
    const CPNet& net, std::uint32_t variable, bool positive,
    const std::vector<std::pair<std::uint32_t, bool>>& context) {
  if (variable >= net.size()) throw std::invalid_argument("no such variable");
  const auto& parents = net.parents[variable];

  std::uint32_t fixed_mask = 0, fixed_bits = 0;
  for (auto [var, value] : context) {
    auto it = std::find(parents.begin(), parents.end(), var);
    if (it == parents.end())
      throw std::invalid_argument(
          "context assigns '" + net.variables.at(var) +
          "', which is not a parent of '" + net.variables[variable] + "'");
    std::uint32_t k = static_cast<std::uint32_t>(it - parents.begin());
    if (fixed_mask & (1u << k))
      throw std::invalid_argument("context assigns '" + net.variables[var] +
                                  "' twice");
    fixed_mask |= 1u << k;
    if (value) fixed_bits |= 1u << k;
  }

  PermissionStatus status;
  std::uint32_t n_ctx = 1u << parents.size();
  for (std::uint32_t ctx = 0; ctx < n_ctx; ++ctx) {
    if ((ctx & fixed_mask) != fixed_bits) continue;
    const CompiledRow& row = net.cpt[variable][ctx];
    PermissionKind kind;
    switch (row.kind) {
      case RowKind::Strict:
        kind = row.preferred == positive ? PermissionKind::Obligatory
                                         : PermissionKind::Forbidden;
        break;
      case RowKind::Indifferent:
        kind = PermissionKind::StronglyPermittedBilateral;
        break;
      case RowKind::Absent:
      default:
        kind = PermissionKind::WeaklyPermitted;
        break;
    }
    status.per_context.push_back({ctx, kind});
  }

  bool uniform = !status.per_context.empty();
  for (const PermissionContext& pc : status.per_context)
    uniform = uniform && pc.kind == status.per_context.front().kind;
  if (uniform) status.overall = status.per_context.front().kind;
  return status;
}

std::vector<CtdPair> ctd_pairs(const NormSet& set) {
  std::vector<CtdPair> pairs;
  for (std::uint32_t i = 0; i < set.norms.size(); ++i) {
    const Norm& primary = set.norms[i];
    if (primary.kind != NormKind::Obligation) continue;
    Literal violation = primary.consequent.negated();
    for (std::uint32_t j = 0; j < set.norms.size(); ++j) {
      if (i == j) continue;
      const Norm& secondary = set.norms[j];
      if (secondary.kind != NormKind::Obligation) continue;
      if (!secondary.condition.contains(violation)) continue;
      if (!primary.condition.consistent_with(secondary.condition)) continue;
      pairs.push_back({i, j, violation});
    }
  }
  return pairs;
}

}  // namespace deonet
