#include "deonet/compiler.hpp"

#include <algorithm>

namespace deonet {

namespace {

bool targets(const Norm& n, AtomId var) {
  return n.kind != NormKind::Permission && n.consequent.atom == var;
}

// True when the norm's condition is extended by the packed parent context.
bool condition_matches(const Norm& n, const std::vector<std::uint32_t>& parents,
                       std::uint32_t ctx) {
  for (const Literal& lit : n.condition.literals) {
    auto it = std::find(parents.begin(), parents.end(), lit.atom);
    std::size_t j = static_cast<std::size_t>(it - parents.begin());
    if (((ctx >> j) & 1u) != static_cast<unsigned>(lit.positive)) return false;
  }
  return true;
}

// Merged row for one (variable, total parent context); appends a report and
// returns Absent-kind on clash.
CompiledRow merge_context(const NormSet& set,
                          const std::vector<std::uint32_t>& parents,
                          AtomId var, std::uint32_t ctx,
                          std::vector<ConflictReport>* conflicts) {
  std::vector<std::uint32_t> strict_pos, strict_neg, indiff;
  for (std::uint32_t i = 0; i < set.norms.size(); ++i) {
    const Norm& n = set.norms[i];
    if (!targets(n, var) || !condition_matches(n, parents, ctx)) continue;
    if (n.kind == NormKind::Liberty)
      indiff.push_back(i);
    else if (n.consequent.positive)
      strict_pos.push_back(i);
    else
      strict_neg.push_back(i);
  }

  bool opposite = !strict_pos.empty() && !strict_neg.empty();
  bool strict_vs_indiff =
      (!strict_pos.empty() || !strict_neg.empty()) && !indiff.empty();
  if (opposite || strict_vs_indiff) {
    if (conflicts) {
      ConflictReport report;
      report.variable = var;
      report.context = ctx;
      report.nature = opposite ? ConflictNature::OppositeStrict
                               : ConflictNature::StrictVsIndifferent;
      report.norms = strict_pos;
      report.norms.insert(report.norms.end(), strict_neg.begin(), strict_neg.end());
      report.norms.insert(report.norms.end(), indiff.begin(), indiff.end());
      std::sort(report.norms.begin(), report.norms.end());
      conflicts->push_back(std::move(report));
    }
    return CompiledRow{};
  }

  CompiledRow row;
  if (!strict_pos.empty() || !strict_neg.empty()) {
    row.kind = RowKind::Strict;
    row.preferred = !strict_pos.empty();
    row.provenance = row.preferred ? strict_pos : strict_neg;
  } else if (!indiff.empty()) {
    row.kind = RowKind::Indifferent;
    row.provenance = indiff;
  }
  return row;
}

std::vector<CompiledRow> expand_variable(const NormSet& set,
                                         const std::vector<std::uint32_t>& parents,
                                         AtomId var,
                                         std::vector<ConflictReport>* conflicts) {
  if (parents.size() > kMaxParents)
    throw std::invalid_argument("variable '" + set.atom_name(var) + "' has " +
                                std::to_string(parents.size()) +
                                " parents; CPT expansion is capped at " +
                                std::to_string(kMaxParents));
  std::size_t n_ctx = std::size_t{1} << parents.size();
  std::vector<CompiledRow> rows;
  rows.reserve(n_ctx);
  for (std::uint32_t ctx = 0; ctx < n_ctx; ++ctx)
    rows.push_back(merge_context(set, parents, var, ctx, conflicts));
  return rows;
}

}  // namespace

ConflictError::ConflictError(std::vector<ConflictReport> reports)
    : std::runtime_error(std::to_string(reports.size()) +
                         " conflicting norm context(s)"),
      reports_(std::move(reports)) {}

std::vector<std::vector<std::uint32_t>> derive_parents(const NormSet& set) {
  std::vector<std::vector<std::uint32_t>> parents(set.atoms.size());
  for (const Norm& n : set.norms) {
    if (n.kind == NormKind::Permission) continue;
    for (const Literal& lit : n.condition.literals)
      parents[n.consequent.atom].push_back(lit.atom);
  }
  for (auto& ps : parents) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }
  return parents;
}

CPNet compile(const NormSet& set, std::vector<std::string>* warnings) {
  if (warnings) {
    for (std::size_t i = 0; i < set.norms.size(); ++i) {
      if (set.norms[i].kind == NormKind::Permission)
        warnings->push_back(
            "norm " + std::to_string(i) + " (" + format_norm(set, set.norms[i]) +
            "): unilateral permission contributes no preference row");
    }
  }

  CPNet net;
  net.variables = set.atoms;
  net.parents = derive_parents(set);
  net.cpt.resize(set.atoms.size());

  std::vector<ConflictReport> conflicts;
  for (AtomId var = 0; var < set.atoms.size(); ++var)
    net.cpt[var] = expand_variable(set, net.parents[var], var, &conflicts);
  if (!conflicts.empty()) throw ConflictError(std::move(conflicts));
  return net;
}

std::vector<CompiledRow> expand_contexts(const NormSet& set, AtomId variable) {
  if (variable >= set.atoms.size())
    throw std::invalid_argument("no such variable");
  auto parents = derive_parents(set);
  std::vector<ConflictReport> conflicts;
  auto rows = expand_variable(set, parents[variable], variable, &conflicts);
  if (!conflicts.empty()) throw ConflictError(std::move(conflicts));
  return rows;
}

std::vector<ConflictReport> detect_conflicts(const NormSet& set) {
  auto parents = derive_parents(set);
  std::vector<ConflictReport> conflicts;
  for (AtomId var = 0; var < set.atoms.size(); ++var)
    expand_variable(set, parents[var], var, &conflicts);
  return conflicts;
}

std::string describe_conflict(const NormSet& set, const ConflictReport& report) {
  auto parents = derive_parents(set)[report.variable];
  std::string ctx;
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (k) ctx += " AND ";
    ctx += format_literal(
        set, Literal{parents[k], ((report.context >> k) & 1u) != 0});
  }
  if (ctx.empty()) ctx = "(unconditional)";

  std::string out = "conflict on '" + set.atom_name(report.variable) + "' given " +
                    ctx + ": ";
  out += report.nature == ConflictNature::OppositeStrict
             ? "opposite strict orders"
             : "strict order vs indifference";
  out += " (norms";
  for (std::uint32_t i : report.norms) {
    out += ' ';
    out += std::to_string(i);
  }
  out += ')';
  return out;
}

}  // namespace deonet
