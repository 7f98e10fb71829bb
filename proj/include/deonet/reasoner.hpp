#ifndef DEONET_REASONER_HPP
#define DEONET_REASONER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "deonet/cpnet.hpp"
#include "deonet/norms.hpp"
#include "deonet/preorder.hpp"

namespace deonet {

// Dominance by flip-sequence search (independent of the materialized
// closure): verdict Greater means the first outcome dominates. For strict
// verdicts `witness` is the flip chain from the winner down to the loser;
// every step is a non-improving flip and at least one is strictly worsening.
struct DominanceResult {
  Relation verdict = Relation::Equal;
  std::vector<Outcome> witness;
};

DominanceResult dominance(const CPNet& net, Outcome o, Outcome u);

// A net is inconsistent when some strictly-worsening flip can be undone by a
// chain of non-worsening flips — an outcome then dominates itself. The
// witness lists distinct outcomes of one such loop in improving order; the
// closing step back to the first element is implied.
struct ConsistencyReport {
  bool consistent = true;
  std::vector<Outcome> witness_cycle;
};

ConsistencyReport consistent(const PreferenceGraph& graph);
ConsistencyReport consistent(const CPNet& net, int cap = kDefaultVariableCap);

// Satisfaction of one norm against an induced preorder. For an obligation
// with consequent literal q and condition c: every pair of outcomes that
// agree everywhere except q's variable and both satisfy c must rank the
// q-side strictly above. A permission only forbids the q-side ranking
// strictly below; a liberty forbids strict rank in either direction.
struct NormCheck {
  bool satisfied = true;
  // On failure: the pair that broke the norm (violating-side first for
  // obligations, permitted-but-dominated side first for P/L) and the
  // relation actually found between them.
  std::optional<std::pair<Outcome, Outcome>> counterexample;
  Relation found = Relation::Equal;
};

// The graph may be over a superset of the norm set's atoms; names resolve by
// lookup. Throws std::invalid_argument on atoms the net does not have.
NormCheck check_norm(const PreferenceGraph& graph, const NormSet& set,
                     const Norm& norm);

// Compiles the set, builds the induced preorder, and checks every norm
// against it.
struct NormSetCheck {
  bool all_satisfied = true;
  std::vector<NormCheck> results;  // one per norm
};

NormSetCheck check_norm_set(const NormSet& set, int cap = kDefaultVariableCap);

enum class PermissionKind {
  Obligatory,
  Forbidden,
  StronglyPermittedBilateral,  // indifference row: explicitly permitted
  WeaklyPermitted              // absent row: merely unregulated
};

struct PermissionContext {
  std::uint32_t context = 0;  // packed parent assignment
  PermissionKind kind = PermissionKind::WeaklyPermitted;

  friend bool operator==(const PermissionContext&, const PermissionContext&) = default;
};

// Status of a literal per total parent context extending `context`;
// `overall` is set when all contexts agree.
struct PermissionStatus {
  std::optional<PermissionKind> overall;
  std::vector<PermissionContext> per_context;
};

// `context` must assign only parents of the literal's variable.
PermissionStatus permission_status(const CPNet& net, std::uint32_t variable,
                                   bool positive,
                                   const std::vector<std::pair<std::uint32_t, bool>>& context);

// Contrary-to-duty pairs: obligations (primary, secondary) where the
// secondary's condition contains the negation of the primary's consequent
// and the two conditions are jointly consistent.
struct CtdPair {
  std::uint32_t primary = 0;
  std::uint32_t secondary = 0;
  Literal violating;  // the literal whose truth violates the primary

  friend bool operator==(const CtdPair&, const CtdPair&) = default;
};

std::vector<CtdPair> ctd_pairs(const NormSet& set);

}  // namespace deonet

#endif
