#ifndef DEONET_COMPILER_HPP
#define DEONET_COMPILER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "deonet/cpnet.hpp"
#include "deonet/norms.hpp"

// Lowers a validated norm set into a prescriptive CP-net: one binary variable
// per atom, an edge from every condition atom into its norm's consequent
// variable, obligation rows strict towards the consequent, liberty rows
// indifferent. Conditions are partial parent assignments; each is expanded to
// every total parent context extending it. Contexts no norm covers stay
// absent. Unilateral permissions contribute nothing (they are assumed implied
// by an obligation or a liberty) and only raise a warning.

namespace deonet {

enum class ConflictNature { OppositeStrict, StrictVsIndifferent };

struct ConflictReport {
  std::uint32_t variable = 0;
  std::uint32_t context = 0;             // packed parent assignment
  std::vector<std::uint32_t> norms;      // all norms constraining the context
  ConflictNature nature = ConflictNature::OppositeStrict;

  friend bool operator==(const ConflictReport&, const ConflictReport&) = default;
};

class ConflictError : public std::runtime_error {
 public:
  explicit ConflictError(std::vector<ConflictReport> reports);
  const std::vector<ConflictReport>& reports() const { return reports_; }

 private:
  std::vector<ConflictReport> reports_;
};

// Limit on 2^|parents| CPT expansion.
inline constexpr std::size_t kMaxParents = 20;

// Throws ConflictError when two norms induce incompatible rows for the same
// (variable, total parent context); std::invalid_argument past kMaxParents.
// Warnings (bare P norms) are appended to *warnings when given.
CPNet compile(const NormSet& set, std::vector<std::string>* warnings = nullptr);

// Expanded rows for one variable, context-indexed. Same errors as compile.
std::vector<CompiledRow> expand_contexts(const NormSet& set, AtomId variable);

// Exhaustive conflict listing; empty iff compile succeeds.
std::vector<ConflictReport> detect_conflicts(const NormSet& set);

// Parent sets induced by the edge rule (union of condition atoms over
// norms targeting each variable), ascending per variable.
std::vector<std::vector<std::uint32_t>> derive_parents(const NormSet& set);

std::string describe_conflict(const NormSet& set, const ConflictReport& report);

}  // namespace deonet

#endif
