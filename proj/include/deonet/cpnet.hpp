#ifndef DEONET_CPNET_HPP
#define DEONET_CPNET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deonet/norms.hpp"

// A CP-net with indifference over binary variables. Each variable carries a
// dense conditional preference table: one row per total assignment to its
// parents, each row strict, indifferent, or absent. Outcomes are bit vectors
// under the net's variable order (bit i = value of variables[i], 1 = the
// positive value).

namespace deonet {

// Bit i of an Outcome holds the value of variable i.
using Outcome = std::uint32_t;

enum class RowKind { Strict, Indifferent, Absent };

struct CompiledRow {
  RowKind kind = RowKind::Absent;
  bool preferred = false;                  // meaningful when kind == Strict
  std::vector<std::uint32_t> provenance;   // indices of the norms behind it

  friend bool operator==(const CompiledRow&, const CompiledRow&) = default;
};

struct CPNet {
  std::vector<std::string> variables;               // first-appearance order
  std::vector<std::vector<std::uint32_t>> parents;  // per variable, ascending
  std::vector<std::vector<CompiledRow>> cpt;        // [var][context], 2^|parents|

  std::uint32_t size() const { return static_cast<std::uint32_t>(variables.size()); }
  Outcome num_outcomes() const { return Outcome{1} << variables.size(); }

  std::optional<std::uint32_t> var_index(std::string_view name) const;

  // Packs the values of var's parents in `o` into a CPT row index.
  std::uint32_t context_of(std::uint32_t var, Outcome o) const;
  const CompiledRow& row_for(std::uint32_t var, Outcome o) const {
    return cpt[var][context_of(var, o)];
  }

  // Dependency edges (parent, child), sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  friend bool operator==(const CPNet&, const CPNet&) = default;
};

// Verdict of a single-variable ceteris-paribus flip, seen from the first
// argument: Better means the first outcome is preferred.
enum class FlipVerdict { Better, Worse, Indifferent, Incomparable };

FlipVerdict flip_swap(FlipVerdict v);  // verdict seen from the other side

// Compares the flip of variable `var` away from `o`, i.e. o vs o with that
// bit toggled, by the variable's row under o's parent assignment.
FlipVerdict flip_verdict(const CPNet& net, Outcome o, std::uint32_t var);

// Compares two outcomes at Hamming distance 1; nullopt when they are not a
// flip pair (distance != 1). Throws std::invalid_argument if an outcome has
// bits outside the net's variables.
std::optional<FlipVerdict> flip_compare(const CPNet& net, Outcome o, Outcome u);

// All outcomes one worsening flip away from o, ascending.
std::vector<Outcome> worsening_flips(const CPNet& net, Outcome o);

bool is_acyclic_dependency(const CPNet& net);

// Outcome text form: comma-separated literals, e.g. "not c,d,f,w,b".
// Every variable must be assigned exactly once.
Outcome parse_outcome(const CPNet& net, std::string_view text);
std::string format_outcome(const CPNet& net, Outcome o);
// Compact form for graph labels: "!c d f w b".
std::string format_outcome_compact(const CPNet& net, Outcome o);

void check_outcome(const CPNet& net, Outcome o);  // range guard

}  // namespace deonet

#endif
