#ifndef DEONET_NORMS_HPP
#define DEONET_NORMS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// The restricted deontic norm language: conditional obligations O, unilateral
// permissions P and liberties (bilateral permissions) L over boolean atoms.
// Conditions are conjunctions of literals, consequents are single literals.
//
// Surface grammar (one norm per line):
//   O(<lit>)                 unconditional
//   O(<lit> IF <lit> [AND <lit>]...)
//   same for P and L
//   atom <name> [<name>]...  declares atoms that appear in no norm
//   <lit> ::= name | not name
//   '#' starts a comment; blank lines are ignored.
// `not`, `IF` and `AND` are reserved and cannot name atoms.

namespace deonet {

using AtomId = std::uint32_t;

struct Literal {
  AtomId atom = 0;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// A consistent conjunction of literals; empty means the trivial condition.
// Literals are kept sorted by atom id, at most one per atom.
struct Condition {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  bool contains(Literal lit) const;
  // Value this condition forces on `atom`, if any.
  std::optional<bool> value_of(AtomId atom) const;
  // True when no atom is assigned opposite values by the two conditions.
  bool consistent_with(const Condition& other) const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

// Builds a Condition from arbitrary literals: sorts, drops exact duplicates,
// throws std::invalid_argument on p AND not p.
Condition make_condition(std::vector<Literal> literals);

enum class NormKind { Obligation, Permission, Liberty };

struct Norm {
  NormKind kind = NormKind::Obligation;
  Condition condition;  // empty = unconditional
  Literal consequent;
  int line = 0;  // 1-based source line, 0 when built programmatically

  // Source position is not part of a norm's identity.
  friend bool operator==(const Norm& a, const Norm& b) {
    return a.kind == b.kind && a.condition == b.condition &&
           a.consequent == b.consequent;
  }
};

struct NormSet {
  std::vector<std::string> atoms;  // first-appearance order
  std::vector<Norm> norms;

  std::optional<AtomId> find_atom(std::string_view name) const;
  const std::string& atom_name(AtomId id) const { return atoms.at(id); }

  friend bool operator==(const NormSet&, const NormSet&) = default;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& what);
};

struct ParseResult {
  NormSet norms;
  std::vector<std::string> warnings;  // e.g. deduplicated duplicate norms
};

// Parses the surface grammar. Unconditional forms come out with an empty
// condition; L stays a single Liberty node. Duplicate norms are dropped with
// a warning. Throws ParseError with a 1-based line/column on bad input.
ParseResult parse_norms(std::string_view source);

// Normalizes a programmatically built norm: sorts and dedups the condition,
// rejects contradictory conditions and self-conditioning. Idempotent; the
// identity on anything parse_norms produces.
Norm desugar(Norm norm);

std::string format_literal(const NormSet& set, Literal lit);
std::string format_norm(const NormSet& set, const Norm& norm);
// Canonical file form: one `atom` header line (when the set has atoms)
// followed by one norm per line. parse_norms(format_norms(s)) == s.
std::string format_norms(const NormSet& set);

// Query helpers for the CLI: resolve "<lit>" / "<lit> IF <lit> [AND ...]"
// against an existing atom table. Throw std::invalid_argument on unknown
// atoms, ParseError on bad syntax.
Literal parse_literal(const NormSet& set, std::string_view text);
std::pair<Literal, Condition> parse_literal_query(const NormSet& set,
                                                  std::string_view text);

}  // namespace deonet

#endif
