#include "deonet/norms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace deonet {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_reserved(std::string_view word) {
  return word == "not" || word == "IF" || word == "AND";
}

// Cursor over a single line. Columns are 1-based for error messages.
struct LineLexer {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 1;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  int column() const { return static_cast<int>(pos) + 1; }

  [[noreturn]] void fail(const std::string& msg, int col = -1) const {
    throw ParseError(line_no, col < 0 ? column() : col, msg);
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  // Reads an identifier-shaped word without consuming it on failure.
  std::optional<std::string_view> try_word() {
    skip_ws();
    if (pos >= text.size() || !is_ident_start(text[pos])) return std::nullopt;
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
};

// Accumulates atoms in first-appearance order.
struct AtomTable {
  std::vector<std::string> names;
  std::map<std::string, AtomId, std::less<>> index;

  AtomId intern(std::string_view name) {
    if (auto it = index.find(name); it != index.end()) return it->second;
    AtomId id = static_cast<AtomId>(names.size());
    names.emplace_back(name);
    index.emplace(names.back(), id);
    return id;
  }
};

Literal parse_literal_token(LineLexer& lex, AtomTable& atoms) {
  int col = lex.column();
  auto word = lex.try_word();
  if (!word) lex.fail("expected a literal (name or 'not name')");
  bool positive = true;
  if (*word == "not") {
    positive = false;
    col = lex.column();
    word = lex.try_word();
    if (!word) lex.fail("expected an atom name after 'not'");
  }
  if (is_reserved(*word))
    lex.fail("'" + std::string(*word) + "' is a reserved word", col);
  return Literal{atoms.intern(*word), positive};
}

// Parses one norm line: KIND '(' lit [IF lit (AND lit)*] ')'.
Norm parse_norm_line(LineLexer& lex, AtomTable& atoms, std::string_view kind_word) {
  NormKind kind;
  if (kind_word == "O")
    kind = NormKind::Obligation;
  else if (kind_word == "P")
    kind = NormKind::Permission;
  else if (kind_word == "L")
    kind = NormKind::Liberty;
  else
    lex.fail("expected a norm O(...), P(...), L(...) or an 'atom' declaration",
             lex.column() - static_cast<int>(kind_word.size()));

  lex.expect('(');
  Literal consequent = parse_literal_token(lex, atoms);

  std::vector<Literal> condition;
  char next = lex.peek();
  if (next != ')') {
    int col = lex.column();
    auto word = lex.try_word();
    if (!word) lex.fail("expected 'IF' or ')'");
    if (*word == "AND" || *word == "and")
      lex.fail("consequent must be a single literal", col);
    if (*word == "or" || *word == "OR")
      lex.fail("disjunction is not allowed in norms", col);
    if (*word != "IF") lex.fail("expected 'IF' or ')'", col);

    for (;;) {
      int lit_col = lex.column();
      Literal lit = parse_literal_token(lex, atoms);
      if (lit.atom == consequent.atom)
        lex.fail("norm conditions on its own consequent atom '" +
                     atoms.names[lit.atom] + "'",
                 lit_col);
      for (const Literal& prev : condition) {
        if (prev.atom != lit.atom) continue;
        if (prev.positive != lit.positive)
          lex.fail("inconsistent condition: both '" + atoms.names[lit.atom] +
                       "' and its negation",
                   lit_col);
        // exact duplicate literal: keep one
        lit.atom = UINT32_MAX;
        break;
      }
      if (lit.atom != UINT32_MAX) condition.push_back(lit);

      next = lex.peek();
      if (next == ')') break;
      int col2 = lex.column();
      auto sep = lex.try_word();
      if (!sep) lex.fail("expected 'AND' or ')'");
      if (*sep == "or" || *sep == "OR")
        lex.fail("disjunction is not allowed in norms", col2);
      if (*sep != "AND") lex.fail("expected 'AND' or ')'", col2);
    }
  }
  lex.expect(')');
  if (!lex.at_end()) lex.fail("trailing input after norm");

  std::sort(condition.begin(), condition.end(),
            [](const Literal& a, const Literal& b) { return a.atom < b.atom; });
  Norm norm;
  norm.kind = kind;
  norm.condition.literals = std::move(condition);
  norm.consequent = consequent;
  norm.line = lex.line_no;
  return norm;
}

}  // namespace

bool Condition::contains(Literal lit) const {
  for (const Literal& l : literals)
    if (l == lit) return true;
  return false;
}

std::optional<bool> Condition::value_of(AtomId atom) const {
  for (const Literal& l : literals)
    if (l.atom == atom) return l.positive;
  return std::nullopt;
}

bool Condition::consistent_with(const Condition& other) const {
  for (const Literal& l : literals) {
    auto v = other.value_of(l.atom);
    if (v && *v != l.positive) return false;
  }
  return true;
}

Condition make_condition(std::vector<Literal> literals) {
  std::sort(literals.begin(), literals.end(),
            [](const Literal& a, const Literal& b) { return a.atom < b.atom; });
  std::vector<Literal> out;
  for (const Literal& l : literals) {
    if (!out.empty() && out.back().atom == l.atom) {
      if (out.back().positive != l.positive)
        throw std::invalid_argument(
            "contradictory condition: an atom and its negation");
      continue;
    }
    out.push_back(l);
  }
  return Condition{std::move(out)};
}

std::optional<AtomId> NormSet::find_atom(std::string_view name) const {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == name) return static_cast<AtomId>(i);
  return std::nullopt;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

ParseResult parse_norms(std::string_view source) {
  ParseResult result;
  AtomTable atoms;

  int line_no = 0;
  std::size_t offset = 0;
  while (offset <= source.size()) {
    std::size_t eol = source.find('\n', offset);
    std::string_view raw = source.substr(
        offset, eol == std::string_view::npos ? source.size() - offset
                                              : eol - offset);
    ++line_no;
    if (eol == std::string_view::npos && raw.empty() && offset == source.size() &&
        line_no > 1)
      break;
    offset = eol == std::string_view::npos ? source.size() + 1 : eol + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    LineLexer lex{raw, 0, line_no};
    if (lex.at_end()) continue;

    int word_col = lex.column();
    auto word = lex.try_word();
    if (!word) lex.fail("expected a norm or an 'atom' declaration");

    if (*word == "atom") {
      bool any = false;
      while (!lex.at_end()) {
        int col = lex.column();
        auto name = lex.try_word();
        if (!name) lex.fail("expected an atom name");
        if (is_reserved(*name))
          lex.fail("'" + std::string(*name) + "' is a reserved word", col);
        atoms.intern(*name);
        any = true;
      }
      if (!any) lex.fail("'atom' declaration lists no names", word_col);
      continue;
    }

    Norm norm = parse_norm_line(lex, atoms, *word);
    bool duplicate = false;
    for (const Norm& prev : result.norms.norms) {
      if (prev == norm) {
        result.warnings.push_back("line " + std::to_string(line_no) +
                                  ": duplicate of the norm on line " +
                                  std::to_string(prev.line) + ", ignored");
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.norms.norms.push_back(std::move(norm));
  }

  result.norms.atoms = std::move(atoms.names);
  return result;
}

Norm desugar(Norm norm) {
  norm.condition = make_condition(std::move(norm.condition.literals));
  if (norm.condition.value_of(norm.consequent.atom))
    throw std::invalid_argument("norm conditions on its own consequent atom");
  return norm;
}

std::string format_literal(const NormSet& set, Literal lit) {
  std::string out;
  if (!lit.positive) out += "not ";
  out += set.atom_name(lit.atom);
  return out;
}

std::string format_norm(const NormSet& set, const Norm& norm) {
  std::string out;
  switch (norm.kind) {
    case NormKind::Obligation: out = "O("; break;
    case NormKind::Permission: out = "P("; break;
    case NormKind::Liberty: out = "L("; break;
  }
  out += format_literal(set, norm.consequent);
  bool first = true;
  for (const Literal& lit : norm.condition.literals) {
    out += first ? " IF " : " AND ";
    first = false;
    out += format_literal(set, lit);
  }
  out += ')';
  return out;
}

std::string format_norms(const NormSet& set) {
  std::string out;
  if (!set.atoms.empty()) {
    out += "atom";
    for (const std::string& a : set.atoms) {
      out += ' ';
      out += a;
    }
    out += '\n';
  }
  for (const Norm& n : set.norms) {
    out += format_norm(set, n);
    out += '\n';
  }
  return out;
}

Literal parse_literal(const NormSet& set, std::string_view text) {
  LineLexer lex{text, 0, 1};
  AtomTable scratch;
  Literal lit = parse_literal_token(lex, scratch);
  if (!lex.at_end()) lex.fail("trailing input after literal");
  auto id = set.find_atom(scratch.names[lit.atom]);
  if (!id)
    throw std::invalid_argument("unknown atom '" + scratch.names[lit.atom] + "'");
  return Literal{*id, lit.positive};
}

std::pair<Literal, Condition> parse_literal_query(const NormSet& set,
                                                  std::string_view text) {
  LineLexer lex{text, 0, 1};
  AtomTable scratch;
  Literal lit = parse_literal_token(lex, scratch);
  std::vector<Literal> context;
  if (!lex.at_end()) {
    int col = lex.column();
    auto word = lex.try_word();
    if (!word || *word != "IF") lex.fail("expected 'IF'", col);
    for (;;) {
      context.push_back(parse_literal_token(lex, scratch));
      if (lex.at_end()) break;
      int col2 = lex.column();
      auto sep = lex.try_word();
      if (!sep || *sep != "AND") lex.fail("expected 'AND'", col2);
    }
  }
  auto resolve = [&](Literal l) {
    auto id = set.find_atom(scratch.names[l.atom]);
    if (!id)
      throw std::invalid_argument("unknown atom '" + scratch.names[l.atom] + "'");
    return Literal{*id, l.positive};
  };
  Literal out = resolve(lit);
  std::vector<Literal> ctx;
  ctx.reserve(context.size());
  for (Literal l : context) ctx.push_back(resolve(l));
  return {out, make_condition(std::move(ctx))};
}

}  // namespace deonet
