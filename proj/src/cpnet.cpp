#include "deonet/cpnet.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace deonet {

std::optional<std::uint32_t> CPNet::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint32_t CPNet::context_of(std::uint32_t var, Outcome o) const {
  const auto& ps = parents[var];
  std::uint32_t ctx = 0;
  for (std::size_t k = 0; k < ps.size(); ++k)
    ctx |= ((o >> ps[k]) & 1u) << k;
  return ctx;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CPNet::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t child = 0; child < size(); ++child)
    for (std::uint32_t parent : parents[child]) out.emplace_back(parent, child);
  std::sort(out.begin(), out.end());
  return out;
}

void check_outcome(const CPNet& net, Outcome o) {
  if (net.size() >= 32) throw std::invalid_argument("net too large for outcomes");
  if (o >= net.num_outcomes())
    throw std::invalid_argument("outcome has bits outside the net's variables");
}

FlipVerdict flip_swap(FlipVerdict v) {
  switch (v) {
    case FlipVerdict::Better: return FlipVerdict::Worse;
    case FlipVerdict::Worse: return FlipVerdict::Better;
    default: return v;
  }
}

FlipVerdict flip_verdict(const CPNet& net, Outcome o, std::uint32_t var) {
  const CompiledRow& row = net.row_for(var, o);
  switch (row.kind) {
    case RowKind::Strict:
      return ((o >> var) & 1u) == static_cast<unsigned>(row.preferred)
                 ? FlipVerdict::Better
                 : FlipVerdict::Worse;
    case RowKind::Indifferent: return FlipVerdict::Indifferent;
    case RowKind::Absent: return FlipVerdict::Incomparable;
  }
  throw std::logic_error("unreachable");
}

std::optional<FlipVerdict> flip_compare(const CPNet& net, Outcome o, Outcome u) {
  check_outcome(net, o);
  check_outcome(net, u);
  Outcome diff = o ^ u;
  if (std::popcount(diff) != 1) return std::nullopt;
  std::uint32_t var = static_cast<std::uint32_t>(std::countr_zero(diff));
  // Only `var` differs, so o and u share the parent assignment.
  return flip_verdict(net, o, var);
}

std::vector<Outcome> worsening_flips(const CPNet& net, Outcome o) {
  check_outcome(net, o);
  std::vector<Outcome> out;
  for (std::uint32_t var = 0; var < net.size(); ++var)
    if (flip_verdict(net, o, var) == FlipVerdict::Better)
      out.push_back(o ^ (Outcome{1} << var));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic_dependency(const CPNet& net) {
  // DFS 3-color over parent -> child edges.
  enum { White, Grey, Black };
  std::vector<int> color(net.size(), White);
  std::vector<std::vector<std::uint32_t>> children(net.size());
  for (std::uint32_t child = 0; child < net.size(); ++child)
    for (std::uint32_t parent : net.parents[child]) children[parent].push_back(child);

  for (std::uint32_t start = 0; start < net.size(); ++start) {
    if (color[start] != White) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{start, 0}};
    color[start] = Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < children[node].size()) {
        std::uint32_t child = children[node][next++];
        if (color[child] == Grey) return false;
        if (color[child] == White) {
          color[child] = Grey;
          stack.emplace_back(child, 0);
        }
      } else {
        color[node] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

Outcome parse_outcome(const CPNet& net, std::string_view text) {
  std::vector<int> assigned(net.size(), -1);
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = trim(text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (part.empty()) {
      if (comma == std::string_view::npos) break;
      throw std::invalid_argument("empty entry in outcome");
    }
    bool positive = true;
    if (part.starts_with("not") && part.size() > 3 &&
        (part[3] == ' ' || part[3] == '\t')) {
      positive = false;
      part = trim(part.substr(3));
    }
    auto var = net.var_index(part);
    if (!var)
      throw std::invalid_argument("unknown atom '" + std::string(part) +
                                  "' in outcome");
    if (assigned[*var] != -1)
      throw std::invalid_argument("atom '" + std::string(part) +
                                  "' assigned twice in outcome");
    assigned[*var] = positive ? 1 : 0;
  }
  Outcome o = 0;
  for (std::uint32_t i = 0; i < net.size(); ++i) {
    if (assigned[i] == -1)
      throw std::invalid_argument("outcome does not assign atom '" +
                                  net.variables[i] + "'");
    o |= static_cast<Outcome>(assigned[i]) << i;
  }
  return o;
}

std::string format_outcome(const CPNet& net, Outcome o) {
  std::string out;
  for (std::uint32_t i = 0; i < net.size(); ++i) {
    if (i) out += ',';
    if (((o >> i) & 1u) == 0) out += "not ";
    out += net.variables[i];
  }
  return out;
}

std::string format_outcome_compact(const CPNet& net, Outcome o) {
  std::string out;
  for (std::uint32_t i = 0; i < net.size(); ++i) {
    if (i) out += ' ';
    if (((o >> i) & 1u) == 0) out += '!';
    out += net.variables[i];
  }
  return out;
}

}  // namespace deonet
