#include "deonet/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace deonet {

namespace {

std::string value_name(const CPNet& net, std::uint32_t var, bool positive) {
  return positive ? net.variables[var] : "!" + net.variables[var];
}

std::string row_label(const CPNet& net, std::uint32_t var, std::uint32_t ctx) {
  const auto& parents = net.parents[var];
  std::string label;
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (k) label += ' ';
    label += value_name(net, parents[k], ((ctx >> k) & 1u) != 0);
  }
  if (!label.empty()) label += ": ";

  const CompiledRow& row = net.cpt[var][ctx];
  if (row.kind == RowKind::Strict) {
    label += value_name(net, var, row.preferred) + " > " +
             value_name(net, var, !row.preferred);
  } else {
    label += value_name(net, var, true) + " ~ " + value_name(net, var, false);
  }
  return label;
}

}  // namespace

std::string dot_dependency(const CPNet& net) {
  std::ostringstream out;
  out << "digraph cpnet {\n  node [shape=circle];\n";
  for (std::uint32_t var = 0; var < net.size(); ++var) {
    out << "  \"" << net.variables[var] << "\" [label=\"" << net.variables[var];
    for (std::uint32_t ctx = 0; ctx < net.cpt[var].size(); ++ctx) {
      if (net.cpt[var][ctx].kind == RowKind::Absent) continue;
      out << "\\n" << row_label(net, var, ctx);
    }
    out << "\"];\n";
  }
  for (auto [parent, child] : net.edges())
    out << "  \"" << net.variables[parent] << "\" -> \"" << net.variables[child]
        << "\";\n";
  out << "}\n";
  return out.str();
}

std::string dot_induced(const PreferenceGraph& graph, bool merge_indifference) {
  const CPNet& net = graph.net();
  Outcome count = graph.num_outcomes();

  // node id per outcome; with merging, several outcomes share one id
  std::vector<std::uint32_t> node_of(count, 0);
  std::vector<std::vector<Outcome>> nodes;
  if (merge_indifference) {
    nodes = indifference_merged_nodes(graph);
    for (std::uint32_t id = 0; id < nodes.size(); ++id)
      for (Outcome o : nodes[id]) node_of[o] = id;
  } else {
    nodes.reserve(count);
    for (Outcome o = 0; o < count; ++o) {
      node_of[o] = o;
      nodes.push_back({o});
    }
  }

  std::ostringstream out;
  out << "digraph induced {\n  node [shape=box];\n";
  for (std::uint32_t id = 0; id < nodes.size(); ++id) {
    out << "  n" << id << " [label=\"";
    for (std::size_t k = 0; k < nodes[id].size(); ++k) {
      if (k) out << "\\n";
      out << format_outcome_compact(net, nodes[id][k]);
    }
    out << "\"];\n";
  }

  // Deduplicated node-level flip edges, better -> worse; indifference once.
  struct EdgeBundle {
    bool fwd = false;   // strict, lower node id better
    bool bwd = false;   // strict, higher node id better
    bool indiff = false;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, EdgeBundle> edges;
  for (Outcome o = 0; o < count; ++o) {
    for (std::uint32_t var = 0; var < net.size(); ++var) {
      Outcome u = o ^ (Outcome{1} << var);
      if (u < o) continue;  // visit each pair once
      std::uint32_t a = node_of[o], b = node_of[u];
      if (a == b) continue;
      EdgeBundle& bundle = edges[std::minmax(a, b)];
      switch (graph.flip(o, var)) {
        case FlipVerdict::Better: (a < b ? bundle.fwd : bundle.bwd) = true; break;
        case FlipVerdict::Worse: (a < b ? bundle.bwd : bundle.fwd) = true; break;
        case FlipVerdict::Indifferent: bundle.indiff = true; break;
        case FlipVerdict::Incomparable: break;
      }
    }
  }
  for (const auto& [pair, bundle] : edges) {
    if (bundle.fwd)
      out << "  n" << pair.first << " -> n" << pair.second << ";\n";
    if (bundle.bwd)
      out << "  n" << pair.second << " -> n" << pair.first << ";\n";
    if (bundle.indiff)
      out << "  n" << pair.first << " -> n" << pair.second
          << " [dir=both style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace deonet
