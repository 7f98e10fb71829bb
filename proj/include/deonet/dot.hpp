#ifndef DEONET_DOT_HPP
#define DEONET_DOT_HPP

#include <string>

#include "deonet/cpnet.hpp"
#include "deonet/preorder.hpp"

namespace deonet {

// Dependency digraph with each variable's CPT rows in its node label.
std::string dot_dependency(const CPNet& net);

// Induced preference graph. Edges point better -> worse; indifference pairs
// become one dir=both edge. With merge_indifference, outcomes that differ
// only on all-indifferent variables collapse into one node.
std::string dot_induced(const PreferenceGraph& graph, bool merge_indifference);

}  // namespace deonet

#endif
