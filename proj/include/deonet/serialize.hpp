#ifndef DEONET_SERIALIZE_HPP
#define DEONET_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "deonet/compiler.hpp"
#include "deonet/cpnet.hpp"
#include "deonet/norms.hpp"
#include "deonet/preorder.hpp"
#include "deonet/reasoner.hpp"

// Structured output schema ("deonet/1"). Key order is fixed so identical
// inputs serialize byte-identically.

namespace deonet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "deonet/1";

Json envelope(const std::string& command);  // {"schema":..., "command":...}

Json norms_to_json(const NormSet& set);
Json net_to_json(const NormSet& set, const CPNet& net);
Json conflicts_to_json(const NormSet& set, const std::vector<ConflictReport>& reports);
Json graph_to_json(const PreferenceGraph& graph, bool merge_indifference);
Json dominance_to_json(const CPNet& net, const DominanceResult& result);
Json consistency_to_json(const CPNet& net, const ConsistencyReport& report);
Json permission_to_json(const CPNet& net, std::uint32_t variable, bool positive,
                        const PermissionStatus& status);
Json ctd_to_json(const NormSet& set, const std::vector<CtdPair>& pairs);
Json norm_set_check_to_json(const NormSet& set, const CPNet& net,
                      const NormSetCheck& report);

std::string relation_name(Relation r);
std::string permission_kind_name(PermissionKind k);

}  // namespace deonet

#endif
