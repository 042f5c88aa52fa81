#pragma once

// JSON forms of descriptors, group-ring elements and coordinates.
//
// Descriptor file:
//   {"group": [d1, ...], "x0": L, "prefix_labels": [L, ...], "cycle_labels": [L, ...],
//    "division": {"support_gens": [[..], ...], "beta": [[..], ...], "zeta_order": n}}
// with each label L a list of {"elem": [c1, ...], "mult": k}.

#include <string>

#include "json.hpp"
#include "glim/limits.hpp"

namespace glim {

using nlohmann::json;

json to_json(const CycNum& x);
CycNum cycnum_from_json(const json& j);

/// Terms sorted by element index; zero coefficients omitted.
json to_json(const GroupRingElem& x);
/// "mult" must be a positive integer when labels_only, any rational otherwise.
GroupRingElem group_ring_from_json(const FinAbGroup& G, const json& j, const std::string& where, bool labels_only);

json to_json(const ProjCoords& z);
ProjCoords proj_coords_from_json(const FinAbGroup& G, const json& j);

json to_json(const DivisionClass& D);
DivisionClass division_from_json(const FinAbGroup& G, const json& j, const std::string& where = "division");

json to_json(const LimitDescriptor& d);
/// Throws Error naming the offending key.
LimitDescriptor descriptor_from_json(const json& j);

}  // namespace glim
