#pragma once

// Shared helpers of the limits translation units.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glim/limits.hpp"

namespace glim::detail {

using nlohmann::json;

bool is_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

json make_cert(const std::string& kind, Tri v, const std::string& reason);
Verdict verdict(Tri v, json cert);

/// Product of the labels a_from .. a_to (inclusive, 1-based), barred if asked.
GroupRingElem label_product(const LimitDescriptor& d, long from, long to, bool barred);

/// (position in S, prime p) such that no z * prod(pre) * prod(cyc)^m is
/// integral on that coordinate, read off p-adic valuations of norms.
std::optional<std::pair<int, unsigned long>> norm_obstruction(const ProjCoords& z, const std::vector<ProjCoords>& pre,
                                                              const std::vector<ProjCoords>& cyc);

/// Field norm after lifting to conductor L.
Rational norm_at(const CycNum& x, int L);

/// Whether the trivial character is among the orbits.
inline bool has_trivial(const std::vector<int>& S) { return !S.empty() && S.front() == 0; }

}  // namespace glim::detail
