#pragma once

#include <string>
#include <vector>

#include "startopo/enumeration.hpp"
#include "startopo/topology.hpp"

namespace startopo::testutil {

// the two-point space with {1} open and {0} closed
inline topology sierpinski() {
    const universe u(2);
    return topology_from_opens(u, set_family::of(u, {{}, {1}, {0, 1}}));
}

// mirror of sierpinski: {0} open, {1} closed
inline topology sierpinski_flipped() {
    const universe u(2);
    return topology_from_opens(u, set_family::of(u, {{}, {0}, {0, 1}}));
}

inline std::vector<topology> small_topologies(int max_n) {
    std::vector<topology> out;
    for (int n = 1; n <= max_n; ++n)
        for_each_topology(n, [&](const topology& t) { out.push_back(t); });
    return out;
}

} // namespace startopo::testutil
