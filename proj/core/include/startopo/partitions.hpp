#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "startopo/sets.hpp"

namespace startopo {

/// Visits every set partition of the given elements into at most max_cells
/// nonempty cells, each cell delivered as a bit mask. Partitions are
/// generated through restricted growth strings, so for a fixed element order
/// the visit order is deterministic. The visitor returns false to stop
/// early; the function returns false iff it was stopped.
///
/// The element count is capped at 12: Bell(12) is already 4 213 597 and the
/// intended callers stay at or below 8 elements (Bell(8) = 4140).
inline bool for_each_partition(const std::vector<int>& elems, int max_cells,
                               const std::function<bool(const std::vector<mask_t>&)>& visit) {
    const int k = static_cast<int>(elems.size());
    if (k > 12)
        throw error(errc::size_too_large, "partition enumeration capped at 12 elements");
    if (k == 0) {
        return visit({});
    }
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    std::vector<int> maxv(static_cast<std::size_t>(k), 0);
    std::vector<mask_t> cells;
    for (;;) {
        int ncells = 0;
        for (int i = 0; i < k; ++i) ncells = std::max(ncells, rgs[static_cast<std::size_t>(i)] + 1);
        if (ncells <= max_cells) {
            cells.assign(static_cast<std::size_t>(ncells), 0);
            for (int i = 0; i < k; ++i)
                cells[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |=
                    static_cast<mask_t>(1u << elems[static_cast<std::size_t>(i)]);
            if (!visit(cells)) return false;
        }
        // advance the restricted growth string: rgs[i] <= maxv[i-1] + 1
        int i = k - 1;
        while (i > 0) {
            if (rgs[static_cast<std::size_t>(i)] <= maxv[static_cast<std::size_t>(i - 1)]) break;
            --i;
        }
        if (i == 0) return true;
        ++rgs[static_cast<std::size_t>(i)];
        maxv[static_cast<std::size_t>(i)] =
            std::max(maxv[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < k; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxv[static_cast<std::size_t>(j)] = maxv[static_cast<std::size_t>(i)];
        }
    }
}

} // namespace startopo
