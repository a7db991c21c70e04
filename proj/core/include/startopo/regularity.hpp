#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "startopo/filters.hpp"
#include "startopo/topology.hpp"

namespace startopo {

/// A nonempty family of nonempty subsets, the carrier for partition
/// regularity checks.
class regular_family {
public:
    regular_family(universe u, set_family sets);

    universe space() const noexcept { return u_; }
    const set_family& sets() const noexcept { return sets_; }

    friend bool operator==(const regular_family&, const regular_family&) = default;

private:
    universe u_;
    set_family sets_;
};

/// All supersets of members of the family.
set_family upward_closure(const regular_family& r);

struct regularity_witness {
    point_set member;              // the C in r being split
    std::vector<point_set> cells;  // a partition of C none of whose cells contains a member
};

struct regularity_def_result {
    bool holds;
    std::optional<regularity_witness> witness;
};

/// Definition-level check: for every member C and every partition of C, some
/// cell contains a member of the family. Covers reduce to partitions, since
/// refining a cover only shrinks cells. Universe capped at 8 points.
regularity_def_result is_partition_regular_def(const regular_family& r);

struct regularity_uf_result {
    bool holds;
    /// Per family member, the point whose principal ultrafilter witnesses
    /// the membership chain; absent for the failing member.
    std::vector<std::optional<beta_point>> witnesses;
};

/// Ultrafilter-side check: every member contains a point whose singleton
/// lies in the upward closure (a principal ultrafilter fits between the
/// member and the closure exactly then).
regularity_uf_result is_partition_regular_uf(const regular_family& r);

struct theorem25_report {
    bool def_clause;        // (a)
    bool subfamily_clause;  // (b)
    bool ultrafilter_clause; // (c)
    bool subfamily_exhaustive;
    bool agree() const {
        return def_clause == subfamily_clause && subfamily_clause == ultrafilter_clause;
    }
};

/// Evaluates the three equivalent characterizations of partition regularity
/// and reports their verdicts. Clause (b) quantifies over families of
/// nonempty subsets with the finite-intersection-in-closure property; the
/// quantification is exhaustive for n <= 4 and seeded sampling is used for
/// n = 5, 6 (larger universes are rejected).
theorem25_report theorem_25_equivalence(const regular_family& r, std::uint64_t seed = 0);

/// The sets whose closure contains x; partition regular and upward closed,
/// and it contains every neighborhood of x.
regular_family family_R_x(const topology& t, int x);

/// The sets whose closure meets the nonempty set F; partition regular and
/// upward closed.
regular_family family_R_F(const topology& t, const point_set& f_set);

} // namespace startopo
