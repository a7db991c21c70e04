#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "startopo/filters.hpp"
#include "startopo/topology.hpp"

// Star calculus over a finite universe. Every ultrafilter on a finite set is
// principal, so the ultrafilter space is identified with the points
// themselves and the ultrafilter-space closure of a set A is A itself. Under
// that identification a star set becomes an ordinary subset of the universe,
// and the statements below become decidable by direct scans.

namespace startopo {

/// The star set of x: the points whose principal ultrafilters converge to x,
/// i.e. {y : x in cl{y}}. Computed through closures; it always coincides
/// with min_nbhd(t, x), which the tests check as a separate route.
point_set star(const topology& t, int x);

/// Per-topology cache of the singleton closures and the star sets derived
/// from them; the hot scans below build one per space instead of recomputing
/// closures point by point.
struct star_table {
    universe space;
    std::vector<mask_t> singleton_closures; // by point
    std::vector<mask_t> stars;              // by point

    explicit star_table(const topology& t);

    mask_t star_of(int x) const { return stars[static_cast<std::size_t>(x)]; }
    /// {y : cl{y} meets f}; agrees with f_star on nonempty f.
    mask_t f_star_of(mask_t f) const {
        mask_t out = 0;
        for (int y = 0; y < space.size(); ++y)
            if (singleton_closures[static_cast<std::size_t>(y)] & f)
                out |= static_cast<mask_t>(1u << y);
        return out;
    }
};

struct boundedness {
    point_set bounded;   // union of all star sets
    point_set unbounded; // its complement; empty over a finite universe
};

boundedness bounded_and_unbounded(const topology& t);

/// The star set of a nonempty subset F: the points y whose singleton closure
/// meets F. Contains star(t, x) for every x in F.
point_set f_star(const topology& t, const point_set& f_set);

struct clause_result {
    std::string clause;
    bool holds;
    std::string witness; // empty when the clause holds
};

struct lemma31_report {
    std::vector<clause_result> clauses;
    bool all_hold() const {
        for (const auto& c : clauses)
            if (!c.holds) return false;
        return true;
    }
};

/// Evaluates the five neighborhood/star clauses (b)-(f) as universally
/// quantified statements over the space; all of them hold for every finite
/// topology, and any failure is reported with a witness.
lemma31_report lemma31_checks(const topology& t);

/// Star-side compactness of a subset: every principal point of a lies in the
/// star of some point of a.
bool robinson_compact(const topology& t, const point_set& a);

/// Star criterion for continuity: f maps the star of x into the star of
/// f(x), for every x. Equivalent to the classical preimage criterion.
bool is_continuous_stars(const topology& tX, const topology& tY, const space_map& f);

/// Classical oracle: preimages of opens are open.
bool is_continuous_classical(const topology& tX, const topology& tY, const space_map& f);

/// First open of tY whose preimage is not open, if any (canonical order).
std::optional<point_set> continuity_witness_open(const topology& tX, const topology& tY,
                                                 const space_map& f);

/// Star criterion for open maps (f must be continuous): the star of f(x) is
/// contained in the image of the star of x, for every x.
bool is_open_map_stars(const topology& tX, const topology& tY, const space_map& f);

/// Classical oracle: images of opens are open.
bool is_open_map_classical(const topology& tX, const topology& tY, const space_map& f);

/// First open of tX with a non-open image, if any.
std::optional<point_set> open_map_witness_open(const topology& tX, const topology& tY,
                                               const space_map& f);

/// Star-side check that the image of a compact subset under a continuous map
/// is compact; always true here.
bool image_compact_check(const topology& tX, const topology& tY, const space_map& f,
                         const point_set& k);

struct fixed_point_witness {
    int x;
    beta_point p;
    beta_point q;
};

struct fixed_point_result {
    bool exists;
    std::optional<fixed_point_witness> witness;
};

/// Star criterion for fixed points of a continuous endo map, taken exactly
/// as stated: some x admits p, q in star(t, x) with f applied to p giving q.
/// The scan is canonical (smallest x, then smallest p). Note that over
/// non-Hausdorff spaces this criterion can hold for fixed-point-free maps;
/// the verification suite documents that finding rather than suppressing it.
fixed_point_result fixed_point_via_stars(const topology& t, const space_map& f);

struct partition_meet_result {
    bool holds;
    /// A partition all of whose cells miss their image, when holds is false.
    std::optional<std::vector<point_set>> violating_partition;
};

/// True iff every partition of the universe into at most max_cells cells has
/// a cell C with C meeting f(C). With max_cells = n this is exact. Capped at
/// n <= 8 (Bell(8) = 4140 partitions).
partition_meet_result partition_cell_meets(const space_map& f, int max_cells);

/// For an injective, fixed-point-free endo map (a permutation with all
/// cycles of length >= 2), produces a cover A0, A1, A2 of the universe with
/// f(Ai) disjoint from Ai for each i. Cycles are traversed from their
/// minimal point, labels alternate 0, 1 along each cycle, and the last point
/// of each odd cycle is moved to label 2, which makes the output canonical.
std::array<point_set, 3> three_partition(const space_map& f);

} // namespace startopo
