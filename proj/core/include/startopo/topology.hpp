#pragma once

#include <vector>

#include "startopo/sets.hpp"

namespace startopo {

/// A topology on a finite universe: the family of open sets, canonically
/// sorted by encoded mask value. Construction always validates the axioms
/// (empty and full set present, closure under pairwise union and
/// intersection; on a finite carrier pairwise closure covers the arbitrary
/// cases).
class topology {
public:
    topology(universe u, const set_family& opens);

    static topology discrete(universe u);
    static topology indiscrete(universe u);

    universe space() const noexcept { return u_; }
    const std::vector<mask_t>& opens() const noexcept { return opens_; }
    set_family open_family() const { return {u_, opens_}; }
    bool is_open(mask_t m) const;
    bool is_open(const point_set& s) const {
        require_same(u_, s.space());
        return is_open(s.bits());
    }
    bool is_closed(mask_t m) const { return is_open(u_.full_mask() & ~m); }

    friend bool operator==(const topology&, const topology&) = default;

private:
    universe u_;
    std::vector<mask_t> opens_;
};

/// Non-throwing axiom scan used by enumeration oracles; returns true iff the
/// family is a topology over u.
bool is_topology_family(universe u, const std::vector<mask_t>& masks);

topology topology_from_opens(universe u, const set_family& family);

/// Smallest topology containing the family. Computed through the minimal
/// basic neighborhood of each point (the intersection of all subbase members
/// containing it): a set is open iff it contains that neighborhood around
/// each of its points.
topology topology_from_subbase(universe u, const set_family& family);

/// Smallest closed superset: the complement of the union of all open sets
/// disjoint from a.
point_set closure(const topology& t, const point_set& a);

/// Union of all open subsets of a.
point_set interior(const topology& t, const point_set& a);

/// Intersection of all open sets containing x; open in every finite topology.
point_set min_nbhd(const topology& t, int x);

/// All neighborhoods of x, i.e. the up-set of min_nbhd(t, x).
set_family neighborhood_filter(const topology& t, int x);

/// Classical compactness of a subset: every open cover has a finite
/// subcover. Always true over a finite universe; the cover scan is kept as
/// the oracle side of the compactness equivalence.
bool is_compact_subset(const topology& t, const point_set& a);

std::vector<mask_t> closed_set_masks(const topology& t);

/// An assignment x -> star set of x. Star sets collect the points whose
/// principal ultrafilters converge to x; the self-membership x in stars(x)
/// is required on construction.
class star_system {
public:
    star_system(universe u, std::vector<mask_t> stars);

    universe space() const noexcept { return u_; }
    const std::vector<mask_t>& masks() const noexcept { return stars_; }
    point_set star_of(int x) const {
        require_point(u_, x);
        return {u_, stars_[static_cast<std::size_t>(x)]};
    }

    /// True iff the system is transitive, i.e. the relation "y in stars(x)"
    /// is a preorder (it is reflexive by construction).
    bool is_preorder() const;

    friend bool operator==(const star_system&, const star_system&) = default;

private:
    universe u_;
    std::vector<mask_t> stars_;
};

/// The specialization system of a topology: x -> {y : x in cl{y}}. Each
/// image equals the minimal open neighborhood of x.
star_system specialization(const topology& t);

/// The topology whose opens are exactly the sets closed under the star map:
/// U is open iff stars(x) <= U for every x in U. For any self-containing
/// system this family satisfies the topology axioms.
topology alexandrov_from_stars(const star_system& sys);

} // namespace startopo
