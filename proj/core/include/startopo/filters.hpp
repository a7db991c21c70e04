#pragma once

#include <vector>

#include "startopo/sets.hpp"

namespace startopo {

/// A filter on a finite universe, stored by its core. Every filter on a
/// finite set is the up-set of the intersection of its members, so the core
/// determines the filter completely; the member family is materialized on
/// demand by filter_members. The core must be nonempty (the empty set never
/// belongs to a filter).
class filter {
public:
    filter(universe u, point_set core) : u_(u), core_(core) {
        require_same(u, core.space());
        if (core.is_empty())
            throw error(errc::empty_core, "a filter core must be nonempty");
    }

    universe space() const noexcept { return u_; }
    const point_set& core() const noexcept { return core_; }
    bool contains(const point_set& a) const { return core_.subset_of(a); }

    friend bool operator==(const filter&, const filter&) = default;

private:
    universe u_;
    point_set core_;
};

/// The principal ultrafilter at a point: all sets containing it.
class beta_point {
public:
    beta_point(universe u, int point) : u_(u), point_(point) { require_point(u, point); }

    universe space() const noexcept { return u_; }
    int point() const noexcept { return point_; }
    bool contains(const point_set& a) const {
        require_same(u_, a.space());
        return a.contains(point_);
    }
    filter as_filter() const { return {u_, point_set::single(u_, point_)}; }

    friend bool operator==(const beta_point&, const beta_point&) = default;

private:
    universe u_;
    int point_;
};

/// Builds the filter generated by a filter base. The base must be nonempty,
/// contain no empty set, and be directed: any two members must contain a
/// third member inside their intersection. Non-directed input is rejected
/// rather than repaired, since it is not a filter base at all.
filter filter_from_base(const set_family& base);

/// The full member family {A : core <= A}, of size 2^(n - |core|).
set_family filter_members(const filter& f);

/// True iff the filter is maximal, which over a finite universe means the
/// core is a single point.
bool is_ultrafilter(const filter& f);

/// The ultrafilters refining f: exactly the principal points of its core.
std::vector<beta_point> ultrafilters_containing(const filter& f);

/// The extension of f to principal ultrafilters: the image of the point.
/// Satisfies the membership law  A in apply_beta(f, p)  <=>  preimage(A) in p.
beta_point apply_beta(const space_map& f, const beta_point& p);

struct beta_fixed_point {
    bool via_beta;      // apply_beta(f, p) == p
    bool via_fixed_set; // {x : f(x) = x} is a member of p
};

/// Evaluates both sides of the fixed-point criterion for an endo map; the two
/// agree on every input.
beta_fixed_point beta_fixed_point_iff(const space_map& f, const beta_point& p);

} // namespace startopo
