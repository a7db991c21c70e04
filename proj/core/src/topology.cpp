#include "startopo/topology.hpp"

#include <algorithm>

namespace startopo {

namespace {

struct axiom_violation {
    errc code;
    mask_t a;
    mask_t b;
};

std::optional<axiom_violation> scan_axioms(universe u, const std::vector<mask_t>& masks) {
    const auto has = [&](mask_t m) {
        return std::binary_search(masks.begin(), masks.end(), m);
    };
    if (!has(0) || !has(u.full_mask()))
        return axiom_violation{errc::missing_empty_or_full, 0, 0};
    for (mask_t a : masks) {
        for (mask_t b : masks) {
            if (!has(a | b)) return axiom_violation{errc::not_closed_under_union, a, b};
            if (!has(a & b)) return axiom_violation{errc::not_closed_under_intersection, a, b};
        }
    }
    return std::nullopt;
}

} // namespace

topology::topology(universe u, const set_family& opens) : u_(u), opens_(opens.masks()) {
    require_same(u, opens.space());
    if (auto v = scan_axioms(u_, opens_)) {
        if (v->code == errc::missing_empty_or_full)
            throw error(v->code, "opens must contain the empty set and the full universe");
        const char* what = v->code == errc::not_closed_under_union ? "union" : "intersection";
        throw error(v->code, std::string("opens not closed under ") + what + ": witness pair " +
                                 mask_to_string(u_, v->a) + ", " + mask_to_string(u_, v->b));
    }
}

topology topology::discrete(universe u) {
    std::vector<mask_t> all(static_cast<std::size_t>(u.full_mask()) + 1);
    for (mask_t m = 0; m <= u.full_mask(); ++m) all[m] = m;
    return {u, set_family(u, std::move(all))};
}

topology topology::indiscrete(universe u) {
    return {u, set_family(u, {0, u.full_mask()})};
}

bool topology::is_open(mask_t m) const {
    return std::binary_search(opens_.begin(), opens_.end(), m);
}

bool is_topology_family(universe u, const std::vector<mask_t>& masks) {
    if (!std::is_sorted(masks.begin(), masks.end())) {
        std::vector<mask_t> sorted = masks;
        std::sort(sorted.begin(), sorted.end());
        return !scan_axioms(u, sorted).has_value();
    }
    return !scan_axioms(u, masks).has_value();
}

topology topology_from_opens(universe u, const set_family& family) {
    return {u, family};
}

topology topology_from_subbase(universe u, const set_family& family) {
    require_same(u, family.space());
    std::vector<mask_t> stars(static_cast<std::size_t>(u.size()));
    for (int x = 0; x < u.size(); ++x) {
        mask_t m = u.full_mask();
        for (mask_t s : family.masks())
            if ((s >> x) & 1u) m &= s;
        stars[static_cast<std::size_t>(x)] = m;
    }
    return alexandrov_from_stars(star_system(u, std::move(stars)));
}

point_set closure(const topology& t, const point_set& a) {
    require_same(t.space(), a.space());
    mask_t away = 0;
    for (mask_t open : t.opens())
        if ((open & a.bits()) == 0) away |= open;
    return {t.space(), static_cast<mask_t>(t.space().full_mask() & ~away)};
}

point_set interior(const topology& t, const point_set& a) {
    require_same(t.space(), a.space());
    mask_t in = 0;
    for (mask_t open : t.opens())
        if ((open & ~a.bits()) == 0) in |= open;
    return {t.space(), in};
}

point_set min_nbhd(const topology& t, int x) {
    require_point(t.space(), x);
    mask_t m = t.space().full_mask();
    for (mask_t open : t.opens())
        if ((open >> x) & 1u) m &= open;
    return {t.space(), m};
}

set_family neighborhood_filter(const topology& t, int x) {
    const mask_t core = min_nbhd(t, x).bits();
    const mask_t rest = t.space().full_mask() & ~core;
    std::vector<mask_t> out;
    mask_t s = rest;
    for (;;) {
        out.push_back(core | s);
        if (s == 0) break;
        s = (s - 1) & rest;
    }
    return {t.space(), std::move(out)};
}

bool is_compact_subset(const topology& t, const point_set& a) {
    require_same(t.space(), a.space());
    const auto& opens = t.opens();
    // Any cover drawn from a finite topology is itself finite, so the answer
    // is determined; the scan below exhibits a pointwise-selected subcover of
    // size <= |a| inside every cover when the cover space is enumerable.
    if (opens.size() <= 10) {
        const std::size_t count = opens.size();
        for (std::uint64_t pick = 0; pick < (1ull << count); ++pick) {
            mask_t covered = 0;
            for (std::size_t i = 0; i < count; ++i)
                if ((pick >> i) & 1ull) covered |= opens[i];
            if ((a.bits() & ~covered) != 0) continue; // not a cover of a
            mask_t sub = 0;
            for_each_point(a.bits(), [&](int y) {
                for (std::size_t i = 0; i < count; ++i) {
                    if (((pick >> i) & 1ull) && ((opens[i] >> y) & 1u)) {
                        sub |= opens[i];
                        break;
                    }
                }
            });
            if ((a.bits() & ~sub) != 0) return false; // unreachable
        }
    }
    return true;
}

std::vector<mask_t> closed_set_masks(const topology& t) {
    std::vector<mask_t> out;
    out.reserve(t.opens().size());
    for (mask_t open : t.opens()) out.push_back(t.space().full_mask() & ~open);
    std::sort(out.begin(), out.end());
    return out;
}

star_system::star_system(universe u, std::vector<mask_t> stars) : u_(u), stars_(std::move(stars)) {
    if (static_cast<int>(stars_.size()) != u.size())
        throw error(errc::invalid_document, "star system must assign a set to every point");
    for (int x = 0; x < u.size(); ++x) {
        const mask_t m = stars_[static_cast<std::size_t>(x)];
        if ((m & ~u.full_mask()) != 0)
            throw error(errc::point_out_of_range, "star set contains points outside the universe");
        if (((m >> x) & 1u) == 0)
            throw error(errc::missing_self,
                        "star set of point " + std::to_string(x) + " does not contain the point itself");
    }
}

bool star_system::is_preorder() const {
    for (int x = 0; x < u_.size(); ++x) {
        const mask_t sx = stars_[static_cast<std::size_t>(x)];
        bool ok = true;
        for_each_point(sx, [&](int y) {
            if ((stars_[static_cast<std::size_t>(y)] & ~sx) != 0) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

star_system specialization(const topology& t) {
    const universe u = t.space();
    std::vector<mask_t> stars(static_cast<std::size_t>(u.size()));
    for (int y = 0; y < u.size(); ++y) {
        const mask_t cl = closure(t, point_set::single(u, y)).bits();
        for_each_point(cl, [&](int x) { stars[static_cast<std::size_t>(x)] |= static_cast<mask_t>(1u << y); });
    }
    return {u, std::move(stars)};
}

topology alexandrov_from_stars(const star_system& sys) {
    const universe u = sys.space();
    std::vector<mask_t> opens;
    for (mask_t m = 0;; ++m) {
        bool open = true;
        for_each_point(m, [&](int x) {
            if ((sys.masks()[static_cast<std::size_t>(x)] & ~m) != 0) open = false;
        });
        if (open) opens.push_back(m);
        if (m == u.full_mask()) break;
    }
    return {u, set_family(u, std::move(opens))};
}

} // namespace startopo
