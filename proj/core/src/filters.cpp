#include "startopo/filters.hpp"

namespace startopo {

filter filter_from_base(const set_family& base) {
    const universe u = base.space();
    if (base.is_empty())
        throw error(errc::empty_base, "a filter base must be nonempty");
    for (mask_t m : base.masks())
        if (m == 0)
            throw error(errc::empty_member, "the empty set cannot belong to a filter base");
    for (mask_t a : base.masks()) {
        for (mask_t b : base.masks()) {
            const mask_t meet = a & b;
            bool ok = false;
            for (mask_t c : base.masks())
                if ((c & ~meet) == 0) { ok = true; break; }
            if (!ok)
                throw error(errc::not_directed,
                            "base is not directed: no member inside " +
                                mask_to_string(u, a) + " n " + mask_to_string(u, b) +
                                " = " + mask_to_string(u, meet));
        }
    }
    mask_t core = u.full_mask();
    for (mask_t m : base.masks()) core &= m;
    // Directedness plus nonempty members forces a nonempty intersection on a
    // finite universe, so this cannot throw.
    return {u, point_set(u, core)};
}

set_family filter_members(const filter& f) {
    const universe u = f.space();
    const mask_t core = f.core().bits();
    const mask_t rest = u.full_mask() & ~core;
    std::vector<mask_t> out;
    out.reserve(static_cast<std::size_t>(1u << std::popcount(rest)));
    mask_t s = rest;
    for (;;) {
        out.push_back(core | s);
        if (s == 0) break;
        s = (s - 1) & rest;
    }
    return {u, std::move(out)};
}

bool is_ultrafilter(const filter& f) { return f.core().size() == 1; }

std::vector<beta_point> ultrafilters_containing(const filter& f) {
    std::vector<beta_point> out;
    for_each_point(f.core().bits(), [&](int p) { out.emplace_back(f.space(), p); });
    return out;
}

beta_point apply_beta(const space_map& f, const beta_point& p) {
    require_same(f.domain(), p.space());
    return {f.codomain(), f(p.point())};
}

beta_fixed_point beta_fixed_point_iff(const space_map& f, const beta_point& p) {
    if (!f.is_endo())
        throw error(errc::universe_mismatch, "fixed-point criterion needs an endo map");
    require_same(f.domain(), p.space());
    const bool via_beta = apply_beta(f, p) == p;
    mask_t fixed = 0;
    for (int x = 0; x < f.domain().size(); ++x)
        if (f(x) == x) fixed |= static_cast<mask_t>(1u << x);
    const bool via_fixed_set = p.contains(point_set(p.space(), fixed));
    return {via_beta, via_fixed_set};
}

} // namespace startopo
