#include "startopo/regularity.hpp"

#include "startopo/partitions.hpp"
#include "startopo/rng.hpp"

namespace startopo {

regular_family::regular_family(universe u, set_family sets) : u_(u), sets_(std::move(sets)) {
    require_same(u, sets_.space());
    if (sets_.is_empty())
        throw error(errc::empty_family, "a regular family must be nonempty");
    for (mask_t m : sets_.masks())
        if (m == 0)
            throw error(errc::empty_member, "the empty set cannot belong to a regular family");
}

set_family upward_closure(const regular_family& r) {
    const universe u = r.space();
    std::vector<mask_t> out;
    for (mask_t m = 0; m <= u.full_mask(); ++m) {
        for (mask_t b : r.sets().masks()) {
            if ((b & ~m) == 0) {
                out.push_back(m);
                break;
            }
        }
    }
    return {u, std::move(out)};
}

regularity_def_result is_partition_regular_def(const regular_family& r) {
    const universe u = r.space();
    if (u.size() > 8)
        throw error(errc::size_too_large, "partition regularity scan capped at 8 points");
    // points whose singletons already belong to the family; a cell touching
    // one of them contains a member outright
    mask_t singleton_points = 0;
    for (int x = 0; x < u.size(); ++x)
        if (r.sets().contains(static_cast<mask_t>(1u << x)))
            singleton_points |= static_cast<mask_t>(1u << x);
    for (mask_t c : r.sets().masks()) {
        std::vector<int> elems = point_set(u, c).points();
        std::optional<regularity_witness> witness;
        for_each_partition(elems, static_cast<int>(elems.size()),
                           [&](const std::vector<mask_t>& cells) {
                               for (mask_t cell : cells) {
                                   if (cell & singleton_points) return true;
                                   for (mask_t b : r.sets().masks())
                                       if ((b & ~cell) == 0) return true;
                               }
                               std::vector<point_set> ws;
                               ws.reserve(cells.size());
                               for (mask_t cell : cells) ws.emplace_back(u, cell);
                               witness = regularity_witness{point_set(u, c), std::move(ws)};
                               return false;
                           });
        if (witness) return {false, std::move(witness)};
    }
    return {true, std::nullopt};
}

regularity_uf_result is_partition_regular_uf(const regular_family& r) {
    const universe u = r.space();
    const set_family up = upward_closure(r);
    regularity_uf_result out{true, {}};
    for (mask_t a : r.sets().masks()) {
        std::optional<beta_point> found;
        for (int x = 0; x < u.size() && !found; ++x) {
            if (((a >> x) & 1u) == 0) continue;
            // The principal ultrafilter at x sits inside the upward closure
            // exactly when the singleton {x} is already a member of it.
            if (up.contains(static_cast<mask_t>(1u << x))) found = beta_point(u, x);
        }
        if (!found) out.holds = false;
        out.witnesses.push_back(found);
    }
    return out;
}

namespace {

// Clause (b) instance: a family of nonempty subsets, encoded as a bit set
// over the nonempty masks. The finite-intersection-in-closure hypothesis
// reduces to the intersection of the whole family lying in the closure,
// because the closure is upward closed and smaller subfamilies have larger
// intersections. Families containing the empty set fail the hypothesis
// outright, so only families of nonempty sets need scanning.
bool subfamily_instance_ok(universe u, const set_family& up, std::uint64_t family_bits) {
    mask_t meet = u.full_mask();
    bool empty_family = true;
    for (int i = 0; i < static_cast<int>(u.full_mask()); ++i) {
        if ((family_bits >> i) & 1ull) {
            meet &= static_cast<mask_t>(i + 1);
            empty_family = false;
        }
    }
    if (empty_family) {
        // vacuous hypothesis: some principal ultrafilter must sit inside the closure
        for (int x = 0; x < u.size(); ++x)
            if (up.contains(static_cast<mask_t>(1u << x))) return true;
        return false;
    }
    if (!up.contains(meet)) return true; // hypothesis fails, nothing to show
    bool found = false;
    for_each_point(meet, [&](int x) {
        if (up.contains(static_cast<mask_t>(1u << x))) found = true;
    });
    return found;
}

} // namespace

theorem25_report theorem_25_equivalence(const regular_family& r, std::uint64_t seed) {
    const universe u = r.space();
    if (u.size() > 6)
        throw error(errc::size_too_large, "subfamily clause scan capped at 6 points");
    const bool a = is_partition_regular_def(r).holds;
    const bool c = is_partition_regular_uf(r).holds;
    const set_family up = upward_closure(r);

    const int nonempty = static_cast<int>(u.full_mask());
    bool b = true;
    bool exhaustive = u.size() <= 4;
    if (exhaustive) {
        for (std::uint64_t bits = 0; bits < (1ull << nonempty); ++bits)
            if (!subfamily_instance_ok(u, up, bits)) { b = false; break; }
    } else {
        // seeded sampling, always including the singleton families
        for (mask_t m : r.sets().masks())
            if (!subfamily_instance_ok(u, up, 1ull << (m - 1))) b = false;
        constexpr int samples = 8192;
        for (int i = 0; i < samples && b; ++i) {
            counter_rng rng(seed, "thm2.5b", static_cast<std::uint64_t>(i));
            const std::uint64_t bits = rng.next() & ((1ull << nonempty) - 1ull);
            if (!subfamily_instance_ok(u, up, bits)) b = false;
        }
    }
    return {a, b, c, exhaustive};
}

regular_family family_R_x(const topology& t, int x) {
    const universe u = t.space();
    require_point(u, x);
    std::vector<mask_t> out;
    for (mask_t m = 1; m <= u.full_mask(); ++m)
        if (closure(t, point_set(u, m)).contains(x)) out.push_back(m);
    return {u, set_family(u, std::move(out))};
}

regular_family family_R_F(const topology& t, const point_set& f_set) {
    require_same(t.space(), f_set.space());
    if (f_set.is_empty())
        throw error(errc::empty_f, "family_R_F requires a nonempty set");
    const universe u = t.space();
    std::vector<mask_t> out;
    for (mask_t m = 1; m <= u.full_mask(); ++m)
        if (closure(t, point_set(u, m)).intersects(f_set)) out.push_back(m);
    return {u, set_family(u, std::move(out))};
}

} // namespace startopo
