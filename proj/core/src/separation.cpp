#include "startopo/separation.hpp"

#include <sstream>

namespace startopo {

topology generate_topology(const star_system& sys) { return alexandrov_from_stars(sys); }

finer_check generated_finer_check(const topology& t) {
    const topology regen = generate_topology(specialization(t));
    bool finer = true;
    for (mask_t open : t.opens())
        if (!regen.is_open(open)) finer = false;
    return {finer, regen == t};
}

round_trip_report round_trip_gap(const star_system& sys) {
    const star_system back = specialization(generate_topology(sys));
    return {sys.is_preorder(), back == sys};
}

namespace {

std::string pair_text(int x, int y) {
    return "x=" + std::to_string(x) + ", y=" + std::to_string(y);
}

// Classical separation of two point sets by disjoint opens.
bool openly_separated(const topology& t, mask_t a, mask_t b) {
    for (mask_t u : t.opens()) {
        if ((a & ~u) != 0) continue;
        for (mask_t v : t.opens()) {
            if ((b & ~v) != 0) continue;
            if ((u & v) == 0) return true;
        }
    }
    return false;
}

bool classical_T1(const topology& t, std::string* witness) {
    const universe u = t.space();
    for (int x = 0; x < u.size(); ++x)
        for (int y = 0; y < u.size(); ++y) {
            if (x == y) continue;
            bool excluded = false;
            for (mask_t open : t.opens())
                if (((open >> x) & 1u) && !((open >> y) & 1u)) { excluded = true; break; }
            if (!excluded) {
                if (witness) *witness = pair_text(x, y) + ": every open around x contains y";
                return false;
            }
        }
    return true;
}

bool star_T1(const star_table& table, std::string* witness) {
    const universe u = table.space;
    for (int x = 0; x < u.size(); ++x)
        for (int y = x + 1; y < u.size(); ++y) {
            const mask_t sx = table.star_of(x);
            const mask_t sy = table.star_of(y);
            if ((sx & ~sy) == 0 || (sy & ~sx) == 0) {
                if (witness) *witness = pair_text(x, y) + ": one star difference is empty";
                return false;
            }
        }
    return true;
}

} // namespace

axiom_entry axiom_T0(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    axiom_entry e{"T0", true, true, std::nullopt};
    for (int x = 0; x < u.size(); ++x)
        for (int y = x + 1; y < u.size(); ++y) {
            if (table.star_of(x) == table.star_of(y)) {
                e.star_verdict = false;
                e.witness = pair_text(x, y) + ": equal stars";
            }
            bool separated = false;
            for (mask_t open : t.opens())
                if ((((open >> x) & 1u) ^ ((open >> y) & 1u)) != 0) { separated = true; break; }
            if (!separated) {
                e.classical_verdict = false;
                if (!e.witness) e.witness = pair_text(x, y) + ": no open distinguishes the pair";
            }
        }
    return e;
}

axiom_entry axiom_T1(const topology& t) {
    const star_table table(t);
    axiom_entry e{"T1", true, true, std::nullopt};
    std::string w;
    if (!star_T1(table, &w)) {
        e.star_verdict = false;
        e.witness = w;
    }
    if (!classical_T1(t, &w)) {
        e.classical_verdict = false;
        if (!e.witness) e.witness = w;
    }
    return e;
}

axiom_entry axiom_T2(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    axiom_entry e{"T2", true, true, std::nullopt};
    for (int x = 0; x < u.size(); ++x)
        for (int y = x + 1; y < u.size(); ++y) {
            if ((table.star_of(x) & table.star_of(y)) != 0) {
                e.star_verdict = false;
                e.witness = pair_text(x, y) + ": stars meet";
            }
            if (!openly_separated(t, static_cast<mask_t>(1u << x), static_cast<mask_t>(1u << y))) {
                e.classical_verdict = false;
                if (!e.witness) e.witness = pair_text(x, y) + ": no disjoint opens";
            }
        }
    return e;
}

axiom_entry axiom_T2half(const topology& t) {
    // Ultrafilter-space closures are identities here, so the criterion
    // "star(x) meets the closure of star(y)" collapses to the Hausdorff one.
    axiom_entry e = axiom_T2(t);
    e.axiom = "T2half";
    return e;
}

axiom_entry axiom_strongly_hausdorff(const topology& t) {
    axiom_entry e = axiom_T2(t);
    e.axiom = "StronglyHausdorff";
    return e;
}

axiom_entry axiom_regular(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    axiom_entry e{"Regular", true, true, std::nullopt};
    std::string w;
    if (!star_T1(table, &w)) {
        e.star_verdict = false;
        e.witness = w;
    }
    if (!classical_T1(t, &w)) {
        e.classical_verdict = false;
        if (!e.witness) e.witness = w;
    }
    for (mask_t closed : closed_set_masks(t)) {
        if (closed == 0) continue; // a point is always separated from the empty set
        for (int x = 0; x < u.size(); ++x) {
            if ((closed >> x) & 1u) continue;
            if ((table.star_of(x) & table.f_star_of(closed)) != 0) {
                e.star_verdict = false;
                if (!e.witness)
                    e.witness = "x=" + std::to_string(x) + ", F=" + mask_to_string(u, closed) +
                                ": star of x meets F*";
            }
            if (!openly_separated(t, static_cast<mask_t>(1u << x), closed)) {
                e.classical_verdict = false;
                if (!e.witness)
                    e.witness = "x=" + std::to_string(x) + ", F=" + mask_to_string(u, closed) +
                                ": no disjoint opens";
            }
        }
    }
    return e;
}

axiom_entry axiom_normal(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    axiom_entry e{"Normal", true, true, std::nullopt};
    std::string w;
    if (!star_T1(table, &w)) {
        e.star_verdict = false;
        e.witness = w;
    }
    if (!classical_T1(t, &w)) {
        e.classical_verdict = false;
        if (!e.witness) e.witness = w;
    }
    const auto closed = closed_set_masks(t);
    for (mask_t a : closed) {
        if (a == 0) continue;
        for (mask_t b : closed) {
            if (b == 0 || (a & b) != 0) continue;
            if ((table.f_star_of(a) & table.f_star_of(b)) != 0) {
                e.star_verdict = false;
                if (!e.witness)
                    e.witness = "A=" + mask_to_string(u, a) + ", B=" + mask_to_string(u, b) +
                                ": A* meets B*";
            }
            if (!openly_separated(t, a, b)) {
                e.classical_verdict = false;
                if (!e.witness)
                    e.witness = "A=" + mask_to_string(u, a) + ", B=" + mask_to_string(u, b) +
                                ": no disjoint opens";
            }
        }
    }
    return e;
}

std::vector<mask_t> specialization_components(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    std::vector<mask_t> adj(static_cast<std::size_t>(u.size()), 0);
    for (int x = 0; x < u.size(); ++x) {
        const mask_t sx = table.star_of(x);
        adj[static_cast<std::size_t>(x)] |= sx;
        for_each_point(sx, [&](int y) { adj[static_cast<std::size_t>(y)] |= static_cast<mask_t>(1u << x); });
    }
    std::vector<mask_t> comp(static_cast<std::size_t>(u.size()));
    for (int x = 0; x < u.size(); ++x) {
        mask_t m = static_cast<mask_t>(1u << x);
        for (;;) {
            mask_t grown = m;
            for_each_point(m, [&](int y) { grown |= adj[static_cast<std::size_t>(y)]; });
            if (grown == m) break;
            m = grown;
        }
        comp[static_cast<std::size_t>(x)] = m;
    }
    return comp;
}

axiom_entry axiom_completely_regular(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    axiom_entry e{"CompletelyRegular", true, true, std::nullopt};
    const auto comp = specialization_components(t);
    for (mask_t closed : closed_set_masks(t)) {
        if (closed == 0) continue;
        for (int x = 0; x < u.size(); ++x) {
            if ((closed >> x) & 1u) continue;
            const bool separable = (comp[static_cast<std::size_t>(x)] & closed) == 0;
            if (!separable) {
                e.classical_verdict = false;
                if (!e.witness)
                    e.witness = "x=" + std::to_string(x) + ", F=" + mask_to_string(u, closed) +
                                ": component of x meets F";
            }
            if ((table.star_of(x) & table.f_star_of(closed)) != 0) {
                e.star_verdict = false;
                if (!e.witness)
                    e.witness = "x=" + std::to_string(x) + ", F=" + mask_to_string(u, closed) +
                                ": star of x meets F*";
            }
        }
    }
    return e;
}

const axiom_entry& axiom_report::entry(const std::string& name) const {
    for (const auto& e : entries)
        if (e.axiom == name) return e;
    throw error(errc::invalid_document, "unknown axiom name: " + name);
}

axiom_report full_axiom_report(const topology& t) {
    axiom_report r{{axiom_T0(t), axiom_T1(t), axiom_T2(t), axiom_T2half(t),
                    axiom_strongly_hausdorff(t), axiom_regular(t), axiom_completely_regular(t),
                    axiom_normal(t)},
                   true, true, true, true, true};
    const bool t0 = r.entry("T0").star_verdict;
    const bool t1 = r.entry("T1").star_verdict;
    const bool t2 = r.entry("T2").star_verdict;
    const bool t2h = r.entry("T2half").star_verdict;
    const bool sh = r.entry("StronglyHausdorff").star_verdict;
    const bool reg = r.entry("Regular").star_verdict;
    const bool nor = r.entry("Normal").star_verdict;
    r.chain_t2_t1_t0 = (!t2 || t1) && (!t1 || t0);
    r.chain_normal_regular = !nor || reg;
    r.chain_sh_t2half_t2 = (!sh || t2h) && (!t2h || t2);
    r.t2half_equals_t2 = (t2h == t2);
    r.strongly_hausdorff_equals_t2 = (sh == t2);
    return r;
}

} // namespace startopo
