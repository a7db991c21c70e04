#include "startopo/stars.hpp"

#include <sstream>

#include "startopo/partitions.hpp"

namespace startopo {

star_table::star_table(const topology& t)
    : space(t.space()),
      singleton_closures(static_cast<std::size_t>(t.space().size())),
      stars(static_cast<std::size_t>(t.space().size()), 0) {
    for (int y = 0; y < space.size(); ++y) {
        const mask_t cl = closure(t, point_set::single(space, y)).bits();
        singleton_closures[static_cast<std::size_t>(y)] = cl;
        for_each_point(cl, [&](int x) { stars[static_cast<std::size_t>(x)] |= static_cast<mask_t>(1u << y); });
    }
}

point_set star(const topology& t, int x) {
    require_point(t.space(), x);
    return {t.space(), star_table(t).star_of(x)};
}

boundedness bounded_and_unbounded(const topology& t) {
    const universe u = t.space();
    const star_table table(t);
    mask_t b = 0;
    for (int x = 0; x < u.size(); ++x) b |= table.star_of(x);
    point_set bounded(u, b);
    return {bounded, bounded.complement()};
}

point_set f_star(const topology& t, const point_set& f_set) {
    require_same(t.space(), f_set.space());
    if (f_set.is_empty())
        throw error(errc::empty_f, "f_star requires a nonempty set");
    return {t.space(), star_table(t).f_star_of(f_set.bits())};
}

namespace {

std::string pair_witness(universe u, int x, mask_t a) {
    std::ostringstream out;
    out << "x=" << x << ", A=" << mask_to_string(u, a);
    return out.str();
}

} // namespace

lemma31_report lemma31_checks(const topology& t) {
    const universe u = t.space();
    lemma31_report report;
    const star_table table(t);
    const std::vector<mask_t>& starm = table.stars;
    std::vector<mask_t> nbhdm(static_cast<std::size_t>(u.size()));
    for (int x = 0; x < u.size(); ++x)
        nbhdm[static_cast<std::size_t>(x)] = min_nbhd(t, x).bits();

    // (b) if every neighborhood of x is a member of p = y^, then y lies in
    // the star of x. Membership of all neighborhoods reduces to y in the
    // minimal one.
    {
        clause_result c{"b", true, ""};
        for (int x = 0; x < u.size() && c.holds; ++x)
            for (int y = 0; y < u.size() && c.holds; ++y)
                if (((nbhdm[static_cast<std::size_t>(x)] >> y) & 1u) &&
                    !((starm[static_cast<std::size_t>(x)] >> y) & 1u)) {
                    c.holds = false;
                    c.witness = "x=" + std::to_string(x) + ", p=" + std::to_string(y);
                }
        report.clauses.push_back(std::move(c));
    }

    // (c) U is a neighborhood of x iff U belongs to every p in star(x),
    // i.e. iff star(x) is contained in U.
    {
        clause_result c{"c", true, ""};
        for (mask_t m = 0; m <= u.full_mask() && c.holds; ++m)
            for (int x = 0; x < u.size() && c.holds; ++x) {
                const bool nbhd = (nbhdm[static_cast<std::size_t>(x)] & ~m) == 0;
                const bool star_side = (starm[static_cast<std::size_t>(x)] & ~m) == 0;
                if (nbhd != star_side) {
                    c.holds = false;
                    c.witness = pair_witness(u, x, m);
                }
            }
        report.clauses.push_back(std::move(c));
    }

    // (d) x in cl(A) iff A meets star(x).
    {
        clause_result c{"d", true, ""};
        for (mask_t m = 0; m <= u.full_mask() && c.holds; ++m) {
            const mask_t cl = closure(t, point_set(u, m)).bits();
            for (int x = 0; x < u.size() && c.holds; ++x) {
                const bool lhs = (cl >> x) & 1u;
                const bool rhs = (m & starm[static_cast<std::size_t>(x)]) != 0;
                if (lhs != rhs) {
                    c.holds = false;
                    c.witness = pair_witness(u, x, m);
                }
            }
        }
        report.clauses.push_back(std::move(c));
    }

    // (e) the intersection of the ultrafilters in star(x) is exactly the
    // neighborhood filter of x, and the closure of star(x) in the
    // ultrafilter space equals the intersection of the closures of the
    // neighborhoods of x. Both reduce to star(x) = min_nbhd(x).
    {
        clause_result c{"e", true, ""};
        for (int x = 0; x < u.size() && c.holds; ++x)
            if (starm[static_cast<std::size_t>(x)] != nbhdm[static_cast<std::size_t>(x)]) {
                c.holds = false;
                c.witness = "x=" + std::to_string(x) + ", star=" +
                            mask_to_string(u, starm[static_cast<std::size_t>(x)]) + ", nbhd filter core=" +
                            mask_to_string(u, nbhdm[static_cast<std::size_t>(x)]);
            }
        report.clauses.push_back(std::move(c));
    }

    // (f) x is interior to A iff star(x) is contained in A; a set is open
    // iff that holds at each of its points.
    {
        clause_result c{"f", true, ""};
        for (mask_t m = 0; m <= u.full_mask() && c.holds; ++m) {
            const mask_t in = interior(t, point_set(u, m)).bits();
            for (int x = 0; x < u.size() && c.holds; ++x) {
                const bool lhs = (in >> x) & 1u;
                const bool rhs = (starm[static_cast<std::size_t>(x)] & ~m) == 0;
                if (lhs != rhs) {
                    c.holds = false;
                    c.witness = pair_witness(u, x, m);
                }
            }
            if (!c.holds) break;
            bool open_by_stars = true;
            for_each_point(m, [&](int x) {
                if ((starm[static_cast<std::size_t>(x)] & ~m) != 0) open_by_stars = false;
            });
            if (open_by_stars != t.is_open(m)) {
                c.holds = false;
                c.witness = "A=" + mask_to_string(u, m);
            }
        }
        report.clauses.push_back(std::move(c));
    }

    return report;
}

bool robinson_compact(const topology& t, const point_set& a) {
    require_same(t.space(), a.space());
    // Principal points of the ultrafilter-space closure of a are the points
    // of a itself.
    const star_table table(t);
    bool ok = true;
    for_each_point(a.bits(), [&](int y) {
        bool witnessed = false;
        for_each_point(a.bits(), [&](int x) {
            if ((table.star_of(x) >> y) & 1u) witnessed = true;
        });
        if (!witnessed) ok = false;
    });
    return ok;
}

bool is_continuous_stars(const topology& tX, const topology& tY, const space_map& f) {
    require_same(tX.space(), f.domain());
    require_same(tY.space(), f.codomain());
    const star_table tableX(tX);
    const star_table tableY(tY);
    for (int x = 0; x < tX.space().size(); ++x) {
        const mask_t target = tableY.star_of(f(x));
        bool ok = true;
        for_each_point(tableX.star_of(x), [&](int y) {
            if (((target >> f(y)) & 1u) == 0) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_continuous_classical(const topology& tX, const topology& tY, const space_map& f) {
    return !continuity_witness_open(tX, tY, f).has_value();
}

std::optional<point_set> continuity_witness_open(const topology& tX, const topology& tY,
                                                 const space_map& f) {
    require_same(tX.space(), f.domain());
    require_same(tY.space(), f.codomain());
    for (mask_t open : tY.opens()) {
        const point_set pre = f.preimage(point_set(tY.space(), open));
        if (!tX.is_open(pre)) return point_set(tY.space(), open);
    }
    return std::nullopt;
}

bool is_open_map_stars(const topology& tX, const topology& tY, const space_map& f) {
    if (!is_continuous_classical(tX, tY, f))
        throw error(errc::not_continuous, "open-map criterion requires a continuous map");
    const star_table tableX(tX);
    const star_table tableY(tY);
    for (int x = 0; x < tX.space().size(); ++x) {
        const mask_t img = f.image(point_set(tX.space(), tableX.star_of(x))).bits();
        if ((tableY.star_of(f(x)) & ~img) != 0) return false;
    }
    return true;
}

bool is_open_map_classical(const topology& tX, const topology& tY, const space_map& f) {
    return !open_map_witness_open(tX, tY, f).has_value();
}

std::optional<point_set> open_map_witness_open(const topology& tX, const topology& tY,
                                               const space_map& f) {
    require_same(tX.space(), f.domain());
    require_same(tY.space(), f.codomain());
    for (mask_t open : tX.opens()) {
        const point_set img = f.image(point_set(tX.space(), open));
        if (!tY.is_open(img)) return point_set(tX.space(), open);
    }
    return std::nullopt;
}

bool image_compact_check(const topology& tX, const topology& tY, const space_map& f,
                         const point_set& k) {
    if (!is_continuous_classical(tX, tY, f))
        throw error(errc::not_continuous, "image compactness requires a continuous map");
    require_same(tX.space(), k.space());
    return robinson_compact(tY, f.image(k));
}

fixed_point_result fixed_point_via_stars(const topology& t, const space_map& f) {
    if (!f.is_endo())
        throw error(errc::universe_mismatch, "fixed-point criterion needs an endo map");
    if (!is_continuous_classical(t, t, f))
        throw error(errc::not_continuous, "fixed-point criterion requires a continuous map");
    const universe u = t.space();
    const star_table table(t);
    for (int x = 0; x < u.size(); ++x) {
        const mask_t sx = table.star_of(x);
        for (int y = 0; y < u.size(); ++y) {
            if (((sx >> y) & 1u) == 0) continue;
            if ((sx >> f(y)) & 1u)
                return {true, fixed_point_witness{x, beta_point(u, y), beta_point(u, f(y))}};
        }
    }
    return {false, std::nullopt};
}

partition_meet_result partition_cell_meets(const space_map& f, int max_cells) {
    if (!f.is_endo())
        throw error(errc::universe_mismatch, "partition criterion needs an endo map");
    const universe u = f.domain();
    if (u.size() > 8)
        throw error(errc::size_too_large, "partition scan capped at 8 points");
    std::vector<int> elems(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < u.size(); ++i) elems[static_cast<std::size_t>(i)] = i;
    std::optional<std::vector<point_set>> violating;
    for_each_partition(elems, max_cells, [&](const std::vector<mask_t>& cells) {
        for (mask_t cell : cells) {
            const point_set c(u, cell);
            if (f.image(c).intersects(c)) return true; // this partition is fine
        }
        std::vector<point_set> out;
        out.reserve(cells.size());
        for (mask_t cell : cells) out.emplace_back(u, cell);
        violating = std::move(out);
        return false;
    });
    if (violating) return {false, std::move(violating)};
    return {true, std::nullopt};
}

std::array<point_set, 3> three_partition(const space_map& f) {
    if (!f.is_endo())
        throw error(errc::universe_mismatch, "three_partition needs an endo map");
    const universe u = f.domain();
    if (!f.is_injective()) {
        // name a witness pair target
        std::vector<int> seen(static_cast<std::size_t>(u.size()), -1);
        for (int p = 0; p < u.size(); ++p) {
            if (seen[static_cast<std::size_t>(f(p))] >= 0)
                throw error(errc::not_injective,
                            "map is not injective: points " +
                                std::to_string(seen[static_cast<std::size_t>(f(p))]) + " and " +
                                std::to_string(p) + " share the value " + std::to_string(f(p)));
            seen[static_cast<std::size_t>(f(p))] = p;
        }
    }
    if (auto fp = f.fixed_point())
        throw error(errc::has_fixed_point,
                    "map fixes the point " + std::to_string(*fp));

    mask_t labels[3] = {0, 0, 0};
    mask_t visited = 0;
    for (int start = 0; start < u.size(); ++start) {
        if ((visited >> start) & 1u) continue;
        std::vector<int> cycle;
        int p = start;
        do {
            cycle.push_back(p);
            visited |= static_cast<mask_t>(1u << p);
            p = f(p);
        } while (p != start);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int label = static_cast<int>(i % 2);
            if (cycle.size() % 2 == 1 && i + 1 == cycle.size()) label = 2;
            labels[label] |= static_cast<mask_t>(1u << cycle[i]);
        }
    }
    return {point_set(u, labels[0]), point_set(u, labels[1]), point_set(u, labels[2])};
}

} // namespace startopo
