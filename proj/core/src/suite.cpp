#include "startopo/suite.hpp"

#include <algorithm>
#include <thread>

#include "startopo/convergence.hpp"
#include "startopo/enumeration.hpp"
#include "startopo/partitions.hpp"
#include "startopo/regularity.hpp"
#include "startopo/rng.hpp"
#include "startopo/separation.hpp"
#include "startopo/stars.hpp"

namespace startopo::suite {

std::string_view to_string(status s) {
    switch (s) {
        case status::verified: return "verified";
        case status::degenerate_documented: return "degenerate-documented";
        case status::falsified: return "falsified";
    }
    return "unknown";
}

namespace {

using io::ojson;

struct ctx {
    const config* cfg;
    // topologies per size, index n-1, in enumeration stream order
    const std::vector<std::vector<topology>>* topos;

    int max_n() const { return cfg->max_n; }
    std::uint64_t seed() const { return cfg->seed; }
    const std::vector<topology>& at(int n) const { return (*topos)[static_cast<std::size_t>(n - 1)]; }
};

// Everything is scanned in full below four points; free inputs (maps,
// sequences, families, star systems) are seed-sampled from there on while
// topologies stay exhaustive.
constexpr int exhaustive_limit = 3;

int maps_per_topology(int n) { return n <= 4 ? 64 : 16; }
int seqs_per_topology(int n) { return n <= 4 ? 64 : 8; }
int family_samples(int n) { return n <= 4 ? 1024 : 256; }
int system_samples(int) { return 4096; }
int pair_samples(int n) { return n <= 4 ? 4096 : 1024; }
int sets_per_topology(int n) { return n <= 4 ? 16 : 8; }

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

space_map decode_map(universe dom, universe cod, std::uint64_t code) {
    std::vector<int> v(static_cast<std::size_t>(dom.size()));
    for (int i = 0; i < dom.size(); ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(cod.size()));
        code /= static_cast<std::uint64_t>(cod.size());
    }
    return {dom, cod, std::move(v)};
}

space_map sample_map(universe dom, universe cod, counter_rng& rng) {
    std::vector<int> v(static_cast<std::size_t>(dom.size()));
    for (auto& x : v) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(cod.size())));
    return {dom, cod, std::move(v)};
}

// visit returns false to stop (counterexample found)
bool for_each_map(universe dom, universe cod, const std::function<bool(const space_map&)>& visit) {
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(cod.size()), dom.size());
    for (std::uint64_t code = 0; code < total; ++code)
        if (!visit(decode_map(dom, cod, code))) return false;
    return true;
}

bool for_each_sequence(universe u, int max_prefix, int max_cycle,
                       const std::function<bool(const ep_sequence&)>& visit) {
    const auto n = static_cast<std::uint64_t>(u.size());
    for (int pl = 0; pl <= max_prefix; ++pl) {
        for (std::uint64_t pc = 0; pc < ipow(n, pl); ++pc) {
            std::vector<int> prefix(static_cast<std::size_t>(pl));
            std::uint64_t c = pc;
            for (int i = 0; i < pl; ++i) {
                prefix[static_cast<std::size_t>(i)] = static_cast<int>(c % n);
                c /= n;
            }
            for (int cl = 1; cl <= max_cycle; ++cl) {
                for (std::uint64_t cc = 0; cc < ipow(n, cl); ++cc) {
                    std::vector<int> cycle(static_cast<std::size_t>(cl));
                    std::uint64_t d = cc;
                    for (int i = 0; i < cl; ++i) {
                        cycle[static_cast<std::size_t>(i)] = static_cast<int>(d % n);
                        d /= n;
                    }
                    if (!visit(ep_sequence(u, prefix, cycle))) return false;
                }
            }
        }
    }
    return true;
}

ep_sequence sample_sequence(universe u, int max_prefix, int max_cycle, counter_rng& rng) {
    const auto n = static_cast<std::uint64_t>(u.size());
    std::vector<int> prefix(rng.below(static_cast<std::uint64_t>(max_prefix) + 1));
    for (auto& p : prefix) p = static_cast<int>(rng.below(n));
    std::vector<int> cycle(1 + rng.below(static_cast<std::uint64_t>(max_cycle)));
    for (auto& p : cycle) p = static_cast<int>(rng.below(n));
    return {u, std::move(prefix), std::move(cycle)};
}

// All nonempty families of nonempty subsets; tractable for n <= 3 only.
bool for_each_family(universe u, const std::function<bool(const regular_family&)>& visit) {
    const int members = static_cast<int>(u.full_mask());
    for (std::uint64_t bits = 1; bits < (1ull << members); ++bits) {
        std::vector<mask_t> sets;
        for (int i = 0; i < members; ++i)
            if ((bits >> i) & 1ull) sets.push_back(static_cast<mask_t>(i + 1));
        if (!visit(regular_family(u, set_family(u, std::move(sets))))) return false;
    }
    return true;
}

regular_family sample_family(universe u, counter_rng& rng) {
    const int members = static_cast<int>(u.full_mask());
    std::uint64_t bits = 0;
    for (int i = 0; i < members; i += 32)
        bits |= (rng.next() & 0xffffffffull) << i;
    bits &= (members >= 64 ? ~0ull : (1ull << members) - 1ull);
    if (bits == 0) bits = 1;
    std::vector<mask_t> sets;
    for (int i = 0; i < members; ++i)
        if ((bits >> i) & 1ull) sets.push_back(static_cast<mask_t>(i + 1));
    return {u, set_family(u, std::move(sets))};
}

bool for_each_self_system(universe u, const std::function<bool(const star_system&)>& visit) {
    const int off_bits = u.size() * u.size() - u.size();
    for (std::uint64_t pattern = 0; pattern < (1ull << off_bits); ++pattern)
        if (!visit(star_pattern_system(u, static_cast<std::uint32_t>(pattern)))) return false;
    return true;
}

star_system sample_system(universe u, counter_rng& rng) {
    const int off_bits = u.size() * u.size() - u.size();
    return star_pattern_system(u, static_cast<std::uint32_t>(rng.next() & ((1ull << off_bits) - 1ull)));
}

// --- counterexample builders ----------------------------------------------

ojson cx_make(const topology& t, const std::string& detail) {
    ojson cx;
    cx["space"] = io::render_space(io::document_from(t));
    cx["detail"] = detail;
    return cx;
}

void attach_map(ojson& cx, const space_map& f) { cx["map"] = io::render_map(f); }
void attach_sequence(ojson& cx, const ep_sequence& s) { cx["sequence"] = io::render_sequence(s); }

void fail(result& r, ojson cx) {
    if (r.st == status::falsified) return; // keep the first counterexample
    r.st = status::falsified;
    r.counterexample = std::move(cx);
}

// --- claim runners ---------------------------------------------------------

void run_lem21a(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        const auto check = [&](const space_map& f) {
            for (int x = 0; x < n; ++x) {
                const beta_point p(u, x);
                const beta_point fp = apply_beta(f, p);
                for (mask_t m = 0; m <= u.full_mask(); ++m) {
                    const point_set a(u, m);
                    if (fp.contains(a) != p.contains(f.preimage(a))) {
                        ojson cx = cx_make(topology::discrete(u), "membership law fails at p=" +
                                                                      std::to_string(x) + ", A=" +
                                                                      mask_to_string(u, m));
                        attach_map(cx, f);
                        fail(r, std::move(cx));
                        return false;
                    }
                    if (p.contains(a) && !fp.contains(f.image(a))) {
                        ojson cx = cx_make(topology::discrete(u), "image law fails at p=" +
                                                                      std::to_string(x) + ", A=" +
                                                                      mask_to_string(u, m));
                        attach_map(cx, f);
                        fail(r, std::move(cx));
                        return false;
                    }
                }
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_map(u, u, check)) return;
        } else {
            for (int i = 0; i < 8 * maps_per_topology(n); ++i) {
                counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                if (!check(sample_map(u, u, rng))) return;
            }
        }
    }
}

void run_lem21c(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        const auto check = [&](const space_map& f) {
            const auto meet = partition_cell_meets(f, n);
            bool beta_fixed = false;
            for (int x = 0; x < n; ++x)
                if (beta_fixed_point_iff(f, beta_point(u, x)).via_beta) beta_fixed = true;
            if (meet.holds != beta_fixed) {
                ojson cx = cx_make(topology::discrete(u),
                                   std::string("partition criterion ") +
                                       (meet.holds ? "holds" : "fails") +
                                       " but the extension has " +
                                       (beta_fixed ? "a" : "no") + " fixed point");
                attach_map(cx, f);
                if (meet.violating_partition) {
                    ojson cells = ojson::array();
                    for (const auto& cell : *meet.violating_partition)
                        cells.push_back(io::points_json(cell));
                    cx["violating_partition"] = std::move(cells);
                }
                fail(r, std::move(cx));
                return false;
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_map(u, u, check)) return;
        } else {
            for (int i = 0; i < 4 * maps_per_topology(n); ++i) {
                counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                if (!check(sample_map(u, u, rng))) return;
            }
        }
    }
}

void run_lem21d(const ctx& c, result& r) {
    // fixed-point-free permutations are few; scan them in full for every n
    for (int n = 2; n <= c.max_n(); ++n) {
        const universe u(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            bool fpf = true;
            for (int i = 0; i < n; ++i)
                if (perm[static_cast<std::size_t>(i)] == i) fpf = false;
            if (!fpf) continue;
            const space_map f(u, u, perm);
            const auto parts = three_partition(f);
            mask_t cover = 0;
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                if ((cover & parts[static_cast<std::size_t>(i)].bits()) != 0) ok = false;
                cover |= parts[static_cast<std::size_t>(i)].bits();
                if (f.image(parts[static_cast<std::size_t>(i)]).intersects(parts[static_cast<std::size_t>(i)]))
                    ok = false;
            }
            if (cover != u.full_mask()) ok = false;
            if (!ok) {
                ojson cx = cx_make(topology::discrete(u), "three-part labeling is not a valid cover");
                attach_map(cx, f);
                fail(r, std::move(cx));
                return;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

void run_thm22(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        const auto check = [&](const space_map& f) {
            if (f.fixed_point()) return true;
            for (int x = 0; x < n; ++x) {
                if (apply_beta(f, beta_point(u, x)) == beta_point(u, x)) {
                    ojson cx = cx_make(topology::discrete(u),
                                       "fixed-point-free map fixes the principal point " +
                                           std::to_string(x));
                    attach_map(cx, f);
                    fail(r, std::move(cx));
                    return false;
                }
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_map(u, u, check)) return;
        } else {
            for (int i = 0; i < 8 * maps_per_topology(n); ++i) {
                counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                if (!check(sample_map(u, u, rng))) return;
            }
        }
    }
}

void run_thm23(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        const auto check = [&](const space_map& f) {
            for (int x = 0; x < n; ++x) {
                const auto both = beta_fixed_point_iff(f, beta_point(u, x));
                if (both.via_beta != both.via_fixed_set) {
                    ojson cx = cx_make(topology::discrete(u),
                                       "fixed-point criterion sides disagree at p=" + std::to_string(x));
                    attach_map(cx, f);
                    fail(r, std::move(cx));
                    return false;
                }
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_map(u, u, check)) return;
        } else {
            for (int i = 0; i < 8 * maps_per_topology(n); ++i) {
                counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                if (!check(sample_map(u, u, rng))) return;
            }
        }
    }
}

void run_thm25(const ctx& c, result& r) {
    for (int n = 1; n <= std::min(c.max_n(), 6); ++n) {
        const universe u(n);
        const auto check = [&](const regular_family& fam) {
            const auto rep = theorem_25_equivalence(fam, c.seed());
            if (!rep.agree()) {
                ojson cx = cx_make(topology::discrete(u),
                                   std::string("clauses disagree: def=") +
                                       (rep.def_clause ? "t" : "f") + " subfamily=" +
                                       (rep.subfamily_clause ? "t" : "f") + " ultrafilter=" +
                                       (rep.ultrafilter_clause ? "t" : "f"));
                ojson sets = ojson::array();
                for (mask_t m : fam.sets().masks()) sets.push_back(io::points_json(u, m));
                cx["family"] = std::move(sets);
                fail(r, std::move(cx));
                return false;
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_family(u, check)) return;
        } else {
            for (int i = 0; i < family_samples(n); ++i) {
                counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                if (!check(sample_family(u, rng))) return;
            }
        }
    }
}

void run_rem26(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            const auto check_family = [&](const regular_family& fam, const std::string& name) {
                const auto up = upward_closure(fam);
                if (!(up == fam.sets())) {
                    fail(r, cx_make(t, name + " is not upward closed"));
                    return false;
                }
                if (!is_partition_regular_def(fam).holds) {
                    fail(r, cx_make(t, name + " is not partition regular"));
                    return false;
                }
                return true;
            };
            for (int x = 0; x < n; ++x) {
                const regular_family rx = family_R_x(t, x);
                if (!check_family(rx, "R_x at x=" + std::to_string(x))) return;
                const set_family nbhds = neighborhood_filter(t, x);
                for (mask_t nb : nbhds.masks()) {
                    if (!rx.sets().contains(nb)) {
                        fail(r, cx_make(t, "neighborhood " + mask_to_string(u, nb) +
                                               " of x=" + std::to_string(x) + " escapes R_x"));
                        return;
                    }
                }
            }
            if (n <= 4) {
                for (mask_t fm = 1; fm <= u.full_mask(); ++fm)
                    if (!check_family(family_R_F(t, point_set(u, fm)),
                                      "R_F at F=" + mask_to_string(u, fm)))
                        return;
            } else {
                for (int j = 0; j < sets_per_topology(n); ++j) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(j));
                    const mask_t fm = static_cast<mask_t>(1 + rng.below(u.full_mask()));
                    if (!check_family(family_R_F(t, point_set(u, fm)),
                                      "R_F at F=" + mask_to_string(u, fm)))
                        return;
                }
            }
            ++topo_index;
        }
    }
}

int clause_index(char clause) { return clause - 'b'; }

void run_lem31(const ctx& c, result& r, char clause) {
    for (int n = 1; n <= c.max_n(); ++n)
        for (const topology& t : c.at(n)) {
            const auto rep = lemma31_checks(t);
            const auto& cl = rep.clauses[static_cast<std::size_t>(clause_index(clause))];
            if (!cl.holds) {
                fail(r, cx_make(t, "clause (" + cl.clause + "): " + cl.witness));
                return;
            }
        }
}

void run_lem32a(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        for (const topology& t : c.at(n)) {
            // eventually constant sequences: any prefix, one-point cycle
            const auto check = [&](const ep_sequence& s) {
                if (inf_set(s).size() != 1) return true;
                const int y = inf_set(s).points().front();
                for (int x = 0; x < n; ++x) {
                    if (star(t, x).contains(y) && !converges_to(t, s, x)) {
                        ojson cx = cx_make(t, "eventually-constant sequence at y=" + std::to_string(y) +
                                                  " fails to converge to x=" + std::to_string(x));
                        attach_sequence(cx, s);
                        fail(r, std::move(cx));
                        return false;
                    }
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                bool stop = false;
                for (int y = 0; y < n && !stop; ++y) {
                    const std::vector<int> cyc{y};
                    // prefixes up to length 3 with the constant cycle [y]
                    for (int pl = 0; pl <= 3 && !stop; ++pl)
                        for (std::uint64_t pc = 0; pc < ipow(static_cast<std::uint64_t>(n), pl) && !stop; ++pc) {
                            std::vector<int> prefix(static_cast<std::size_t>(pl));
                            std::uint64_t cdx = pc;
                            for (int i = 0; i < pl; ++i) {
                                prefix[static_cast<std::size_t>(i)] = static_cast<int>(cdx % static_cast<std::uint64_t>(n));
                                cdx /= static_cast<std::uint64_t>(n);
                            }
                            if (!check(ep_sequence(u, prefix, cyc))) stop = true;
                        }
                }
                if (stop) return;
            } else {
                for (int i = 0; i < seqs_per_topology(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                    auto s = sample_sequence(u, 4, 1, rng);
                    if (!check(ep_sequence(u, s.prefix(), {s.cycle().front()}))) return;
                }
            }
        }
    }
}

void run_lem32b(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            const auto check = [&](const ep_sequence& s) {
                for (int x = 0; x < n; ++x) {
                    if (!converges_to(t, s, x)) continue;
                    if (!inf_set(s).intersects(star(t, x))) {
                        ojson cx = cx_make(t, "no bounded cluster point above x=" + std::to_string(x));
                        attach_sequence(cx, s);
                        fail(r, std::move(cx));
                        return false;
                    }
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                if (!for_each_sequence(u, 3, 3, check)) return;
            } else {
                for (int i = 0; i < seqs_per_topology(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(i));
                    if (!check(sample_sequence(u, 4, 4, rng))) return;
                }
            }
            ++topo_index;
        }
    }
}

void run_lem32c(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        for (const topology& t : c.at(n)) {
            const point_set unbounded = bounded_and_unbounded(t).unbounded;
            for (mask_t closed : closed_set_masks(t)) {
                const point_set a(u, closed);
                // beta-closure of a meets the unbounded part iff a does here
                const bool disjoint_from_unbounded = !a.intersects(unbounded);
                const bool compact = robinson_compact(t, a) && is_compact_subset(t, a);
                if (disjoint_from_unbounded != compact) {
                    fail(r, cx_make(t, "compactness equivalence fails at A=" + mask_to_string(u, closed)));
                    return;
                }
            }
        }
    }
}

void run_thm33(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            const auto check = [&](mask_t m) {
                const point_set a(u, m);
                if (robinson_compact(t, a) != is_compact_subset(t, a)) {
                    fail(r, cx_make(t, "compactness criteria disagree at A=" + mask_to_string(u, m)));
                    return false;
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                for (mask_t m = 0; m <= u.full_mask(); ++m)
                    if (!check(m)) return;
            } else {
                for (int i = 0; i < sets_per_topology(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(i));
                    if (!check(static_cast<mask_t>(rng.next() & u.full_mask()))) return;
                }
            }
            ++topo_index;
        }
    }
}

// shared scan for the map-pair claims
void scan_map_pairs(const ctx& c, result& r,
                    const std::function<bool(const topology&, const topology&, const space_map&, result&)>& check) {
    for (int nx = 1; nx <= c.max_n(); ++nx)
        for (int ny = 1; ny <= c.max_n(); ++ny) {
            if (std::max(nx, ny) <= exhaustive_limit) {
                for (const topology& tx : c.at(nx))
                    for (const topology& ty : c.at(ny)) {
                        bool stop = false;
                        for_each_map(universe(nx), universe(ny), [&](const space_map& f) {
                            if (!check(tx, ty, f, r)) { stop = true; return false; }
                            return true;
                        });
                        if (stop) return;
                    }
            }
        }
    for (int target = exhaustive_limit + 1; target <= c.max_n(); ++target) {
        for (int i = 0; i < pair_samples(target); ++i) {
            counter_rng rng(c.seed(), r.claim + "#" + std::to_string(target), static_cast<std::uint64_t>(i));
            const bool x_is_target = rng.below(2) == 0;
            const int nx = x_is_target ? target : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(target)));
            const int ny = x_is_target ? 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(target))) : target;
            const auto& txs = c.at(nx);
            const auto& tys = c.at(ny);
            const topology& tx = txs[static_cast<std::size_t>(rng.below(txs.size()))];
            const topology& ty = tys[static_cast<std::size_t>(rng.below(tys.size()))];
            const space_map f = sample_map(universe(nx), universe(ny), rng);
            if (!check(tx, ty, f, r)) return;
        }
    }
}

void run_thm34(const ctx& c, result& r) {
    scan_map_pairs(c, r, [](const topology& tx, const topology& ty, const space_map& f, result& res) {
        const bool star_side = is_continuous_stars(tx, ty, f);
        const bool classical = is_continuous_classical(tx, ty, f);
        if (star_side != classical) {
            ojson cx = cx_make(tx, std::string("continuity criteria disagree: star=") +
                                       (star_side ? "t" : "f") + " classical=" + (classical ? "t" : "f"));
            cx["space_y"] = io::render_space(io::document_from(ty));
            attach_map(cx, f);
            fail(res, std::move(cx));
            return false;
        }
        return true;
    });
}

void run_thm36(const ctx& c, result& r) {
    scan_map_pairs(c, r, [](const topology& tx, const topology& ty, const space_map& f, result& res) {
        if (!is_continuous_classical(tx, ty, f)) return true;
        const bool star_side = is_open_map_stars(tx, ty, f);
        const bool classical = is_open_map_classical(tx, ty, f);
        if (star_side != classical) {
            ojson cx = cx_make(tx, std::string("open-map criteria disagree: star=") +
                                       (star_side ? "t" : "f") + " classical=" + (classical ? "t" : "f"));
            cx["space_y"] = io::render_space(io::document_from(ty));
            attach_map(cx, f);
            fail(res, std::move(cx));
            return false;
        }
        return true;
    });
}

void run_thm37(const ctx& c, result& r) {
    scan_map_pairs(c, r, [](const topology& tx, const topology& ty, const space_map& f, result& res) {
        if (!is_continuous_classical(tx, ty, f)) return true;
        for (mask_t k = 0; k <= tx.space().full_mask(); ++k) {
            if (!image_compact_check(tx, ty, f, point_set(tx.space(), k))) {
                ojson cx = cx_make(tx, "image of compact K=" + mask_to_string(tx.space(), k) +
                                           " is not compact");
                cx["space_y"] = io::render_space(io::document_from(ty));
                attach_map(cx, f);
                fail(res, std::move(cx));
                return false;
            }
        }
        return true;
    });
}

void run_lem38(const ctx& c, result& r, bool hausdorff_only) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        for (const topology& t : c.at(n)) {
            if (hausdorff_only && !axiom_T2(t).star_verdict) continue;
            for (int x = 0; x < n; ++x) {
                // the extension of the identity sends the principal point at y
                // to y, so the image of star(x) is star(x) itself
                const point_set img = star(t, x);
                if (!(img == point_set::single(u, x))) {
                    fail(r, cx_make(t, "identity extension image of star(" + std::to_string(x) +
                                           ") is " + img.to_string() + ", not {" + std::to_string(x) + "}"));
                    return;
                }
            }
        }
    }
}

void run_thm311(const ctx& c, result& r, bool hausdorff_only) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            if (hausdorff_only && !axiom_T2(t).star_verdict) { ++topo_index; continue; }
            const auto check = [&](const space_map& f) {
                if (!is_continuous_classical(t, t, f)) return true;
                const auto by_stars = fixed_point_via_stars(t, f);
                const bool literal = f.fixed_point().has_value();
                if (by_stars.exists != literal) {
                    ojson cx = cx_make(t, std::string("star criterion ") +
                                              (by_stars.exists ? "holds" : "fails") +
                                              " but the map has " + (literal ? "a" : "no") +
                                              " fixed point");
                    attach_map(cx, f);
                    if (by_stars.witness)
                        cx["star_witness"] = ojson{{"x", by_stars.witness->x},
                                                   {"p", by_stars.witness->p.point()},
                                                   {"q", by_stars.witness->q.point()}};
                    fail(r, std::move(cx));
                    return false;
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                if (!for_each_map(u, u, check)) return;
            } else {
                for (int i = 0; i < maps_per_topology(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(i));
                    if (!check(sample_map(u, u, rng))) return;
                }
            }
            ++topo_index;
        }
    }
}

void run_lem313(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            const auto check = [&](const ep_sequence& s) {
                for (int x = 0; x < n; ++x) {
                    const auto rep = lemma_313_check(t, s, x);
                    if (!rep.a_iff_b() || !rep.ab_implies_c()) {
                        ojson cx = cx_make(t, "clause failure at x=" + std::to_string(x) +
                                                  ": a=" + (rep.converges ? "t" : "f") +
                                                  " b=" + (rep.tails_in_star ? "t" : "f") +
                                                  " c=" + (rep.plim_all ? "t" : "f"));
                        attach_sequence(cx, s);
                        cx["x"] = x;
                        fail(r, std::move(cx));
                        return false;
                    }
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                if (!for_each_sequence(u, 3, 3, check)) return;
            } else {
                for (int i = 0; i < seqs_per_topology(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(i));
                    if (!check(sample_sequence(u, 4, 4, rng))) return;
                }
            }
            ++topo_index;
        }
    }
}

ojson pinned_lem316_counterexample() {
    const universe u(2);
    const topology t = topology::indiscrete(u);
    const ep_sequence s(u, {}, {0, 1});
    ojson cx = cx_make(t, "sequence converges to x=0 yet the subnet-uniform limit fails for p=0: "
                          "the subsequence with tail set {1} defeats it");
    attach_sequence(cx, s);
    cx["p"] = 0;
    cx["x"] = 0;
    return cx;
}

void run_lem316(const ctx& c, result& r, subnet_mode mode) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        std::uint64_t topo_index = 0;
        for (const topology& t : c.at(n)) {
            const auto check = [&](const ep_sequence& s) {
                for (int x = 0; x < n; ++x) {
                    const auto rep = lemma_316_check(t, s, x, mode);
                    if (rep.converges != rep.splim_all) {
                        ojson cx = cx_make(t, "equivalence fails at x=" + std::to_string(x) +
                                                  ": a=" + (rep.converges ? "t" : "f") +
                                                  " b=" + (rep.splim_all ? "t" : "f"));
                        attach_sequence(cx, s);
                        cx["x"] = x;
                        if (rep.defeater) {
                            cx["p"] = rep.defeater->first;
                            cx["defeating_tail"] = io::points_json(rep.defeater->second);
                        }
                        fail(r, std::move(cx));
                        return false;
                    }
                }
                return true;
            };
            if (n <= exhaustive_limit) {
                if (!for_each_sequence(u, 3, 3, check)) break;
            } else {
                bool stop = false;
                for (int i = 0; i < seqs_per_topology(n) && !stop; ++i) {
                    counter_rng rng(c.seed(), r.claim, topo_index * 131 + static_cast<std::uint64_t>(i));
                    if (!check(sample_sequence(u, 4, 4, rng))) stop = true;
                }
                if (stop) break;
            }
            ++topo_index;
        }
        if (r.st == status::falsified) break;
    }
    if (r.st == status::falsified && mode == subnet_mode::strict) {
        // report the canonical minimal instance: the coarsest two-point space
        const universe u2(2);
        const topology ind = topology::indiscrete(u2);
        const ep_sequence alt(u2, {}, {0, 1});
        const auto rep = lemma_316_check(ind, alt, 0, subnet_mode::strict);
        if (rep.converges && !rep.splim_all) r.counterexample = pinned_lem316_counterexample();
    }
}

void run_thm42a(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n) {
        const universe u(n);
        const auto check = [&](const star_system& sys) {
            const topology t = generate_topology(sys);
            if (!is_topology_family(u, t.opens())) {
                ojson cx = cx_make(t, "generated family violates the topology axioms");
                cx["input_stars"] = io::render_space(io::document_from(sys));
                fail(r, std::move(cx));
                return false;
            }
            // regenerated stars stay inside the reflexive-transitive closure
            // of the input, and preorder inputs round-trip exactly
            std::vector<mask_t> closure_masks = sys.masks();
            for (;;) {
                bool grew = false;
                for (int x = 0; x < n; ++x) {
                    mask_t m = closure_masks[static_cast<std::size_t>(x)];
                    const mask_t before = m;
                    for_each_point(before, [&](int y) { m |= closure_masks[static_cast<std::size_t>(y)]; });
                    if (m != before) { closure_masks[static_cast<std::size_t>(x)] = m; grew = true; }
                }
                if (!grew) break;
            }
            const star_system back = specialization(t);
            for (int x = 0; x < n; ++x) {
                if ((back.masks()[static_cast<std::size_t>(x)] & ~closure_masks[static_cast<std::size_t>(x)]) != 0) {
                    ojson cx = cx_make(t, "regenerated star of x=" + std::to_string(x) +
                                              " escapes the transitive closure of the input");
                    cx["input_stars"] = io::render_space(io::document_from(sys));
                    fail(r, std::move(cx));
                    return false;
                }
            }
            if (sys.is_preorder() && !(back == sys)) {
                ojson cx = cx_make(t, "preorder input does not round-trip");
                cx["input_stars"] = io::render_space(io::document_from(sys));
                fail(r, std::move(cx));
                return false;
            }
            return true;
        };
        if (n <= exhaustive_limit) {
            if (!for_each_self_system(u, check)) return;
        } else {
            const int off_bits = n * n - n;
            if (off_bits <= 12) {
                if (!for_each_self_system(u, check)) return;
            } else {
                for (int i = 0; i < system_samples(n); ++i) {
                    counter_rng rng(c.seed(), r.claim, static_cast<std::uint64_t>(i));
                    if (!check(sample_system(u, rng))) return;
                }
            }
        }
    }
}

void run_thm42b(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n)
        for (const topology& t : c.at(n)) {
            const auto rep = generated_finer_check(t);
            if (!rep.finer || !rep.equal) {
                fail(r, cx_make(t, rep.finer ? "regeneration is finer but not equal"
                                             : "regeneration lost an open set"));
                return;
            }
        }
}

void run_thm44(const ctx& c, result& r, axiom_entry (*axiom)(const topology&)) {
    for (int n = 1; n <= c.max_n(); ++n)
        for (const topology& t : c.at(n)) {
            const axiom_entry e = axiom(t);
            if (!e.agree()) {
                fail(r, cx_make(t, e.axiom + " verdicts disagree: star=" +
                                       (e.star_verdict ? "t" : "f") + " classical=" +
                                       (e.classical_verdict ? "t" : "f") +
                                       (e.witness ? " (" + *e.witness + ")" : "")));
                return;
            }
        }
}

void run_thm445(const ctx& c, result& r) {
    std::uint64_t spaces = 0, classical_true = 0, star_true = 0, converse_gap = 0;
    for (int n = 1; n <= c.max_n(); ++n)
        for (const topology& t : c.at(n)) {
            const axiom_entry e = axiom_completely_regular(t);
            ++spaces;
            if (e.classical_verdict) ++classical_true;
            if (e.star_verdict) ++star_true;
            if (e.star_verdict && !e.classical_verdict) ++converse_gap;
            if (e.classical_verdict && !e.star_verdict) {
                fail(r, cx_make(t, "completely regular space violates the star condition" +
                                       (e.witness ? " (" + *e.witness + ")" : "")));
                return;
            }
        }
    r.note = "census: spaces=" + std::to_string(spaces) +
             " classical=" + std::to_string(classical_true) + " star=" + std::to_string(star_true) +
             " star-without-classical=" + std::to_string(converse_gap) +
             "; only the stated direction is asserted";
}

void run_def45(const ctx& c, result& r) {
    for (int n = 1; n <= c.max_n(); ++n)
        for (const topology& t : c.at(n)) {
            const bool t2 = axiom_T2(t).star_verdict;
            const bool t2h = axiom_T2half(t).star_verdict;
            const bool sh = axiom_strongly_hausdorff(t).star_verdict;
            if (t2h != t2 || sh != t2) {
                fail(r, cx_make(t, "strengthened axioms do not collapse to T2 here"));
                return;
            }
        }
    if (r.st == status::verified) r.st = status::degenerate_documented;
}

// --- registry ---------------------------------------------------------------

struct claim_def {
    const char* id;
    status expected;
    const char* note;
    std::function<void(const ctx&, result&)> run;
};

const std::vector<claim_def>& registry() {
    static const std::vector<claim_def> table = {
        {"Lem2.1(a)", status::verified,
         "beta extension of a map: membership and image laws on principal points",
         run_lem21a},
        {"Lem2.1(c)", status::verified,
         "extension has a fixed point iff every partition has a cell meeting its image",
         run_lem21c},
        {"Lem2.1(d)", status::verified,
         "fixed-point-free permutations admit a three-part cover with displaced parts",
         run_lem21d},
        {"Thm2.2", status::verified,
         "fixed-point-free maps have fixed-point-free extensions", run_thm22},
        {"Thm2.3", status::verified,
         "extension fixes p iff the fixed-point set belongs to p", run_thm23},
        {"Thm2.5", status::verified,
         "partition regularity: definition, subfamily and ultrafilter clauses agree", run_thm25},
        {"Rem2.6", status::verified,
         "closure families R_x and R_F are upward closed and partition regular", run_rem26},
        {"Lem3.1(b)", status::verified, "neighborhood filter inside p forces p into the star",
         [](const ctx& c, result& r) { run_lem31(c, r, 'b'); }},
        {"Lem3.1(c)", status::verified, "neighborhoods are the sets belonging to every near point",
         [](const ctx& c, result& r) { run_lem31(c, r, 'c'); }},
        {"Lem3.1(d)", status::verified, "closure membership matches star intersection",
         [](const ctx& c, result& r) { run_lem31(c, r, 'd'); }},
        {"Lem3.1(e)", status::verified, "the intersection of a star is the neighborhood filter",
         [](const ctx& c, result& r) { run_lem31(c, r, 'e'); }},
        {"Lem3.1(f)", status::verified, "interior membership matches star containment",
         [](const ctx& c, result& r) { run_lem31(c, r, 'f'); }},
        {"Lem3.2(a)", status::verified,
         "sequences settling on a near point converge in the space", run_lem32a},
        {"Lem3.2(b)", status::verified,
         "convergent sequences have a bounded cluster point", run_lem32b},
        {"Lem3.2(c)", status::verified,
         "closed sets are compact iff their closure avoids the unbounded part", run_lem32c},
        {"Thm3.3", status::verified,
         "star compactness criterion matches the open-cover definition", run_thm33},
        {"Thm3.4", status::verified,
         "star continuity criterion matches the preimage definition", run_thm34},
        {"Thm3.6", status::verified,
         "star open-map criterion matches the image definition", run_thm36},
        {"Thm3.7", status::verified, "continuous images of compact sets are compact", run_thm37},
        {"Lem3.8", status::falsified,
         "identity extension collapses stars to their basepoints; fails without Hausdorff",
         [](const ctx& c, result& r) { run_lem38(c, r, false); }},
        {"Lem3.8(Hausdorff)", status::verified,
         "identity extension collapses stars to their basepoints on Hausdorff spaces",
         [](const ctx& c, result& r) { run_lem38(c, r, true); }},
        {"Thm3.11", status::falsified,
         "star fixed-point criterion, literal reading; fails without Hausdorff",
         [](const ctx& c, result& r) { run_thm311(c, r, false); }},
        {"Thm3.11(Hausdorff)", status::verified,
         "star fixed-point criterion on Hausdorff spaces",
         [](const ctx& c, result& r) { run_thm311(c, r, true); }},
        {"Lem3.13", status::verified,
         "convergence matches tail containment and forces principal limits", run_lem313},
        {"Lem3.16(strict)", status::falsified,
         "subnet-uniform limits, strict reading; defeated by subsequences dropping the point",
         [](const ctx& c, result& r) { run_lem316(c, r, subnet_mode::strict); }},
        {"Lem3.16(transported)", status::verified,
         "subnet-uniform limits with the point re-anchored along subsequences",
         [](const ctx& c, result& r) { run_lem316(c, r, subnet_mode::transported); }},
        {"Thm4.2(a)", status::verified,
         "star systems generate topologies; preorder systems round-trip", run_thm42a},
        {"Thm4.2(b)", status::verified,
         "the generated topology refines the source and coincides with it here", run_thm42b},
        {"Thm4.4(1)", status::verified, "T0 iff stars are pairwise distinct",
         [](const ctx& c, result& r) { run_thm44(c, r, axiom_T0); }},
        {"Thm4.4(2)", status::verified, "T1 iff star differences are nonempty both ways",
         [](const ctx& c, result& r) { run_thm44(c, r, axiom_T1); }},
        {"Thm4.4(3)", status::verified, "T2 iff stars are pairwise disjoint",
         [](const ctx& c, result& r) { run_thm44(c, r, axiom_T2); }},
        {"Thm4.4(4)", status::verified, "regular iff T1 and stars avoid closed-set stars",
         [](const ctx& c, result& r) { run_thm44(c, r, axiom_regular); }},
        {"Thm4.4(5)", status::verified,
         "completely regular spaces satisfy the star separation condition", run_thm445},
        {"Thm4.4(6)", status::verified, "normal iff T1 and disjoint closed sets have disjoint stars",
         [](const ctx& c, result& r) { run_thm44(c, r, axiom_normal); }},
        {"Def4.5", status::degenerate_documented,
         "the strengthened Hausdorff axioms collapse to T2 over finite universes", run_def45},
    };
    return table;
}

bool claim_selected(const std::string& id, const std::string& filter) {
    if (filter.empty()) return true;
    std::size_t start = 0;
    while (start <= filter.size()) {
        std::size_t end = filter.find(',', start);
        if (end == std::string::npos) end = filter.size();
        const std::string item = filter.substr(start, end - start);
        if (!item.empty() && id.compare(0, item.size(), item) == 0) return true;
        start = end + 1;
    }
    return false;
}

} // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.emplace_back(c.id);
    return out;
}

status expected_status(const std::string& claim) {
    for (const auto& c : registry())
        if (claim == c.id) return c.expected;
    throw error(errc::invalid_document, "unknown claim id: " + claim);
}

std::vector<result> run_suite(const config& cfg, const std::string& filter) {
    if (cfg.max_n < 1 || cfg.max_n > max_enumeration_points)
        throw error(errc::size_too_large,
                    "max_n must be between 1 and " + std::to_string(max_enumeration_points));

    std::vector<std::vector<topology>> topos;
    topos.reserve(static_cast<std::size_t>(cfg.max_n));
    for (int n = 1; n <= cfg.max_n; ++n) topos.push_back(all_topologies(n));
    const ctx c{&cfg, &topos};

    std::vector<const claim_def*> selected;
    for (const auto& def : registry())
        if (claim_selected(def.id, filter)) selected.push_back(&def);

    std::vector<result> results(selected.size());
    const auto run_one = [&](std::size_t i) {
        result r;
        r.claim = selected[i]->id;
        r.sc = scope{cfg.max_n, cfg.max_n <= exhaustive_limit, cfg.seed};
        r.st = status::verified;
        r.counterexample = nullptr;
        r.note = selected[i]->note;
        selected[i]->run(c, r);
        results[i] = std::move(r);
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || selected.size() <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> workers;
        std::size_t stride = static_cast<std::size_t>(jobs);
        for (std::size_t w = 0; w < stride; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < selected.size(); i += stride) run_one(i);
            });
        for (auto& t : workers) t.join();
    }
    return results;
}

io::ojson render_result(const result& r) {
    ojson out;
    out["claim"] = r.claim;
    out["scope"] = ojson{{"max_n", r.sc.max_n},
                         {"kind", r.sc.exhaustive ? "exhaustive" : "sampled"},
                         {"seed", r.sc.seed}};
    out["status"] = std::string(to_string(r.st));
    const status expected = expected_status(r.claim);
    out["expected"] = std::string(to_string(expected));
    out["match"] = (r.st == expected);
    out["counterexample"] = r.counterexample;
    out["note"] = r.note;
    return out;
}

bool matches_manifest(const std::vector<result>& results) {
    for (const auto& r : results)
        if (r.st != expected_status(r.claim)) return false;
    return true;
}

} // namespace startopo::suite
