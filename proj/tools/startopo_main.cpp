// Command line front end: axiom reports, topology generation, map checks,
// the claim verification suite, exhaustive enumeration and sequence limits.
// All output is JSON on stdout; exit codes are 0 (success / verdict true /
// expected statuses), 1 (verdict false / unexpected falsification) and 2
// (invalid input).

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "startopo/convergence.hpp"
#include "startopo/enumeration.hpp"
#include "startopo/io.hpp"
#include "startopo/separation.hpp"
#include "startopo/stars.hpp"
#include "startopo/suite.hpp"

namespace {

using namespace startopo;
using io::ojson;

ojson axiom_entry_json(const axiom_entry& e) {
    ojson out;
    out["axiom"] = e.axiom;
    out["star"] = e.star_verdict;
    out["classical"] = e.classical_verdict;
    out["agree"] = e.agree();
    out["witness"] = e.witness ? ojson(*e.witness) : ojson(nullptr);
    return out;
}

int cmd_axioms(const std::string& input) {
    const auto doc = io::parse_space(io::load_json(input));
    const topology t = io::realize_topology(doc);
    const axiom_report rep = full_axiom_report(t);
    ojson out;
    out["n"] = t.space().size();
    ojson entries = ojson::array();
    for (const auto& e : rep.entries) entries.push_back(axiom_entry_json(e));
    out["axioms"] = std::move(entries);
    out["chains"] = ojson{{"t2_implies_t1_implies_t0", rep.chain_t2_t1_t0},
                          {"normal_implies_regular", rep.chain_normal_regular},
                          {"strongly_hausdorff_implies_t2half_implies_t2", rep.chain_sh_t2half_t2}};
    out["degeneracy"] = ojson{{"t2half_equals_t2", rep.t2half_equals_t2},
                              {"strongly_hausdorff_equals_t2", rep.strongly_hausdorff_equals_t2}};
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_generate(const std::string& input) {
    const auto doc = io::parse_space(io::load_json(input));
    if (!doc.stars)
        throw error(errc::invalid_document, "generate expects a document in stars form");
    const topology t = generate_topology(io::to_star_system(doc));
    std::cout << io::render_space(io::document_from(t)).dump() << "\n";
    return 0;
}

int cmd_check_map(const std::string& space_x, const std::string& space_y,
                  const std::string& map_path, const std::string& mode) {
    const topology tx = io::realize_topology(io::parse_space(io::load_json(space_x)));
    const topology ty = space_y.empty()
                            ? tx
                            : io::realize_topology(io::parse_space(io::load_json(space_y)));
    const space_map f = io::parse_map(io::load_json(map_path));
    if (!(f.domain() == tx.space()) || !(f.codomain() == ty.space()))
        throw error(errc::universe_mismatch, "map universes do not match the given spaces");

    ojson out;
    out["mode"] = mode;
    bool star_side = false, classical = false;
    ojson witness = nullptr, certificate = nullptr;

    if (mode == "continuous") {
        star_side = is_continuous_stars(tx, ty, f);
        classical = is_continuous_classical(tx, ty, f);
        if (!classical) {
            const auto open = continuity_witness_open(tx, ty, f);
            witness = ojson{{"open", io::points_json(*open)},
                            {"preimage", io::points_json(f.preimage(*open))}};
        }
    } else if (mode == "open") {
        star_side = is_open_map_stars(tx, ty, f); // throws NotContinuous on bad input
        classical = is_open_map_classical(tx, ty, f);
        if (!classical) {
            const auto open = open_map_witness_open(tx, ty, f);
            witness = ojson{{"open", io::points_json(*open)},
                            {"image", io::points_json(f.image(*open))}};
        }
    } else if (mode == "fixed-point") {
        if (!(tx.space() == ty.space()))
            throw error(errc::universe_mismatch, "fixed-point mode needs an endo map");
        const auto by_stars = fixed_point_via_stars(tx, f);
        star_side = by_stars.exists;
        classical = f.fixed_point().has_value();
        if (by_stars.witness)
            witness = ojson{{"x", by_stars.witness->x},
                            {"p", by_stars.witness->p.point()},
                            {"q", by_stars.witness->q.point()}};
        if (!classical) {
            if (f.is_injective()) {
                const auto parts = three_partition(f);
                certificate = ojson{{"three_partition",
                                     ojson::array({io::points_json(parts[0]), io::points_json(parts[1]),
                                                   io::points_json(parts[2])})}};
            } else if (tx.space().size() <= 8) {
                const auto meet = partition_cell_meets(f, tx.space().size());
                if (meet.violating_partition) {
                    ojson cells = ojson::array();
                    for (const auto& cell : *meet.violating_partition)
                        cells.push_back(io::points_json(cell));
                    certificate = ojson{{"displaced_partition", std::move(cells)}};
                }
            }
        }
    } else {
        throw error(errc::invalid_document, "mode must be continuous, open or fixed-point");
    }

    out["star"] = star_side;
    out["classical"] = classical;
    out["agree"] = (star_side == classical);
    out["witness"] = std::move(witness);
    out["certificate"] = std::move(certificate);
    std::cout << out.dump() << "\n";
    return classical ? 0 : 1;
}

int cmd_verify(int max_n, std::uint64_t seed, int jobs, const std::string& suites) {
    suite::config cfg;
    cfg.max_n = max_n;
    cfg.seed = seed;
    cfg.jobs = jobs;
    const auto results = suite::run_suite(cfg, suites);
    int mismatched = 0;
    for (const auto& r : results) {
        std::cout << suite::render_result(r).dump() << "\n";
        if (r.st != suite::expected_status(r.claim)) ++mismatched;
    }
    std::cerr << results.size() << " claims, " << (results.size() - mismatched)
              << " matching the expected-status manifest, " << mismatched << " unexpected\n";
    return mismatched == 0 ? 0 : 1;
}

int cmd_enumerate(int n, bool count_only) {
    if (count_only) {
        std::cout << count_topologies(n) << "\n";
        return 0;
    }
    for_each_topology(n, [](const topology& t) {
        std::cout << io::render_space(io::document_from(t)).dump() << "\n";
    });
    return 0;
}

int cmd_limits(const std::string& input, const std::string& sequence_path,
               int point, int beta, const std::string& mode_name) {
    const topology t = io::realize_topology(io::parse_space(io::load_json(input)));
    const ep_sequence s = io::parse_sequence(io::load_json(sequence_path));
    if (!(s.space() == t.space()))
        throw error(errc::universe_mismatch, "sequence universe does not match the space");
    const subnet_mode mode =
        mode_name == "transported" ? subnet_mode::transported : subnet_mode::strict;

    const limit_report rep = limits_of(t, s);
    ojson out;
    out["inf_set"] = io::points_json(rep.inf_set);
    out["limits"] = io::points_json(rep.limits);
    out["cluster_points"] = io::points_json(rep.cluster_points);
    out["unique_limit"] = rep.limits.size() <= 1;

    if (point >= 0) {
        require_point(t.space(), point);
        ojson q;
        q["x"] = point;
        q["converges"] = converges_to(t, s, point);
        const auto l313 = lemma_313_check(t, s, point);
        q["tail_check"] = ojson{{"a", l313.converges},
                                {"b", l313.tails_in_star},
                                {"c", l313.plim_all},
                                {"a_iff_b", l313.a_iff_b()},
                                {"ab_implies_c", l313.ab_implies_c()}};
        const auto l316 = lemma_316_check(t, s, point, mode);
        ojson sub{{"a", l316.converges}, {"b", l316.splim_all}, {"mode", mode_name}};
        if (l316.defeater)
            sub["defeater"] = ojson{{"p", l316.defeater->first},
                                    {"tail", io::points_json(l316.defeater->second)}};
        else
            sub["defeater"] = nullptr;
        q["subnet_check"] = std::move(sub);
        if (beta >= 0) {
            require_point(t.space(), beta);
            const beta_point p(t.space(), beta);
            q["p"] = beta;
            q["p_lim"] = p_lim(t, s, p, point);
            q["sp_lim"] = sp_lim(t, s, p, point, mode);
        }
        out["queries"] = std::move(q);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topology through principal ultrafilters: axiom reports, "
                 "generated topologies, map checks and a claim verification suite"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string space_y_path, map_path, sequence_path;
    std::string mode = "continuous";
    std::string limits_mode = "strict";
    std::string suites;
    int max_n = 4;
    int enum_n = 3;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool count_only = false;
    int query_point = -1;
    int query_beta = -1;

    auto* axioms = app.add_subcommand("axioms", "separation axiom report for a space document");
    axioms->add_option("--input", input, "space document path, or - for stdin");

    auto* generate = app.add_subcommand("generate", "opens generated by a star map document");
    generate->add_option("--input", input, "space document in stars form, or - for stdin");

    auto* check = app.add_subcommand("check-map", "star and classical verdicts for a map");
    check->add_option("--space-x", input, "domain space document")->required();
    check->add_option("--space-y", space_y_path, "codomain space document (defaults to --space-x)");
    check->add_option("--map", map_path, "map document")->required();
    check->add_option("--mode", mode, "continuous | open | fixed-point");

    auto* verify = app.add_subcommand("verify", "run the claim verification suite");
    verify->add_option("--max-n", max_n, "largest universe size (<= 5)");
    verify->add_option("--seed", seed, "seed for sampled scopes");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--suite", suites, "comma separated claim ids or prefixes");

    auto* enumerate = app.add_subcommand("enumerate", "stream or count all topologies on n points");
    enumerate->add_option("--max-n,--n", enum_n, "point count (<= 5)");
    enumerate->add_flag("--count", count_only, "print only the count");

    auto* limits = app.add_subcommand("limits", "limits and cluster points of a sequence");
    limits->add_option("--input", input, "space document")->required();
    limits->add_option("--sequence", sequence_path, "sequence document")->required();
    limits->add_option("--point", query_point, "evaluate convergence toward this point");
    limits->add_option("--beta", query_beta, "principal ultrafilter for p-lim / sp-lim queries");
    limits->add_option("--mode", limits_mode, "strict | transported subnet reading");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (axioms->parsed()) return cmd_axioms(input);
        if (generate->parsed()) return cmd_generate(input);
        if (check->parsed()) return cmd_check_map(input, space_y_path, map_path, mode);
        if (verify->parsed()) return cmd_verify(max_n, seed, jobs, suites);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, count_only);
        if (limits->parsed()) return cmd_limits(input, sequence_path, query_point, query_beta, limits_mode);
    } catch (const startopo::error& e) {
        std::cout << ojson{{"error", e.code_name()}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << ojson{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
