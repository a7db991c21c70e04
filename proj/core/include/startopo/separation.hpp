#pragma once

#include <optional>
#include <string>
#include <vector>

#include "startopo/stars.hpp"
#include "startopo/topology.hpp"

namespace startopo {

/// The topology generated by a star system: a set is open iff it contains
/// the star of each of its points. The system only needs to be
/// self-containing; non-transitive systems are accepted, in which case the
/// generated topology's own specialization system may differ from the input
/// (see round_trip_gap).
topology generate_topology(const star_system& sys);

struct finer_check {
    bool finer; // every open of t is open in the regenerated topology
    bool equal; // the regeneration reproduces t exactly (finite spaces)
};

/// Regenerates a topology from its own specialization system and compares.
finer_check generated_finer_check(const topology& t);

struct round_trip_report {
    bool input_was_preorder;
    bool identity; // specialization(generate_topology(sys)) == sys
};

round_trip_report round_trip_gap(const star_system& sys);

/// One separation axiom verdict: the star-side criterion, the classical
/// open-set criterion, and a witness exactly when a verdict is false or the
/// two disagree.
struct axiom_entry {
    std::string axiom;
    bool star_verdict;
    bool classical_verdict;
    std::optional<std::string> witness;
    bool agree() const { return star_verdict == classical_verdict; }
};

axiom_entry axiom_T0(const topology& t);
axiom_entry axiom_T1(const topology& t);
axiom_entry axiom_T2(const topology& t);

/// Star criteria for the two strengthened Hausdorff axioms. Closures in the
/// ultrafilter space are identities over a finite universe, so both reduce
/// to the plain Hausdorff criterion; the degeneracy is expected and recorded
/// by the verification suite.
axiom_entry axiom_T2half(const topology& t);
axiom_entry axiom_strongly_hausdorff(const topology& t);

axiom_entry axiom_regular(const topology& t);
axiom_entry axiom_normal(const topology& t);

/// Complete regularity. The classical verdict uses the component oracle: a
/// continuous map from a finite space into a Hausdorff value space is
/// constant on components of the symmetrized specialization relation, so a
/// point is function-separable from a closed set iff its component misses
/// the set. The star verdict is the necessary condition (star of x disjoint
/// from the star set of F); the classical verdict implies it, and only that
/// implication is asserted. The converse is evaluated and reported, never
/// assumed.
axiom_entry axiom_completely_regular(const topology& t);

/// Components of the symmetrized specialization relation; clopen in any
/// finite topology.
std::vector<mask_t> specialization_components(const topology& t);

struct axiom_report {
    std::vector<axiom_entry> entries; // fixed order: T0,T1,T2,T2half,SH,Regular,CompletelyRegular,Normal
    bool chain_t2_t1_t0;
    bool chain_normal_regular;
    bool chain_sh_t2half_t2;
    bool t2half_equals_t2;
    bool strongly_hausdorff_equals_t2;
    const axiom_entry& entry(const std::string& name) const;
};

axiom_report full_axiom_report(const topology& t);

} // namespace startopo
