#pragma once

#include <optional>
#include <vector>

#include "startopo/filters.hpp"
#include "startopo/topology.hpp"

namespace startopo {

/// An eventually periodic sequence over a universe: a finite prefix followed
/// by a repeating nonempty cycle. term(k) is prefix[k] for k < |prefix| and
/// cycles afterwards. These sequences stand in for nets: over a finite
/// space, every convergence phenomenon of nets is witnessed by one of them,
/// and their tail behavior is decidable.
class ep_sequence {
public:
    ep_sequence(universe u, std::vector<int> prefix, std::vector<int> cycle);

    universe space() const noexcept { return u_; }
    const std::vector<int>& prefix() const noexcept { return prefix_; }
    const std::vector<int>& cycle() const noexcept { return cycle_; }

    int term(std::size_t k) const {
        if (k < prefix_.size()) return prefix_[k];
        return cycle_[(k - prefix_.size()) % cycle_.size()];
    }

    /// {term(k) : k > after}; tails stabilize once after passes the prefix.
    point_set tail(std::size_t after) const;

    friend bool operator==(const ep_sequence&, const ep_sequence&) = default;

private:
    universe u_;
    std::vector<int> prefix_;
    std::vector<int> cycle_;
};

/// The points visited infinitely often: exactly the points of the cycle, and
/// the intersection of all tails.
point_set inf_set(const ep_sequence& s);

/// True iff the sequence is eventually inside every open set containing x.
bool converges_to(const topology& t, const ep_sequence& s, int x);

/// Ultrafilter limit: for the principal point p, true iff every tail
/// intersected with every neighborhood of x is a member of p. Evaluated
/// literally over the stabilizing tails and the opens containing x.
bool p_lim(const topology& t, const ep_sequence& s, const beta_point& p, int x);

/// Subnet reading used by sp_lim. Subsequences of an eventually periodic
/// sequence realize exactly the nonempty subsets of its inf-set as their own
/// inf-sets. strict quantifies p_lim over all of them with p held fixed;
/// transported only quantifies over subsequences whose tails still carry the
/// point of p (p is re-anchored along the re-indexing), which for principal
/// points reduces to p_lim on the full sequence.
enum class subnet_mode { strict, transported };

bool sp_lim(const topology& t, const ep_sequence& s, const beta_point& p, int x,
            subnet_mode mode = subnet_mode::strict);

/// The inf-set of a defeating subsequence, when sp_lim fails.
std::optional<point_set> sp_lim_defeater(const topology& t, const ep_sequence& s,
                                         const beta_point& p, int x,
                                         subnet_mode mode = subnet_mode::strict);

/// Points whose every neighborhood meets every tail.
point_set cluster_points(const topology& t, const ep_sequence& s);

struct limit_report {
    point_set limits;
    point_set inf_set;
    point_set cluster_points;
};

limit_report limits_of(const topology& t, const ep_sequence& s);

struct lemma313_result {
    bool converges;        // (a)
    bool tails_in_star;    // (b) inf-set contained in star(x)
    bool plim_all;         // (c) p_lim holds for every principal p in the inf-set
    bool a_iff_b() const { return converges == tails_in_star; }
    bool ab_implies_c() const { return !(converges && tails_in_star) || plim_all; }
};

lemma313_result lemma_313_check(const topology& t, const ep_sequence& s, int x);

struct lemma316_result {
    bool converges;  // (a)
    bool splim_all;  // (b) sp_lim holds for every principal p in the inf-set
    /// Defeating pair when (a) holds but (b) fails: the principal point and
    /// the inf-set of the subsequence that defeats it.
    std::optional<std::pair<int, point_set>> defeater;
};

lemma316_result lemma_316_check(const topology& t, const ep_sequence& s, int x,
                                subnet_mode mode = subnet_mode::strict);

} // namespace startopo
