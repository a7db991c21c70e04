#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "startopo/topology.hpp"

namespace startopo {

/// Largest point count accepted by the exhaustive enumerators. The preorder
/// scan walks 2^(n^2-n) candidate relations, which is the practical wall.
inline constexpr int max_enumeration_points = 5;

/// Visits every preorder on n labeled points exactly once, represented as a
/// star system (y in stars(x) meaning y lies in every neighborhood of x).
/// Candidates are scanned as off-diagonal bit patterns in ascending encoded
/// value, with the diagonal forced and non-transitive patterns skipped, so
/// the stream order is deterministic and restartable.
void for_each_preorder(int n, const std::function<void(const star_system&)>& visit);

/// Decodes an off-diagonal bit pattern (row-major pair order, diagonal
/// forced) into a star system; the encoding behind both enumerators.
star_system star_pattern_system(universe u, std::uint32_t off_diagonal_pattern);

/// Visits every topology on n labeled points exactly once, in the stream
/// order of the generating preorders (finite topologies and preorders
/// correspond bijectively).
void for_each_topology(int n, const std::function<void(const topology&)>& visit);

std::uint64_t count_preorders(int n);
std::uint64_t count_topologies(int n);

std::vector<topology> all_topologies(int n);

} // namespace startopo
