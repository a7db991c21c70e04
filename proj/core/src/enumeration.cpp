#include "startopo/enumeration.hpp"

namespace startopo {

namespace {

void check_size(int n) {
    if (n < 1 || n > max_enumeration_points)
        throw error(errc::size_too_large,
                    "exhaustive enumeration supports 1 <= n <= " +
                        std::to_string(max_enumeration_points) + ", got " + std::to_string(n));
}

// Off-diagonal pair (x, y), x != y, in row-major order; bit index of the
// pattern word. stars[x] bit y is driven by pattern bit for (x, y).
void pattern_to_stars(int n, std::uint32_t pattern, std::vector<mask_t>& stars) {
    int bit = 0;
    for (int x = 0; x < n; ++x) {
        mask_t m = static_cast<mask_t>(1u << x);
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if ((pattern >> bit) & 1u) m |= static_cast<mask_t>(1u << y);
            ++bit;
        }
        stars[static_cast<std::size_t>(x)] = m;
    }
}

bool transitive(int n, const std::vector<mask_t>& stars) {
    for (int x = 0; x < n; ++x) {
        const mask_t sx = stars[static_cast<std::size_t>(x)];
        mask_t rest = sx;
        while (rest != 0) {
            const int y = std::countr_zero(rest);
            rest &= rest - 1;
            if ((stars[static_cast<std::size_t>(y)] & ~sx) != 0) return false;
        }
    }
    return true;
}

} // namespace

star_system star_pattern_system(universe u, std::uint32_t off_diagonal_pattern) {
    std::vector<mask_t> stars(static_cast<std::size_t>(u.size()));
    pattern_to_stars(u.size(), off_diagonal_pattern, stars);
    return {u, std::move(stars)};
}

void for_each_preorder(int n, const std::function<void(const star_system&)>& visit) {
    check_size(n);
    const universe u(n);
    const int off_bits = n * n - n;
    std::vector<mask_t> stars(static_cast<std::size_t>(n));
    for (std::uint64_t pattern = 0; pattern < (1ull << off_bits); ++pattern) {
        pattern_to_stars(n, static_cast<std::uint32_t>(pattern), stars);
        if (!transitive(n, stars)) continue;
        visit(star_system(u, stars));
    }
}

void for_each_topology(int n, const std::function<void(const topology&)>& visit) {
    for_each_preorder(n, [&](const star_system& sys) { visit(alexandrov_from_stars(sys)); });
}

std::uint64_t count_preorders(int n) {
    std::uint64_t c = 0;
    for_each_preorder(n, [&](const star_system&) { ++c; });
    return c;
}

std::uint64_t count_topologies(int n) {
    std::uint64_t c = 0;
    for_each_topology(n, [&](const topology&) { ++c; });
    return c;
}

std::vector<topology> all_topologies(int n) {
    std::vector<topology> out;
    for_each_topology(n, [&](const topology& t) { out.push_back(t); });
    return out;
}

} // namespace startopo
