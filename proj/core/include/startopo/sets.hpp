#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace startopo {

/// Error categories raised by constructors and operations. The name of each
/// category (see error::code_name) is stable and appears in CLI diagnostics.
enum class errc {
    bad_universe,
    point_out_of_range,
    universe_mismatch,
    empty_core,
    empty_base,
    empty_member,
    not_directed,
    empty_family,
    missing_empty_or_full,
    not_closed_under_union,
    not_closed_under_intersection,
    size_too_large,
    empty_f,
    not_continuous,
    not_injective,
    has_fixed_point,
    missing_self,
    invalid_document,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

    /// Stable identifier, e.g. "NotDirected" or "MissingEmptyOrFull".
    const char* code_name() const noexcept;

private:
    errc code_;
};

/// Subsets of a universe are encoded as bit masks, point i <-> bit i.
using mask_t = std::uint32_t;

/// A finite carrier set {0, ..., n-1}. Capped at 16 points so that power-set
/// scans stay enumerable.
class universe {
public:
    static constexpr int max_points = 16;

    explicit universe(int n) : n_(n) {
        if (n < 1 || n > max_points)
            throw error(errc::bad_universe,
                        "universe size must be between 1 and " +
                            std::to_string(max_points) + ", got " + std::to_string(n));
    }

    int size() const noexcept { return n_; }
    mask_t full_mask() const noexcept { return static_cast<mask_t>((1u << n_) - 1u); }
    bool in_range(int p) const noexcept { return p >= 0 && p < n_; }

    friend bool operator==(universe, universe) = default;

private:
    int n_;
};

inline void require_point(universe u, int p) {
    if (!u.in_range(p))
        throw error(errc::point_out_of_range,
                    "point " + std::to_string(p) + " outside universe of size " +
                        std::to_string(u.size()));
}

inline void require_same(universe a, universe b) {
    if (!(a == b))
        throw error(errc::universe_mismatch, "operands live over different universes");
}

template <typename Fn>
inline void for_each_point(mask_t m, Fn&& fn) {
    while (m != 0) {
        fn(std::countr_zero(m));
        m &= m - 1;
    }
}

/// A subset of a universe, value type.
class point_set {
public:
    point_set(universe u, mask_t bits) : u_(u), bits_(bits) {
        if ((bits & ~u.full_mask()) != 0)
            throw error(errc::point_out_of_range, "set contains points outside the universe");
    }

    static point_set empty(universe u) { return {u, 0}; }
    static point_set full(universe u) { return {u, u.full_mask()}; }
    static point_set single(universe u, int p) {
        require_point(u, p);
        return {u, static_cast<mask_t>(1u << p)};
    }
    static point_set of(universe u, std::initializer_list<int> pts) {
        mask_t m = 0;
        for (int p : pts) {
            require_point(u, p);
            m |= static_cast<mask_t>(1u << p);
        }
        return {u, m};
    }

    universe space() const noexcept { return u_; }
    mask_t bits() const noexcept { return bits_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool is_empty() const noexcept { return bits_ == 0; }
    bool contains(int p) const noexcept { return u_.in_range(p) && ((bits_ >> p) & 1u); }
    bool subset_of(const point_set& o) const {
        require_same(u_, o.u_);
        return (bits_ & ~o.bits_) == 0;
    }
    bool intersects(const point_set& o) const {
        require_same(u_, o.u_);
        return (bits_ & o.bits_) != 0;
    }

    point_set complement() const { return {u_, static_cast<mask_t>(u_.full_mask() & ~bits_)}; }

    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each_point(bits_, [&](int p) { out.push_back(p); });
        return out;
    }

    std::string to_string() const;

    friend bool operator==(const point_set&, const point_set&) = default;

private:
    universe u_;
    mask_t bits_;
};

inline point_set operator|(const point_set& a, const point_set& b) {
    require_same(a.space(), b.space());
    return {a.space(), a.bits() | b.bits()};
}
inline point_set operator&(const point_set& a, const point_set& b) {
    require_same(a.space(), b.space());
    return {a.space(), a.bits() & b.bits()};
}
inline point_set operator-(const point_set& a, const point_set& b) {
    require_same(a.space(), b.space());
    return {a.space(), static_cast<mask_t>(a.bits() & ~b.bits())};
}

/// A duplicate-free family of subsets over one universe, kept sorted by
/// encoded mask value. That ordering is the canonical one used everywhere
/// (JSON output, golden tests, witnesses).
class set_family {
public:
    set_family(universe u, std::vector<mask_t> masks);

    static set_family of(universe u,
                         std::initializer_list<std::initializer_list<int>> sets) {
        std::vector<mask_t> ms;
        for (const auto& s : sets) {
            mask_t m = 0;
            for (int p : s) {
                require_point(u, p);
                m |= static_cast<mask_t>(1u << p);
            }
            ms.push_back(m);
        }
        return {u, std::move(ms)};
    }

    universe space() const noexcept { return u_; }
    std::size_t size() const noexcept { return masks_.size(); }
    bool is_empty() const noexcept { return masks_.empty(); }
    const std::vector<mask_t>& masks() const noexcept { return masks_; }
    bool contains(mask_t m) const;
    bool contains(const point_set& s) const {
        require_same(u_, s.space());
        return contains(s.bits());
    }
    point_set at(std::size_t i) const { return {u_, masks_.at(i)}; }

    std::string to_string() const;

    friend bool operator==(const set_family&, const set_family&) = default;

private:
    universe u_;
    std::vector<mask_t> masks_;
};

/// A total function between two universes.
class space_map {
public:
    space_map(universe domain, universe codomain, std::vector<int> values);

    static space_map identity(universe u);

    universe domain() const noexcept { return dom_; }
    universe codomain() const noexcept { return cod_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator()(int p) const { return values_.at(static_cast<std::size_t>(p)); }
    bool is_endo() const noexcept { return dom_ == cod_; }

    point_set image(const point_set& a) const;
    point_set preimage(const point_set& b) const;

    bool is_injective() const;
    /// Smallest fixed point of an endo map, if any.
    std::optional<int> fixed_point() const;

    friend bool operator==(const space_map&, const space_map&) = default;

private:
    universe dom_;
    universe cod_;
    std::vector<int> values_;
};

std::string mask_to_string(universe u, mask_t m);

} // namespace startopo
