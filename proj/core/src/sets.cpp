#include "startopo/sets.hpp"

#include <algorithm>
#include <sstream>

namespace startopo {

const char* error::code_name() const noexcept {
    switch (code_) {
        case errc::bad_universe: return "BadUniverse";
        case errc::point_out_of_range: return "PointOutOfRange";
        case errc::universe_mismatch: return "UniverseMismatch";
        case errc::empty_core: return "EmptyCore";
        case errc::empty_base: return "EmptyBase";
        case errc::empty_member: return "EmptyMember";
        case errc::not_directed: return "NotDirected";
        case errc::empty_family: return "EmptyFamily";
        case errc::missing_empty_or_full: return "MissingEmptyOrFull";
        case errc::not_closed_under_union: return "NotClosedUnderUnion";
        case errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
        case errc::size_too_large: return "SizeTooLarge";
        case errc::empty_f: return "EmptyF";
        case errc::not_continuous: return "NotContinuous";
        case errc::not_injective: return "NotInjective";
        case errc::has_fixed_point: return "HasFixedPoint";
        case errc::missing_self: return "MissingSelf";
        case errc::invalid_document: return "InvalidDocument";
    }
    return "Unknown";
}

std::string mask_to_string(universe u, mask_t m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int p = 0; p < u.size(); ++p) {
        if ((m >> p) & 1u) {
            if (!first) out << ',';
            out << p;
            first = false;
        }
    }
    out << '}';
    return out.str();
}

std::string point_set::to_string() const { return mask_to_string(u_, bits_); }

set_family::set_family(universe u, std::vector<mask_t> masks) : u_(u), masks_(std::move(masks)) {
    for (mask_t m : masks_) {
        if ((m & ~u.full_mask()) != 0)
            throw error(errc::point_out_of_range,
                        "family member contains points outside the universe");
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

bool set_family::contains(mask_t m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

std::string set_family::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (i) out << ',';
        out << mask_to_string(u_, masks_[i]);
    }
    out << '}';
    return out.str();
}

space_map::space_map(universe domain, universe codomain, std::vector<int> values)
    : dom_(domain), cod_(codomain), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != dom_.size())
        throw error(errc::invalid_document,
                    "map must assign a value to every point of its domain");
    for (int v : values_) require_point(cod_, v);
}

space_map space_map::identity(universe u) {
    std::vector<int> v(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < u.size(); ++i) v[static_cast<std::size_t>(i)] = i;
    return {u, u, std::move(v)};
}

point_set space_map::image(const point_set& a) const {
    require_same(dom_, a.space());
    mask_t out = 0;
    for_each_point(a.bits(), [&](int p) { out |= static_cast<mask_t>(1u << values_[static_cast<std::size_t>(p)]); });
    return {cod_, out};
}

point_set space_map::preimage(const point_set& b) const {
    require_same(cod_, b.space());
    mask_t out = 0;
    for (int p = 0; p < dom_.size(); ++p)
        if (b.contains(values_[static_cast<std::size_t>(p)])) out |= static_cast<mask_t>(1u << p);
    return {dom_, out};
}

bool space_map::is_injective() const {
    mask_t seen = 0;
    for (int v : values_) {
        mask_t bit = static_cast<mask_t>(1u << v);
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

std::optional<int> space_map::fixed_point() const {
    if (!is_endo()) return std::nullopt;
    for (int p = 0; p < dom_.size(); ++p)
        if (values_[static_cast<std::size_t>(p)] == p) return p;
    return std::nullopt;
}

} // namespace startopo
