#pragma once

#include <cstdint>
#include <string_view>

namespace startopo {

/// Counter-based generator: a splitmix64 step over a key mixed from the
/// seed, a label, and an instance index. Instances are independent of
/// execution order, so sampled scans are reproducible under any scheduling.
struct counter_rng {
    std::uint64_t state;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    counter_rng(std::uint64_t seed, std::string_view label, std::uint64_t index) {
        std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        state = mix(h ^ (index * 0xd1b54a32d192ed03ull));
    }

    std::uint64_t next() {
        state = mix(state);
        return state;
    }

    /// Uniform draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace startopo
