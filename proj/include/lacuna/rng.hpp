// Deterministic seeded randomness. splitmix64 keeps every sampled value
// reproducible across platforms and thread counts (std:: distributions are
// implementation-defined, so they are avoided throughout).
#pragma once

#include "lacuna/rational.hpp"

#include <cstdint>

namespace lacuna {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for work item `index` under a run seed.
    static SplitMix64 for_item(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        g.next();
        return g;
    }

    /// Exact dyadic rational uniform in [0, 1).
    Rational unit() {
        return Rational(Integer(next() >> 11), Integer(1) << 53);
    }

    /// Exact dyadic rational uniform in [lo, hi).
    Rational uniform(const Rational& lo, const Rational& hi) {
        return lo + (hi - lo) * unit();
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace lacuna
