#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

// SplitMix64. The exact sequence is part of the output contract of every
// seeded operation (random graphs, subset sampling), so that independent
// reimplementations reproduce artifacts byte for byte. Constants are the
// standard ones from Steele, Lea and Flood's SplittableRandom.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // next() mod bound; bound > 0. The (negligible) modulo bias is accepted
    // in exchange for a trivially portable definition.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // True with probability p exactly: next()/2^64 < p, decided in integers.
    bool bernoulli(const Rational& p) {
        if (p.num <= 0) return false;
        if (p.num >= p.den) return true;
        unsigned __int128 lhs = (unsigned __int128)next() * (unsigned __int128)p.den;
        unsigned __int128 rhs = (unsigned __int128)p.num << 64;
        return lhs < rhs;
    }

    // k distinct values from 0..n-1 via partial Fisher-Yates, ascending output.
    std::vector<int> sample(int n, int k);
};

}  // namespace ramsey
