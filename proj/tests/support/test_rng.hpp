#pragma once

// Deterministic cross-platform randomness for property tests; std::mt19937
// distributions are implementation-defined, frozen oracle values are not.

#include "hamel/qspace.hpp"

#include <cstdint>
#include <vector>

namespace trng {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform-enough integer in [lo, hi]; bias is irrelevant for fuzzing.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Sparse vector over symbols [0, max_symbols) with small rational entries.
inline hamel::Vec1 random_vec(Rng& rng, int max_symbols, int max_coeff) {
    std::vector<hamel::Vec1::Term> terms;
    const long k = rng.pick(0, 3);
    for (long i = 0; i < k; ++i) {
        long num = rng.pick(-max_coeff, max_coeff);
        long den = rng.pick(1, max_coeff);
        terms.push_back({hamel::Symbol{static_cast<std::uint32_t>(rng.pick(0, max_symbols - 1))},
                         hamel::Rat(num, den)});
    }
    return hamel::Vec1::from_terms(std::move(terms));
}

inline hamel::PairVec random_pair(Rng& rng, int max_symbols, int max_coeff) {
    return {random_vec(rng, max_symbols, max_coeff), random_vec(rng, max_symbols, max_coeff)};
}

inline std::vector<hamel::PairVec> random_points(Rng& rng, int max_points,
                                                 int max_symbols, int max_coeff) {
    std::vector<hamel::PairVec> pts;
    const long n = rng.pick(0, max_points);
    for (long i = 0; i < n; ++i) pts.push_back(random_pair(rng, max_symbols, max_coeff));
    return pts;
}

}  // namespace trng
