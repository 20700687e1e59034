#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mcst {

// splitmix64 finalizer; full 64-bit avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Minimal deterministic 64-bit stream (splitmix64). Used everywhere instead
// of std::mt19937 so that results are identical across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via the multiply-shift method; no rejection loop.
    std::uint64_t bounded(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Derives an independent stream seed from a master seed and a tag sequence.
// Chained mixing: s <- mix64(s ^ mix64(tag)) per tag. This is the documented
// seed derivation for all sub-streams (instance generation, per-sample
// permutation streams, experiment trials).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = mix64(master ^ 0x6d637374ULL);  // "mcst"
    for (std::uint64_t t : tags) s = mix64(s ^ mix64(t));
    return s;
}

// Fisher-Yates shuffle of (1, 2, ..., n).
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int k = n - 1; k > 0; --k) {
        int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(k) + 1));
        std::swap(perm[k], perm[j]);
    }
    return perm;
}

}  // namespace mcst
