#ifndef GPACK_RNG_HPP
#define GPACK_RNG_HPP

#include <cstdint>
#include <vector>

namespace gpack {

// SplitMix64 (Steele/Lea/Flood finalizer constants). Chosen over
// std::mt19937_64 so that seeded output is byte-identical across
// platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    // bounds used here (< 2^20) and keeps the stream reproducible.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// seeded Fisher-Yates shuffle of 0..n-1
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = int(rng.next_below(std::uint64_t(i) + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace gpack

#endif
