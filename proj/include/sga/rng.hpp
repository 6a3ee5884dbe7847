#pragma once

#include <cstdint>
#include <random>

namespace sga {

// Deterministic random source. Sampling is done by hand so that results do
// not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= bound);
        return lo + static_cast<int>(x % range);
    }

    // Uniform double in [0, 1).
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    // Independent stream derived from the original seed, not from the current
    // generator state, so forks are insensitive to draw order.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t z = seed_ ^ (stream + 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

}  // namespace sga
