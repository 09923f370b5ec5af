#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace doe {

/// Seed plus stream id. Equal (seed, stream) pairs reproduce identical draw
/// sequences on every platform.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// mt19937_64 wrapper with portable bounded draws. The std distribution
/// classes are implementation-defined, so uniform ints and reals are derived
/// from raw engine output here.
class Rng {
public:
    explicit Rng(RngSeed s) : seed_(s) {
        std::seed_seq seq{static_cast<std::uint32_t>(s.seed),
                          static_cast<std::uint32_t>(s.seed >> 32),
                          static_cast<std::uint32_t>(s.stream),
                          static_cast<std::uint32_t>(s.stream >> 32)};
        engine_.seed(seq);
    }
    Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngSeed{seed, stream}) {}

    RngSeed seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform real in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Fisher-Yates shuffle using index() so the permutation sequence is
    /// platform-independent.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(index(i))]);
        }
    }

private:
    RngSeed seed_;
    std::mt19937_64 engine_;
};

}  // namespace doe
