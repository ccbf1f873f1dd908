#pragma once

#include <cstdint>
#include <random>

namespace funcspan {

/// Deterministic uniform generator on top of std::mt19937_64.
///
/// std::uniform_real_distribution is implementation defined, so draws go
/// through an explicit 53-bit mantissa mapping; the produced stream is
/// bit-identical across standard libraries for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent substream: mixes (seed, stream) through std::seed_seq.
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer on [0, n).
    std::uint64_t below(std::uint64_t n) {
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace funcspan
