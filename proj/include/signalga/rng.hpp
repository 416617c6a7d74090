#pragma once

#include <cstdint>
#include <random>

namespace signalga {

/// Seeded generator with platform-independent integer and Bernoulli draws.
///
/// std::uniform_int_distribution is implementation-defined, which would make
/// logs differ between standard libraries; these draws use only the raw
/// 64-bit output of std::mt19937_64, whose sequence is fixed by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi] (inclusive). Requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// True with probability p. Always consumes exactly one engine draw.
    bool bernoulli(double p);

    /// Uniform index in [0, n). Requires n > 0.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace signalga
