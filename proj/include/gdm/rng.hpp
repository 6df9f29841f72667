#pragma once

#include <cstdint>
#include <limits>

namespace gdm {

/// Finalizer of the splitmix64 generator: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

/// Stateless counter-based bits: a pure function of (seed, counter). Lets
/// sample i be generated independently of samples 0..i-1, so parallel loops
/// produce the same stream regardless of scheduling.
constexpr std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix64(seed + (counter + 1) * golden_gamma);
}

/// Derives an independent stream key from a seed (for giving distinct
/// consumers of the same logical seed decorrelated sequences).
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed ^ mix64(stream + 0x517cc1b727220a95ULL));
}

/// Sequential splitmix64 engine. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        state_ += golden_gamma;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Maps 64 random bits to a double in [0, 1). Bit-identical on every
/// platform, unlike std::uniform_real_distribution.
constexpr double unit_double(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform draw in [lo, hi); returns lo when the interval is degenerate.
template <typename Rng>
double uniform_in(Rng& rng, double lo, double hi) {
    return lo + unit_double(rng()) * (hi - lo);
}

} // namespace gdm
