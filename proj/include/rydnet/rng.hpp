#pragma once

#include <cstdint>

namespace rydnet {

/// SplitMix64 (Steele, Lea, Flood 2014). Small, fast, and fully portable:
/// the same seed gives the same stream on every platform and thread layout,
/// which the Monte Carlo reproducibility contracts rely on.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Deterministic sub-stream seed for (seed, index). Work items (Monte Carlo
/// trials, grid points) each get their own stream so results do not depend
/// on scheduling or thread count.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632BE59BD9B4E019ull + index * 0x9E3779B97F4A7C15ull));
    return mix.next();
}

} // namespace rydnet
