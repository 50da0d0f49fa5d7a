#pragma once

#include <cstdint>

namespace pcbf {

/// Deterministic, platform-independent generator (splitmix64 core).
/// std::uniform_real_distribution is implementation-defined, so seeded
/// experiments map raw bits to doubles explicitly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform on [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// uniform on [-1, 1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    /// uniform integer in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    bool next_bool(double p_true) { return next_unit() < p_true; }

private:
    std::uint64_t state_;
};

/// Stable per-instance sub-seed for parallel experiment streams.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return mix.next_u64();
}

}  // namespace pcbf
