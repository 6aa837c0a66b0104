#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace irsim {

/// splitmix64 finalizer: bijective 64-bit mixing.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based substream derivation: the seed of child stream `index` under
/// `key`. Work partitioned by index gives identical draws no matter how the
/// indices are distributed across workers. Derivations compose:
/// substream_seed(substream_seed(master, grid_point), trial).
constexpr std::uint64_t substream_seed(std::uint64_t key, std::uint64_t index) {
    return mix64(key + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// xoshiro256++ with Box-Muller normal generation. Streams are cheap to
/// construct; one per trial keeps results independent of scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            w = mix64(x);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log argument.
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
        const double a = 2.0 * M_PI * next_unit();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance,
    /// drawn as (a + jb)/sqrt(2) * sqrt(variance).
    std::complex<double> next_cgauss(double variance) {
        const double s = std::sqrt(0.5 * variance);
        const double re = next_normal();
        const double im = next_normal();
        return {s * re, s * im};
    }

    /// Uniform phase in [-pi, pi].
    double next_phase() { return (2.0 * next_unit() - 1.0) * M_PI; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace irsim
