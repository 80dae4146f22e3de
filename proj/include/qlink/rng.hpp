#pragma once

#include <cmath>
#include <cstdint>

namespace qlink {

// Deterministic RNG used throughout the simulator. std:: distributions are
// implementation-defined, so sampling is done by hand to keep generated
// streams bit-identical across compilers and standard libraries.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless per-index hash, used for pulse-train choices that must be
// addressable by pulse index without materializing the full train.
inline std::uint64_t hash_index(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    // xoshiro256++
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

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1], safe as a log() argument.
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint32_t uniform_int(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller; one spare value cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    /// Geometric number of Bernoulli(p) trials up to and including the first
    /// success (>= 1). Used to skip through sparse pulse trains.
    std::uint64_t geometric(double p) {
        if (p >= 1.0) return 1;
        const double g = std::floor(std::log(uniform_pos()) / std::log1p(-p));
        return static_cast<std::uint64_t>(g) + 1;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Deterministic seed-splitting: every consumer of randomness derives its own
/// child seed from (scenario seed, stream id), so adding a consumer never
/// perturbs the draws of existing ones.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t s = seed ^ (0x8e2f0b1a6c5d3e47ULL + stream_id * 0x9e3779b97f4a7c15ULL);
    splitmix64(s);
    return splitmix64(s);
}

}  // namespace qlink
