#ifndef TAILGAUGE_RNG_HPP
#define TAILGAUGE_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace tailgauge {

namespace detail {

// splitmix64 finalizer (Steele, Lea & Flood 2014); also used as the
// published integer mixer for substream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

// Deterministic 64-bit generator: xoshiro256++ seeded through splitmix64.
// Identical seed + identical call sequence gives an identical stream.
// Substreams derive from the logical seed alone, not from how much of the
// parent stream has been consumed:
//   substream(i) = RngState(mix64(seed + (i + 1) * GOLDEN_GAMMA))
class RngState {
public:
    explicit RngState(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64_next(sm);
        // xoshiro forbids the all-zero state; unreachable from splitmix64
        // seeding in practice, guarded anyway.
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t seed() const { return seed_; }

    RngState substream(std::uint64_t index) const {
        constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
        return RngState(detail::mix64(seed_ + golden * (index + 1)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1): bin midpoints of a 53-bit grid,
    // so log() and negative powers are always finite.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Box-Muller; consumes exactly two uniforms per draw.
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential() { return -std::log(uniform01()); }

    std::size_t uniform_index(std::size_t n) {
        // Modulo bias is < 2^-53 for the sizes used here (n < 2^31).
        return static_cast<std::size_t>(next_u64() % n);
    }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

} // namespace tailgauge

#endif
