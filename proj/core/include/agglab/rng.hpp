#pragma once

#include <array>
#include <cstdint>

namespace agglab {

// SplitMix64: seed expander used to derive stream states.  Never used as the
// main generator; its job is to decorrelate nearby seeds / stream indices.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ with counter-based stream derivation: the generator for stream
// s under master seed is fully determined by (seed, s), so any partition of
// copies across workers reproduces identical draws.  Streams are derived by
// running SplitMix64 from (mixed seed) + s * golden-ratio increment, which
// keeps distinct stream indices far apart in SplitMix64's sequence.
class Xoshiro256pp {
public:
    static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 pre(seed);
        const std::uint64_t base = pre.next();
        SplitMix64 sm(base + stream * 0x9E3779B97F4A7C15ull);
        Xoshiro256pp g;
        g.s_ = {sm.next(), sm.next(), sm.next(), sm.next()};
        if ((g.s_[0] | g.s_[1] | g.s_[2] | g.s_[3]) == 0ull) {
            g.s_[0] = 0x9E3779B97F4A7C15ull;  // all-zero state is absorbing
        }
        return g;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform draw strictly inside (0,1): 53 high bits centered on the grid
    // (k + 1/2) * 2^-53, so neither endpoint is attainable and inverse
    // transforms never divide by zero or take log of zero.
    double u01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace agglab
