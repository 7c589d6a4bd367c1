#ifndef APPELL_RNG_HPP
#define APPELL_RNG_HPP

#include <cstdint>
#include <string_view>

#include "appell/types.hpp"

namespace appell {

/// Counter-based deterministic sampler (SplitMix64 on a per-stream key).
/// Identical (seed, stream name, draw index) gives identical doubles on every
/// platform; suites derive one stream per check so adding draws to one check
/// does not shift any other.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::string_view stream) : key_(mix_key(seed, stream)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + 0x9E3779B97F4A7C15ull * ++counter_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    /// Modulus uniform in [rmin, rmax], argument uniform in [0, 2 pi).
    cplx annulus(double rmin, double rmax) {
        const double r = uniform(rmin, rmax);
        const double phi = uniform(0.0, two_pi);
        return cplx(r * std::cos(phi), r * std::sin(phi));
    }

    /// Axis-aligned box in the complex plane.
    cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        const double im = uniform(im_lo, im_hi);
        return cplx(re, im);
    }

private:
    static std::uint64_t mix_key(std::uint64_t seed, std::string_view stream) {
        // FNV-1a over the stream name, folded into the seed.
        std::uint64_t h = 0xCBF29CE484222325ull;
        for (char c : stream) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001B3ull;
        }
        return seed ^ h;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace appell

#endif
