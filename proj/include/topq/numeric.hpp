#ifndef TOPQ_NUMERIC_HPP
#define TOPQ_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace topq {

// Decimal rendering used for all serialized numbers: 17 significant digits
// round-trip any finite double exactly through strtod.
inline std::string to_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Survival function 1 - Phi(x), computed without cancellation in the upper tail.
inline double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Splittable 64-bit generator (splitmix64). Output sequence depends only on
// the seed, so sampling is reproducible across runs of the same build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (cosine branch only).
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace topq

#endif
