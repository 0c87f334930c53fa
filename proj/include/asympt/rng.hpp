#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include "asympt/rational.hpp"

namespace asympt {

// SplitMix64. Hand-rolled so that streams are bit-identical on every
// platform and toolchain; std distributions make no such promise.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::complex<double> complex_in_annulus(double rmin, double rmax) {
        double r = uniform(rmin, rmax);
        double theta = uniform(0.0, 6.283185307179586);
        return std::polar(r, theta);
    }

    // Nonzero rational with |numerator|, denominator bounded by max_mag.
    mpq_class rational(long max_mag) {
        long num = uniform_int(-max_mag, max_mag);
        long den = uniform_int(1, max_mag);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    GaussianRational gaussian_rational(long max_mag) {
        return GaussianRational(rational(max_mag), rational(max_mag));
    }

    GaussianRational nonzero_gaussian_rational(long max_mag) {
        for (;;) {
            GaussianRational g = gaussian_rational(max_mag);
            if (!g.is_zero()) return g;
        }
    }

    // Derive an independent deterministic substream.
    Rng fork(std::uint64_t tag) const {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

// FNV-1a; stable across platforms, used to derive substream tags from labels.
inline std::uint64_t stable_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline constexpr std::uint64_t kDefaultSeed = 1729;

} // namespace asympt
