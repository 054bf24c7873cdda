#ifndef STRATQUANT_RNG_HPP
#define STRATQUANT_RNG_HPP

#include <cstdint>

#include "stratquant/rational.hpp"

namespace stratquant {

/// Default seed used by the CLI and the property suites so documented
/// transcripts reproduce byte for byte.
inline constexpr uint64_t kDefaultSeed = 1729;

/// SplitMix64: tiny, deterministic, platform-independent.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0.
    uint64_t below(uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Rational with numerator in [-num_max, num_max] and denominator in
    /// [1, den_max].
    mpq_class rational(long num_max, long den_max) {
        mpq_class q(range(-num_max, num_max), range(1, den_max));
        q.canonicalize();
        return q;
    }

    mpq_class nonzero_rational(long num_max, long den_max) {
        for (;;) {
            mpq_class q = rational(num_max, den_max);
            if (sgn(q) != 0) return q;
        }
    }

    Scalar gaussian_rational(long num_max, long den_max) {
        mpq_class re = rational(num_max, den_max);
        mpq_class im = rational(num_max, den_max);
        return Scalar(re, im);
    }

    Scalar nonzero_gaussian_rational(long num_max, long den_max) {
        for (;;) {
            Scalar s = gaussian_rational(num_max, den_max);
            if (!s.is_zero()) return s;
        }
    }

private:
    uint64_t state_;
};

}  // namespace stratquant

#endif
