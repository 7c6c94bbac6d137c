#pragma once
// Arbitrary-precision rationals. GMP's canonical mpq_class already maintains
// the reduced num/den invariant (gcd 1, positive denominator), which is
// exactly the representation the rest of the library assumes.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "taugen/errors.hpp"

namespace taugen {

using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// height = max(|numerator|, denominator); height(0) counts as 1 so that every
// coefficient lands in a nonempty height cell.
inline Integer rational_height(const Rational& r) {
    Integer n = abs(r.get_num());
    const Integer& d = r.get_den();
    Integer h = n > d ? n : d;
    return h > 1 ? h : Integer(1);
}

inline std::string rational_str(const Rational& r) {
    return r.get_str(); // "p" or "p/q", canonical
}

// Deterministic, platform-independent generator (splitmix64). std::mt19937
// would do for bit output but the distribution helpers below keep us off
// libstdc++-specific distribution code, which is not portable bit-for-bit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InternalError("Rng::below(0)");
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    // uniform integer in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform in {-h..h} \ {0}
    long nonzero(long h) {
        long v = range(1, 2 * h);
        return v <= h ? v : h - v; // 1..h, then -1..-h
    }

  private:
    std::uint64_t state_;
};

// FNV-1a, used where a deterministic string hash is needed (std::hash is not
// specified across implementations).
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace taugen
