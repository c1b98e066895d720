#pragma once

#include <cstdint>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

// splitmix64: identical streams on every platform, unlike the std
// distributions. All seeded test data flows through this.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    // small rational, numerator in [-max_num, max_num], denominator in [1, max_den]
    Rat small_rat(int max_num = 3, int max_den = 2) {
        return Rat(range(-max_num, max_num), range(1, max_den));
    }

    CRat small_crat(int max_num = 3, int max_den = 2, bool allow_imag = true) {
        Rat re = small_rat(max_num, max_den);
        Rat im = allow_imag && coin() ? small_rat(max_num, max_den) : Rat(0);
        return {re, im};
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }
};

}  // namespace rho
