#pragma once

#include <cstdint>

#include "valx/errors.hpp"
#include "valx/rational.hpp"

namespace valx {

/// Element of the prime field F_p, p a small odd-or-even prime.
struct Fp {
    long v = 0; // canonical representative in [0, p)
    long p = 2;

    friend bool operator==(const Fp&, const Fp&) = default;
};

inline Fp fp_make(long v, long p) {
    long r = v % p;
    if (r < 0) r += p;
    return Fp{r, p};
}

inline Fp fp_from_int(const Int& n, long p) {
    Int r = n % p;
    long v = static_cast<long>(r.get_si());
    if (v < 0) v += p;
    return Fp{v, p};
}

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_one(const Fp& a) { return a.v == 1; }

inline Fp add(const Fp& a, const Fp& b) { return fp_make(a.v + b.v, a.p); }
inline Fp sub(const Fp& a, const Fp& b) { return fp_make(a.v - b.v, a.p); }
inline Fp neg(const Fp& a) { return fp_make(-a.v, a.p); }

inline Fp mul(const Fp& a, const Fp& b) {
    return fp_make(static_cast<long>((static_cast<std::int64_t>(a.v) * b.v) % a.p), a.p);
}

inline Fp inv(const Fp& a) {
    if (a.v == 0) throw_domain("DivisionByZero", "inverse of 0 in F_p");
    // extended Euclid
    long t = 0, new_t = 1, r = a.p, new_r = a.v;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return fp_make(t, a.p);
}

inline Fp fp_zero(long p) { return Fp{0, p}; }
inline Fp fp_one(long p) { return Fp{1, p}; }

// Rat counterparts so sparse-polynomial templates work over both coefficient fields.
inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline Rat add(const Rat& a, const Rat& b) { return a + b; }
inline Rat sub(const Rat& a, const Rat& b) { return a - b; }
inline Rat neg(const Rat& a) { return -a; }
inline Rat mul(const Rat& a, const Rat& b) { return a * b; }
inline Rat inv(const Rat& a) {
    if (a == 0) throw_domain("DivisionByZero", "inverse of 0 in Q");
    return 1 / a;
}

} // namespace valx
