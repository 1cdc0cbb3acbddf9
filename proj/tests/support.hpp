#pragma once

#include <random>
#include <vector>

#include "valx/poly.hpp"
#include "valx/valued_field.hpp"

namespace valx::testing {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

inline Rat rand_rat(Rng& rng, long bound = 40) {
    long num = rand_long(rng, -bound, bound);
    long den = rand_long(rng, 1, bound);
    return make_rat(Int(num), Int(den));
}

inline SPoly<Fp> rand_tpoly_fp(Rng& rng, long p, long maxdeg) {
    SPoly<Fp> f;
    long d = rand_long(rng, 0, maxdeg);
    for (long e = 0; e <= d; ++e) sp_add_term(f, Int(e), fp_make(rand_long(rng, 0, p - 1), p));
    return f;
}

inline SPoly<Rat> rand_tpoly_q(Rng& rng, long maxdeg) {
    SPoly<Rat> f;
    long d = rand_long(rng, 0, maxdeg);
    for (long e = 0; e <= d; ++e) sp_add_term(f, Int(e), Rat(rand_long(rng, -9, 9)));
    return f;
}

inline FieldElement rand_element(const ValuedField& F, Rng& rng) {
    switch (F.kind) {
    case FieldKind::PAdicRationals:
        return rand_rat(rng);
    case FieldKind::FpRationalFunctions: {
        SPoly<Fp> num = rand_tpoly_fp(rng, F.p, 3);
        SPoly<Fp> den;
        while (den.is_zero()) den = rand_tpoly_fp(rng, F.p, 2);
        return sf_normalize(num, den, fp_one(F.p));
    }
    case FieldKind::QRationalFunctions: {
        SPoly<Rat> num = rand_tpoly_q(rng, 3);
        SPoly<Rat> den;
        while (den.is_zero()) den = rand_tpoly_q(rng, 2);
        return sf_normalize(num, den, Rat(1));
    }
    }
    return f_zero(F);
}

inline FieldElement rand_nonzero(const ValuedField& F, Rng& rng) {
    FieldElement a = rand_element(F, rng);
    while (f_is_zero(a)) a = rand_element(F, rng);
    return a;
}

inline Poly rand_poly(const ValuedField& F, Rng& rng, long maxdeg) {
    std::vector<FieldElement> cs;
    long d = rand_long(rng, 0, maxdeg);
    for (long i = 0; i <= d; ++i)
        cs.push_back(rand_long(rng, 0, 4) == 0 ? f_zero(F) : rand_element(F, rng));
    return p_make(F, std::move(cs));
}

inline std::vector<ValuedField> all_fields() {
    return {ValuedField{FieldKind::PAdicRationals, 2},
            ValuedField{FieldKind::FpRationalFunctions, 3},
            ValuedField{FieldKind::QRationalFunctions, 0}};
}

} // namespace valx::testing
