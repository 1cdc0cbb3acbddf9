#pragma once

#include <gmpxx.h>

#include <string>

#include "valx/errors.hpp"

namespace valx {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw_domain("DivisionByZero", "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Largest e with p^e | n, for n != 0.
inline long int_valuation(const Int& n, const Int& p) {
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string int_to_string(const Int& n) { return n.get_str(); }

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw_domain("BudgetExhausted", "integer exceeds machine range: " + n.get_str());
    return n.get_si();
}

} // namespace valx
