#pragma once

#include <string>
#include <vector>

#include "valx/valued_field.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Dense polynomials and rational functions over a base field, with
// Hasse-Schmidt derivatives and Taylor expansion. Degrees stay desk-scale.
// ---------------------------------------------------------------------------

/// Coefficients c_0..c_n with trailing zeros trimmed; zero polynomial is {}.
struct Poly {
    std::vector<FieldElement> c;

    long deg() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
};

Poly p_zero();
Poly p_make(const ValuedField& F, std::vector<FieldElement> coeffs); // trims
Poly p_const(const ValuedField& F, const FieldElement& a);
Poly p_x(const ValuedField& F); // the monomial X

Poly add(const ValuedField& F, const Poly& a, const Poly& b);
Poly sub(const ValuedField& F, const Poly& a, const Poly& b);
Poly mul(const ValuedField& F, const Poly& a, const Poly& b);
Poly neg(const ValuedField& F, const Poly& a);
Poly p_scale(const ValuedField& F, const Poly& a, const FieldElement& s);
bool p_eq(const Poly& a, const Poly& b);

FieldElement p_eval(const ValuedField& F, const Poly& f, const FieldElement& a);

/// i-th Hasse-Schmidt derivative: coefficient binom(j, i) * c_j at X^(j-i).
/// Binomials are computed over Z and then mapped into the field.
Poly hasse_derivative(const ValuedField& F, const Poly& f, long i);

/// (d_0 f(c), ..., d_n f(c)); reconstructing sum d_i f(c) (X-c)^i gives f back.
std::vector<FieldElement> taylor_coefficients(const ValuedField& F, const Poly& f,
                                              const FieldElement& c);

/// f(X + b).
Poly compose_shift(const ValuedField& F, const Poly& f, const FieldElement& b);

/// Quotient with remainder over the (field) coefficients.
Poly p_divmod(const ValuedField& F, const Poly& a, const Poly& b, Poly& rem);
Poly p_gcd(const ValuedField& F, const Poly& a, const Poly& b); // monic
Poly p_monic(const ValuedField& F, const Poly& a);

/// Rational function num/den, denominator monic, gcd(num, den) = 1.
struct RatFun {
    Poly num;
    Poly den;
};

RatFun rf_make(const ValuedField& F, const Poly& num, const Poly& den);
RatFun rf_from_poly(const ValuedField& F, const Poly& num);
bool rf_eq(const RatFun& a, const RatFun& b);

std::string poly_to_string(const ValuedField& F, const Poly& f);
std::string ratfun_to_string(const ValuedField& F, const RatFun& r);

} // namespace valx
