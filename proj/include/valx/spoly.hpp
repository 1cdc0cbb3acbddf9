#pragma once

#include <map>
#include <utility>
#include <vector>

#include "valx/errors.hpp"
#include "valx/fp.hpp"
#include "valx/rational.hpp"

namespace valx {

/// Sparse univariate polynomial with arbitrary-precision exponents.
/// Exponents may be huge (gap series reach t^(2^63)), so terms are kept in an
/// ordered map and nothing ever materializes a dense coefficient vector of
/// that size. Coefficient type C is Fp or Rat.
template <class C>
struct SPoly {
    std::map<Int, C> terms; // exponent -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0); }

    const Int& degree() const { return terms.rbegin()->first; } // pre: !is_zero
    const Int& ord() const { return terms.begin()->first; }     // pre: !is_zero

    const C& leading() const { return terms.rbegin()->second; }
    const C& trailing() const { return terms.begin()->second; }

    friend bool operator==(const SPoly&, const SPoly&) = default;
};

template <class C>
SPoly<C> sp_zero() {
    return SPoly<C>{};
}

template <class C>
SPoly<C> sp_const(const C& c) {
    SPoly<C> r;
    if (!is_zero(c)) r.terms.emplace(Int(0), c);
    return r;
}

template <class C>
SPoly<C> sp_term(const Int& e, const C& c) {
    SPoly<C> r;
    if (!is_zero(c)) r.terms.emplace(e, c);
    return r;
}

template <class C>
void sp_add_term(SPoly<C>& p, const Int& e, const C& c) {
    if (is_zero(c)) return;
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        p.terms.emplace(e, c);
    } else {
        it->second = add(it->second, c);
        if (is_zero(it->second)) p.terms.erase(it);
    }
}

template <class C>
SPoly<C> add(const SPoly<C>& a, const SPoly<C>& b) {
    SPoly<C> r = a;
    for (const auto& [e, c] : b.terms) sp_add_term(r, e, c);
    return r;
}

template <class C>
SPoly<C> neg(const SPoly<C>& a) {
    SPoly<C> r = a;
    for (auto& [e, c] : r.terms) c = neg(c);
    return r;
}

template <class C>
SPoly<C> sub(const SPoly<C>& a, const SPoly<C>& b) {
    SPoly<C> r = a;
    for (const auto& [e, c] : b.terms) sp_add_term(r, e, neg(c));
    return r;
}

template <class C>
SPoly<C> mul(const SPoly<C>& a, const SPoly<C>& b) {
    SPoly<C> r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) sp_add_term(r, ea + eb, mul(ca, cb));
    return r;
}

template <class C>
SPoly<C> sp_scale(const SPoly<C>& a, const C& c) {
    SPoly<C> r;
    if (is_zero(c)) return r;
    for (const auto& [e, ac] : a.terms) r.terms.emplace(e, mul(ac, c));
    return r;
}

/// Multiply by the single term c * X^e.
template <class C>
SPoly<C> sp_shift(const SPoly<C>& a, const Int& e, const C& c) {
    SPoly<C> r;
    if (is_zero(c)) return r;
    for (const auto& [ea, ca] : a.terms) r.terms.emplace(ea + e, mul(ca, c));
    return r;
}

template <class C>
SPoly<C> sp_monic(const SPoly<C>& a) {
    if (a.is_zero() || is_one(a.leading())) return a;
    return sp_scale(a, inv(a.leading()));
}

/// Remainder of a single long-division step bundle; assumes deg(a) >= deg(d).
template <class C>
void sp_reduce_leading(SPoly<C>& a, const SPoly<C>& d) {
    const Int e = a.degree() - d.degree();
    const C q = mul(a.leading(), inv(d.leading()));
    for (const auto& [ed, cd] : d.terms) sp_add_term(a, ed + e, neg(mul(q, cd)));
}

/// X^e mod d for a huge exponent, by square-and-multiply on X mod d.
template <class C>
SPoly<C> sp_powmod_x(Int e, const SPoly<C>& d, const C& one) {
    SPoly<C> base = sp_term(Int(1), one);
    while (!base.is_zero() && base.degree() >= d.degree()) sp_reduce_leading(base, d);
    SPoly<C> acc = sp_const(one);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            acc = mul(acc, base);
            while (!acc.is_zero() && acc.degree() >= d.degree()) sp_reduce_leading(acc, d);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
            while (!base.is_zero() && base.degree() >= d.degree()) sp_reduce_leading(base, d);
        }
    }
    return acc;
}

/// a mod d. Uses per-term modular exponentiation when the degree gap is huge,
/// so gap-series numerators reduce in O(#terms * log deg) instead of O(deg).
template <class C>
SPoly<C> sp_rem(const SPoly<C>& a, const SPoly<C>& d) {
    if (d.is_zero()) throw_domain("DivisionByZero", "polynomial division by zero");
    if (a.is_zero() || a.degree() < d.degree()) return a;
    const Int gap = a.degree() - d.degree();
    if (gap > 4096) {
        // build remainder term by term
        const C unit = mul(d.leading(), inv(d.leading()));
        SPoly<C> r;
        for (const auto& [e, c] : a.terms) {
            if (e < d.degree()) {
                sp_add_term(r, e, c);
            } else {
                SPoly<C> m = sp_powmod_x(e, d, unit);
                for (const auto& [em, cm] : m.terms) sp_add_term(r, em, mul(c, cm));
            }
        }
        while (!r.is_zero() && r.degree() >= d.degree()) sp_reduce_leading(r, d);
        return r;
    }
    SPoly<C> r = a;
    while (!r.is_zero() && r.degree() >= d.degree()) sp_reduce_leading(r, d);
    return r;
}

/// Exact quotient a / d (throws if the division is not exact).
template <class C>
SPoly<C> sp_divexact(const SPoly<C>& a, const SPoly<C>& d) {
    if (d.is_zero()) throw_domain("DivisionByZero", "polynomial division by zero");
    SPoly<C> r = a;
    SPoly<C> q;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const Int e = r.degree() - d.degree();
        const C qc = mul(r.leading(), inv(d.leading()));
        sp_add_term(q, e, qc);
        for (const auto& [ed, cd] : d.terms) sp_add_term(r, ed + e, neg(mul(qc, cd)));
    }
    if (!r.is_zero()) throw_domain("DivisionByZero", "polynomial division not exact");
    return q;
}

/// Monic gcd.
template <class C>
SPoly<C> sp_gcd(SPoly<C> a, SPoly<C> b) {
    while (!b.is_zero()) {
        SPoly<C> r = sp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return sp_monic(a);
}

/// Integer-coefficient scaled copy with content 1 (sign of the leading
/// coefficient preserved).
inline SPoly<Rat> sp_to_primitive(const SPoly<Rat>& a) {
    if (a.is_zero()) return a;
    Int den_lcm(1);
    for (const auto& [e, c] : a.terms) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    Int content(0);
    for (const auto& [e, c] : a.terms) {
        Int n = c.get_num() * (den_lcm / c.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        content = g;
    }
    SPoly<Rat> r;
    for (const auto& [e, c] : a.terms)
        r.terms.emplace(e, Rat(c.get_num() * (den_lcm / c.get_den()) / content));
    return r;
}

/// Rational-coefficient gcd via the primitive pseudo-remainder sequence; the
/// naive Euclid over Q suffers coefficient blowup.
inline SPoly<Rat> sp_gcd(SPoly<Rat> a, SPoly<Rat> b) {
    if (a.is_zero()) return sp_monic(b);
    if (b.is_zero()) return sp_monic(a);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (a.degree() - b.degree() > 4096) {
        // gap-series numerators: one modular reduction brings the degrees close
        a = sp_rem(a, b);
        if (a.is_zero()) return sp_monic(b);
        std::swap(a, b);
    }
    SPoly<Rat> x = sp_to_primitive(a), y = sp_to_primitive(b);
    while (!y.is_zero()) {
        // pseudo-remainder: scale by lc(y) before each reduction to stay in Z
        SPoly<Rat> r = x;
        const Rat lcy = y.leading();
        while (!r.is_zero() && r.degree() >= y.degree()) {
            const Int e = r.degree() - y.degree();
            const Rat lcr = r.leading();
            r = sp_scale(r, lcy);
            for (const auto& [ed, cd] : y.terms) sp_add_term(r, ed + e, Rat(-lcr * cd));
        }
        x = std::move(y);
        y = sp_to_primitive(r);
    }
    return sp_monic(x);
}

/// Value of the polynomial at 0, i.e. its constant coefficient.
template <class C>
C sp_at_zero(const SPoly<C>& a, const C& zero) {
    auto it = a.terms.find(Int(0));
    return it == a.terms.end() ? zero : it->second;
}

/// Reduced fraction of sparse polynomials: denominator monic, gcd(num, den) = 1,
/// zero is 0/1. Equality is structural.
template <class C>
struct SFrac {
    SPoly<C> num;
    SPoly<C> den;

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const SFrac&, const SFrac&) = default;
};

template <class C>
SFrac<C> sf_normalize(SPoly<C> num, SPoly<C> den, const C& one) {
    if (den.is_zero()) throw_domain("DivisionByZero", "rational function with zero denominator");
    if (num.is_zero()) return SFrac<C>{sp_zero<C>(), sp_const(one)};
    // strip the common power of the variable first (cheap on sparse)
    const Int k = std::min(num.ord(), den.ord());
    if (k > 0) {
        SPoly<C> n2, d2;
        for (const auto& [e, c] : num.terms) n2.terms.emplace(e - k, c);
        for (const auto& [e, c] : den.terms) d2.terms.emplace(e - k, c);
        num = std::move(n2);
        den = std::move(d2);
    }
    if (!den.is_constant()) {
        SPoly<C> g = sp_gcd(num, den);
        if (!g.is_constant()) {
            num = sp_divexact(num, g);
            den = sp_divexact(den, g);
        }
    }
    const C lc = inv(den.leading());
    return SFrac<C>{sp_scale(num, lc), sp_scale(den, lc)};
}

template <class C>
SFrac<C> sf_const(const C& c, const C& one) {
    return SFrac<C>{sp_const(c), sp_const(one)};
}

template <class C>
SFrac<C> add(const SFrac<C>& a, const SFrac<C>& b, const C& one) {
    return sf_normalize(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den), one);
}

template <class C>
SFrac<C> sub(const SFrac<C>& a, const SFrac<C>& b, const C& one) {
    return sf_normalize(sub(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den), one);
}

template <class C>
SFrac<C> mul(const SFrac<C>& a, const SFrac<C>& b, const C& one) {
    return sf_normalize(mul(a.num, b.num), mul(a.den, b.den), one);
}

template <class C>
SFrac<C> neg(const SFrac<C>& a) {
    return SFrac<C>{neg(a.num), a.den};
}

template <class C>
SFrac<C> inv(const SFrac<C>& a, const C& one) {
    if (a.is_zero()) throw_domain("DivisionByZero", "inverse of 0");
    return sf_normalize(a.den, a.num, one);
}

template <class C>
SFrac<C> div(const SFrac<C>& a, const SFrac<C>& b, const C& one) {
    if (b.is_zero()) throw_domain("DivisionByZero", "division by 0");
    return sf_normalize(mul(a.num, b.den), mul(a.den, b.num), one);
}

/// t-adic order: ord(num) - ord(den). Pre: !is_zero.
template <class C>
Int sf_ord(const SFrac<C>& a) {
    return a.num.ord() - a.den.ord();
}

} // namespace valx
