#include "valx/poly.hpp"

namespace valx {

namespace {

void trim(Poly& p) {
    while (!p.c.empty() && f_is_zero(p.c.back())) p.c.pop_back();
}

} // namespace

Poly p_zero() { return Poly{}; }

Poly p_make(const ValuedField& F, std::vector<FieldElement> coeffs) {
    (void)F;
    Poly p{std::move(coeffs)};
    trim(p);
    return p;
}

Poly p_const(const ValuedField& F, const FieldElement& a) {
    if (f_is_zero(a)) return p_zero();
    (void)F;
    return Poly{{a}};
}

Poly p_x(const ValuedField& F) { return Poly{{f_zero(F), f_one(F)}}; }

Poly add(const ValuedField& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), f_zero(F));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = add(F, a.c[i], b.c[i]);
        else if (i < a.c.size())
            r.c[i] = a.c[i];
        else
            r.c[i] = b.c[i];
    }
    trim(r);
    return r;
}

Poly neg(const ValuedField& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = neg(F, x);
    return r;
}

Poly sub(const ValuedField& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly mul(const ValuedField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return p_zero();
    Poly r;
    r.c.resize(a.c.size() + b.c.size() - 1, f_zero(F));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = add(F, r.c[i + j], mul(F, a.c[i], b.c[j]));
    trim(r);
    return r;
}

Poly p_scale(const ValuedField& F, const Poly& a, const FieldElement& s) {
    if (f_is_zero(s)) return p_zero();
    Poly r = a;
    for (auto& x : r.c) x = mul(F, x, s);
    return r;
}

bool p_eq(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!f_eq(a.c[i], b.c[i])) return false;
    return true;
}

FieldElement p_eval(const ValuedField& F, const Poly& f, const FieldElement& a) {
    FieldElement r = f_zero(F);
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) r = add(F, mul(F, r, a), *it);
    return r;
}

Poly hasse_derivative(const ValuedField& F, const Poly& f, long i) {
    if (i < 0) throw_domain("MixedDescriptors", "negative derivative index");
    if (i == 0) return f;
    if (f.deg() < i) return p_zero();
    Poly r;
    r.c.reserve(f.c.size() - static_cast<size_t>(i));
    for (long j = i; j <= f.deg(); ++j) {
        Int b = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i));
        r.c.push_back(mul(F, f_from_int(F, b), f.c[static_cast<size_t>(j)]));
    }
    trim(r);
    return r;
}

std::vector<FieldElement> taylor_coefficients(const ValuedField& F, const Poly& f,
                                              const FieldElement& c) {
    std::vector<FieldElement> out;
    long n = std::max<long>(f.deg(), 0);
    out.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) out.push_back(p_eval(F, hasse_derivative(F, f, i), c));
    return out;
}

Poly compose_shift(const ValuedField& F, const Poly& f, const FieldElement& b) {
    // Horner in (X + b)
    Poly xb{{b, f_one(F)}};
    Poly r;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        r = add(F, mul(F, r, xb), p_const(F, *it));
    return r;
}

Poly p_divmod(const ValuedField& F, const Poly& a, const Poly& b, Poly& rem) {
    if (b.is_zero()) throw_domain("DivisionByZero", "polynomial division by zero");
    Poly q;
    rem = a;
    const FieldElement lc_inv = inv(F, b.c.back());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        long k = rem.deg() - b.deg();
        FieldElement s = mul(F, rem.c.back(), lc_inv);
        if (q.c.size() < static_cast<size_t>(k) + 1) q.c.resize(static_cast<size_t>(k) + 1, f_zero(F));
        q.c[static_cast<size_t>(k)] = add(F, q.c[static_cast<size_t>(k)], s);
        for (long j = 0; j <= b.deg(); ++j) {
            size_t idx = static_cast<size_t>(j + k);
            rem.c[idx] = sub(F, rem.c[idx], mul(F, s, b.c[static_cast<size_t>(j)]));
        }
        trim(rem);
    }
    trim(q);
    return q;
}

Poly p_monic(const ValuedField& F, const Poly& a) {
    if (a.is_zero()) return a;
    return p_scale(F, a, inv(F, a.c.back()));
}

Poly p_gcd(const ValuedField& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r;
        p_divmod(F, x, y, r);
        x = y;
        y = r;
    }
    return p_monic(F, x);
}

RatFun rf_make(const ValuedField& F, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw_domain("DivisionByZero", "rational function with zero denominator");
    if (num.is_zero()) return RatFun{p_zero(), p_const(F, f_one(F))};
    Poly g = p_gcd(F, num, den);
    Poly n = num, d = den;
    if (g.deg() > 0) {
        Poly r;
        n = p_divmod(F, num, g, r);
        d = p_divmod(F, den, g, r);
    }
    FieldElement lc = inv(F, d.c.back());
    return RatFun{p_scale(F, n, lc), p_scale(F, d, lc)};
}

RatFun rf_from_poly(const ValuedField& F, const Poly& num) {
    return RatFun{num, p_const(F, f_one(F))};
}

bool rf_eq(const RatFun& a, const RatFun& b) { return p_eq(a.num, b.num) && p_eq(a.den, b.den); }

std::string poly_to_string(const ValuedField& F, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (long j = f.deg(); j >= 0; --j) {
        const FieldElement& c = f.c[static_cast<size_t>(j)];
        if (f_is_zero(c)) continue;
        std::string cs = element_to_string(F, c);
        std::string piece;
        if (j == 0) {
            piece = cs.find_first_of("+-/", 1) != std::string::npos ? "(" + cs + ")" : cs;
        } else {
            std::string xp = j == 1 ? "x" : "x^" + std::to_string(j);
            if (cs == "1")
                piece = xp;
            else if (cs == "-1")
                piece = "-" + xp;
            else if (cs.find_first_of("+-/", 1) != std::string::npos || cs.find('t') != std::string::npos)
                piece = "(" + cs + ")" + xp;
            else
                piece = cs + xp;
        }
        if (first) {
            s = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            s += "-" + piece.substr(1);
        } else {
            s += "+" + piece;
        }
    }
    return s;
}

std::string ratfun_to_string(const ValuedField& F, const RatFun& r) {
    std::string n = poly_to_string(F, r.num);
    if (r.den.deg() == 0 && f_eq(r.den.c[0], f_one(F))) return n;
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+-", 1) != std::string::npos || s.find('/') != std::string::npos
                   ? "(" + s + ")"
                   : s;
    };
    return wrap(n) + "/" + wrap(poly_to_string(F, r.den));
}

} // namespace valx
