#include "valx/valued_field.hpp"

#include <sstream>

namespace valx {

namespace {

// exponents beyond this cannot be held as exact mpz powers of p in Q
constexpr long kMaxPadicExponent = 1L << 26;

const Rat& as_q(const FieldElement& a) { return std::get<Rat>(a); }
const SFrac<Fp>& as_fpt(const FieldElement& a) { return std::get<SFrac<Fp>>(a); }
const SFrac<Rat>& as_qt(const FieldElement& a) { return std::get<SFrac<Rat>>(a); }

void check_kind(const ValuedField& F, const FieldElement& a) {
    bool ok = false;
    switch (F.kind) {
    case FieldKind::PAdicRationals: ok = std::holds_alternative<Rat>(a); break;
    case FieldKind::FpRationalFunctions: ok = std::holds_alternative<SFrac<Fp>>(a); break;
    case FieldKind::QRationalFunctions: ok = std::holds_alternative<SFrac<Rat>>(a); break;
    }
    if (!ok) throw_domain("MixedDescriptors", "element does not belong to the field");
}

} // namespace

GroupValue value(const ValuedField& F, const FieldElement& a) {
    check_kind(F, a);
    switch (F.kind) {
    case FieldKind::PAdicRationals: {
        const Rat& q = as_q(a);
        if (q == 0) return gv_infinity();
        const Int p(F.p);
        long vn = q.get_num() == 0 ? 0 : int_valuation(q.get_num(), p);
        long vd = int_valuation(q.get_den(), p);
        return gv_int(vn - vd);
    }
    case FieldKind::FpRationalFunctions: {
        const auto& f = as_fpt(a);
        if (f.is_zero()) return gv_infinity();
        return gv_int(sf_ord(f));
    }
    case FieldKind::QRationalFunctions: {
        const auto& f = as_qt(a);
        if (f.is_zero()) return gv_infinity();
        return gv_int(sf_ord(f));
    }
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

ResidueElement residue(const ValuedField& F, const FieldElement& a) {
    check_kind(F, a);
    GroupValue v = value(F, a);
    if (!v.infinite && gv_less(v, gv_int(0)))
        throw_domain("NegativeValue", "residue of an element with negative value");
    switch (F.kind) {
    case FieldKind::PAdicRationals: {
        const Rat& q = as_q(a);
        if (q == 0) return sf_const(fp_zero(F.p), fp_one(F.p));
        // v(q) >= 0: denominator is prime to p; reduce num * den^-1 mod p
        Fp n = fp_from_int(q.get_num(), F.p);
        Fp d = fp_from_int(q.get_den(), F.p);
        return sf_const(mul(n, inv(d)), fp_one(F.p));
    }
    case FieldKind::FpRationalFunctions: {
        // canonical form strips the common t-power, so v(a) >= 0 forces
        // ord(den) = 0; evaluation at t = 0 reads the order-0 coefficients
        const auto& f = as_fpt(a);
        if (f.is_zero() || f.num.ord() > 0) return sf_const(fp_zero(F.p), fp_one(F.p));
        return sf_const(mul(f.num.trailing(), inv(f.den.trailing())), fp_one(F.p));
    }
    case FieldKind::QRationalFunctions: {
        const auto& f = as_qt(a);
        if (f.is_zero() || f.num.ord() > 0) return sf_const(Rat(0), Rat(1));
        return sf_const(Rat(f.num.trailing() / f.den.trailing()), Rat(1));
    }
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement f_zero(const ValuedField& F) {
    switch (F.kind) {
    case FieldKind::PAdicRationals: return Rat(0);
    case FieldKind::FpRationalFunctions: return SFrac<Fp>{sp_zero<Fp>(), sp_const(fp_one(F.p))};
    case FieldKind::QRationalFunctions: return SFrac<Rat>{sp_zero<Rat>(), sp_const(Rat(1))};
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement f_one(const ValuedField& F) { return f_from_int(F, Int(1)); }

FieldElement f_from_int(const ValuedField& F, const Int& n) {
    switch (F.kind) {
    case FieldKind::PAdicRationals: return Rat(n);
    case FieldKind::FpRationalFunctions:
        return SFrac<Fp>{sp_const(fp_from_int(n, F.p)), sp_const(fp_one(F.p))};
    case FieldKind::QRationalFunctions: return SFrac<Rat>{sp_const(Rat(n)), sp_const(Rat(1))};
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement f_from_rat(const ValuedField& F, const Rat& q) {
    switch (F.kind) {
    case FieldKind::PAdicRationals: return q;
    case FieldKind::FpRationalFunctions: {
        Fp n = fp_from_int(q.get_num(), F.p);
        Fp d = fp_from_int(q.get_den(), F.p);
        return sf_const(mul(n, inv(d)), fp_one(F.p));
    }
    case FieldKind::QRationalFunctions: return SFrac<Rat>{sp_const(q), sp_const(Rat(1))};
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement add(const ValuedField& F, const FieldElement& a, const FieldElement& b) {
    check_kind(F, a);
    check_kind(F, b);
    switch (F.kind) {
    case FieldKind::PAdicRationals: return as_q(a) + as_q(b);
    case FieldKind::FpRationalFunctions: return add(as_fpt(a), as_fpt(b), fp_one(F.p));
    case FieldKind::QRationalFunctions: return add(as_qt(a), as_qt(b), Rat(1));
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement sub(const ValuedField& F, const FieldElement& a, const FieldElement& b) {
    check_kind(F, a);
    check_kind(F, b);
    switch (F.kind) {
    case FieldKind::PAdicRationals: return as_q(a) - as_q(b);
    case FieldKind::FpRationalFunctions: return sub(as_fpt(a), as_fpt(b), fp_one(F.p));
    case FieldKind::QRationalFunctions: return sub(as_qt(a), as_qt(b), Rat(1));
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement mul(const ValuedField& F, const FieldElement& a, const FieldElement& b) {
    check_kind(F, a);
    check_kind(F, b);
    switch (F.kind) {
    case FieldKind::PAdicRationals: return as_q(a) * as_q(b);
    case FieldKind::FpRationalFunctions: return mul(as_fpt(a), as_fpt(b), fp_one(F.p));
    case FieldKind::QRationalFunctions: return mul(as_qt(a), as_qt(b), Rat(1));
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement neg(const ValuedField& F, const FieldElement& a) {
    check_kind(F, a);
    switch (F.kind) {
    case FieldKind::PAdicRationals: return -as_q(a);
    case FieldKind::FpRationalFunctions: return neg(as_fpt(a));
    case FieldKind::QRationalFunctions: return neg(as_qt(a));
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement inv(const ValuedField& F, const FieldElement& a) {
    check_kind(F, a);
    if (f_is_zero(a)) throw_domain("DivisionByZero", "inverse of 0");
    switch (F.kind) {
    case FieldKind::PAdicRationals: return Rat(1) / as_q(a);
    case FieldKind::FpRationalFunctions: return inv(as_fpt(a), fp_one(F.p));
    case FieldKind::QRationalFunctions: return inv(as_qt(a), Rat(1));
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement div(const ValuedField& F, const FieldElement& a, const FieldElement& b) {
    return mul(F, a, inv(F, b));
}

bool f_is_zero(const FieldElement& a) {
    if (const Rat* q = std::get_if<Rat>(&a)) return *q == 0;
    if (const auto* f = std::get_if<SFrac<Fp>>(&a)) return f->is_zero();
    return std::get<SFrac<Rat>>(a).is_zero();
}

bool f_eq(const FieldElement& a, const FieldElement& b) { return a == b; }

FieldElement uniformizer(const ValuedField& F) {
    switch (F.kind) {
    case FieldKind::PAdicRationals: return Rat(F.p);
    case FieldKind::FpRationalFunctions:
        return SFrac<Fp>{sp_term(Int(1), fp_one(F.p)), sp_const(fp_one(F.p))};
    case FieldKind::QRationalFunctions:
        return SFrac<Rat>{sp_term(Int(1), Rat(1)), sp_const(Rat(1))};
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

FieldElement element_of_value(const ValuedField& F, const Int& gamma) {
    Int e = abs(gamma);
    switch (F.kind) {
    case FieldKind::PAdicRationals: {
        if (e > kMaxPadicExponent)
            throw_domain("BudgetExhausted",
                         "p^" + e.get_str() + " exceeds the exact representation bound");
        Int pw = pow_int(Int(F.p), e.get_ui());
        return gamma >= 0 ? Rat(pw) : make_rat(Int(1), pw);
    }
    case FieldKind::FpRationalFunctions: {
        SPoly<Fp> t_e = sp_term(e, fp_one(F.p));
        SPoly<Fp> one = sp_const(fp_one(F.p));
        return gamma >= 0 ? SFrac<Fp>{t_e, one} : SFrac<Fp>{one, t_e};
    }
    case FieldKind::QRationalFunctions: {
        SPoly<Rat> t_e = sp_term(e, Rat(1));
        SPoly<Rat> one = sp_const(Rat(1));
        return gamma >= 0 ? SFrac<Rat>{t_e, one} : SFrac<Rat>{one, t_e};
    }
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

// --- residue field arithmetic ---

namespace {

bool residue_is_fp(const ValuedField& F) { return F.kind != FieldKind::QRationalFunctions; }

} // namespace

ResidueElement r_zero(const ValuedField& F) {
    if (residue_is_fp(F)) return sf_const(fp_zero(F.p), fp_one(F.p));
    return sf_const(Rat(0), Rat(1));
}

ResidueElement r_one(const ValuedField& F) { return r_from_int(F, Int(1)); }

ResidueElement r_from_int(const ValuedField& F, const Int& n) {
    if (residue_is_fp(F)) return sf_const(fp_from_int(n, F.p), fp_one(F.p));
    return sf_const(Rat(n), Rat(1));
}

ResidueElement add(const ValuedField& F, const ResidueElement& a, const ResidueElement& b) {
    if (residue_is_fp(F)) return add(std::get<SFrac<Fp>>(a), std::get<SFrac<Fp>>(b), fp_one(F.p));
    return add(std::get<SFrac<Rat>>(a), std::get<SFrac<Rat>>(b), Rat(1));
}

ResidueElement mul(const ValuedField& F, const ResidueElement& a, const ResidueElement& b) {
    if (residue_is_fp(F)) return mul(std::get<SFrac<Fp>>(a), std::get<SFrac<Fp>>(b), fp_one(F.p));
    return mul(std::get<SFrac<Rat>>(a), std::get<SFrac<Rat>>(b), Rat(1));
}

ResidueElement inv(const ValuedField& F, const ResidueElement& a) {
    if (residue_is_fp(F)) return inv(std::get<SFrac<Fp>>(a), fp_one(F.p));
    return inv(std::get<SFrac<Rat>>(a), Rat(1));
}

ResidueElement div(const ValuedField& F, const ResidueElement& a, const ResidueElement& b) {
    return mul(F, a, inv(F, b));
}

bool r_eq(const ResidueElement& a, const ResidueElement& b) { return a == b; }

bool r_is_zero(const ResidueElement& a) {
    if (const auto* f = std::get_if<SFrac<Fp>>(&a)) return f->is_zero();
    return std::get<SFrac<Rat>>(a).is_zero();
}

ResidueElement r_shift_y(const ValuedField& F, const ResidueElement& a, const Int& power) {
    if (residue_is_fp(F)) {
        const auto& f = std::get<SFrac<Fp>>(a);
        return sf_normalize(sp_shift(f.num, power, fp_one(F.p)), f.den, fp_one(F.p));
    }
    const auto& f = std::get<SFrac<Rat>>(a);
    return sf_normalize(sp_shift(f.num, power, Rat(1)), f.den, Rat(1));
}

// --- formatting ---

std::string field_to_string(const ValuedField& F) {
    switch (F.kind) {
    case FieldKind::PAdicRationals: return "Q@p=" + std::to_string(F.p);
    case FieldKind::FpRationalFunctions: return "Fp(t)@p=" + std::to_string(F.p);
    case FieldKind::QRationalFunctions: return "Q(t)";
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

namespace {

template <class C>
std::string coeff_str(const C& c);

template <>
std::string coeff_str<Fp>(const Fp& c) {
    return std::to_string(c.v);
}

template <>
std::string coeff_str<Rat>(const Rat& c) {
    return rat_to_string(c);
}

template <class C>
bool coeff_is_neg_one(const C&);

template <>
bool coeff_is_neg_one<Fp>(const Fp&) {
    return false; // canonical representative is nonnegative
}

template <>
bool coeff_is_neg_one<Rat>(const Rat& c) {
    return c == -1;
}

template <class C>
std::string spoly_to_string(const SPoly<C>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const Int& e = it->first;
        const C& c = it->second;
        std::string cs = coeff_str(c);
        std::string piece;
        bool neg_lead = !cs.empty() && cs[0] == '-';
        if (e == 0) {
            piece = cs;
        } else {
            std::string var_part = var;
            if (e != 1) var_part += "^" + e.get_str();
            if (is_one(c))
                piece = var_part;
            else if (coeff_is_neg_one(c))
                piece = "-" + var_part;
            else if (cs.find('/') != std::string::npos)
                piece = "(" + cs + ")" + var_part;
            else
                piece = cs + var_part;
            neg_lead = !piece.empty() && piece[0] == '-';
        }
        if (first) {
            s = piece;
        } else if (neg_lead) {
            s += "-" + piece.substr(1);
        } else {
            s += "+" + piece;
        }
        first = false;
    }
    return s;
}

template <class C>
std::string sfrac_to_string(const SFrac<C>& f, const std::string& var) {
    std::string n = spoly_to_string(f.num, var);
    if (f.den.is_constant() && !f.den.is_zero() && is_one(f.den.trailing()) && f.den.ord() == 0)
        return n;
    std::string d = spoly_to_string(f.den, var);
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+-", 1) != std::string::npos || s.find('/') != std::string::npos
                   ? "(" + s + ")"
                   : s;
    };
    return wrap(n) + "/" + wrap(d);
}

} // namespace

std::string element_to_string(const ValuedField& F, const FieldElement& a) {
    check_kind(F, a);
    switch (F.kind) {
    case FieldKind::PAdicRationals: return rat_to_string(as_q(a));
    case FieldKind::FpRationalFunctions: return sfrac_to_string(as_fpt(a), "t");
    case FieldKind::QRationalFunctions: return sfrac_to_string(as_qt(a), "t");
    }
    throw_domain("MixedDescriptors", "unknown field kind");
}

std::string residue_to_string(const ValuedField& /*F*/, const ResidueElement& r) {
    if (const auto* f = std::get_if<SFrac<Fp>>(&r)) return sfrac_to_string(*f, "y");
    return sfrac_to_string(std::get<SFrac<Rat>>(r), "y");
}

} // namespace valx
