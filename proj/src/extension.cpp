#include "valx/extension.hpp"

#include <algorithm>

namespace valx {

namespace {

Int rat_floor(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return fl;
}

Int gv_plain_int(const GroupValue& g) {
    if (g.infinite || g.is_augmented() || g.coords[0].get_den() != 1)
        throw_domain("UnsupportedCut", "plain integer value expected");
    return g.coords[0].get_num();
}

/// Shifted coefficients of f around b: f(x) = sum coeffs[i] * (x-b)^i.
std::vector<FieldElement> shifted_coeffs(const ValuedField& F, const Poly& f,
                                         const FieldElement& b) {
    return compose_shift(F, f, b).c;
}

GroupValue monomial_value(const ExtensionValuation& v, const Poly& f) {
    const ValuedField& F = v.field;
    if (f.is_zero()) return gv_infinity();
    std::vector<FieldElement> cs = shifted_coeffs(F, f, v.center);
    std::optional<GroupValue> best;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (f_is_zero(cs[i])) continue;
        GroupValue term = add(value(F, cs[i]), gv_scale(v.alpha, Int(static_cast<long>(i))));
        if (!best || gv_less(term, *best)) best = term;
    }
    return *best;
}

GroupValue limit_value(const ExtensionValuation& v, const Poly& f) {
    const ValuedField& F = v.field;
    if (f.is_zero()) return gv_infinity();
    if (f.deg() == 0) return value(F, f.c[0]);
    if (v.declared_transcendental) {
        FixedReport rep = check_fixed(F, f, v.at, v.budget);
        switch (rep.verdict) {
        case FixedVerdict::Fixed:
            return rep.value;
        case FixedVerdict::NotFixed:
            throw_domain("NotActuallyTranscendental",
                         "value not fixed at degree " + std::to_string(rep.witness_degree) +
                             "; witness " + poly_to_string(F, f));
        case FixedVerdict::Undecided:
            throw_domain("BudgetExhausted", "undecided within budget");
        }
    }
    if (v.degree_bound)
        return fixed_linear_values(F, v.at, f, *v.degree_bound, v.budget);
    throw_domain("DegreeBoundRequired",
                 "limit valuation without transcendence declaration needs a degree bound");
}

} // namespace

ExtensionValuation gauss_valuation(const ValuedField& F) {
    return monomial_valuation(F, f_zero(F), gv_int(0));
}

ExtensionValuation monomial_valuation(const ValuedField& F, const FieldElement& b,
                                      const GroupValue& alpha) {
    if (alpha.infinite) throw_domain("UnsupportedCut", "alpha must be finite");
    ExtensionValuation v;
    v.field = F;
    v.kind = ValKind::Monomial;
    v.center = b;
    v.alpha = alpha;
    v.at = at_empty(F);
    return v;
}

ExtensionValuation limit_valuation(const ApproxType& A, bool declared_transcendental,
                                   std::optional<long> degree_bound, long budget) {
    if (A.variant != AtVariant::ImmediateFromPcs)
        throw_domain("NotImmediate", "limit valuations need an immediate approximation type");
    ExtensionValuation v;
    v.field = A.field;
    v.kind = ValKind::LimitImmediate;
    v.center = f_zero(A.field);
    v.alpha = gv_int(0);
    v.at = A;
    v.declared_transcendental = declared_transcendental;
    v.degree_bound = degree_bound;
    v.budget = budget;
    return v;
}

GroupValue value_poly(const ExtensionValuation& v, const Poly& f) {
    return v.kind == ValKind::Monomial ? monomial_value(v, f) : limit_value(v, f);
}

GroupValue value_ratfun(const ExtensionValuation& v, const RatFun& r) {
    if (r.den.is_zero()) throw_domain("DivisionByZero", "rational function with zero denominator");
    GroupValue vn = value_poly(v, r.num);
    if (vn.infinite) return vn;
    return sub(vn, value_poly(v, r.den));
}

namespace {

/// Residue polynomial in y contributed by the shifted coefficients at the
/// minimum value m: sum over {i : v0(c_i) + i*delta = m} of res(c_i u^(i*delta-m)) y^i.
ResidueElement monomial_residue_poly(const ValuedField& F, const std::vector<FieldElement>& cs,
                                     const Int& delta, const Int& m) {
    ResidueElement acc = r_zero(F);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (f_is_zero(cs[i])) continue;
        Int shift = Int(static_cast<long>(i)) * delta - m;
        FieldElement unit = mul(F, cs[i], element_of_value(F, shift));
        GroupValue vu = value(F, unit);
        if (vu.infinite || gv_plain_int(vu) != 0) continue; // above the minimum
        ResidueElement coeff = residue(F, unit);
        acc = add(F, acc, r_shift_y(F, coeff, Int(static_cast<long>(i))));
    }
    return acc;
}

ResidueElement monomial_residue(const ExtensionValuation& v, const RatFun& r) {
    const ValuedField& F = v.field;
    std::vector<FieldElement> num = shifted_coeffs(F, r.num, v.center);
    std::vector<FieldElement> den = shifted_coeffs(F, r.den, v.center);
    if (!v.alpha.is_augmented()) {
        Int delta = gv_plain_int(v.alpha);
        Int m = gv_plain_int(monomial_value(v, r.den)); // = value of num (total value 0)
        ResidueElement rn = monomial_residue_poly(F, num, delta, m);
        ResidueElement rd = monomial_residue_poly(F, den, delta, m);
        return div(F, rn, rd);
    }
    // value-transcendental: the minimum is attained at a unique index, and
    // value 0 forces the same index and coefficient value in num and den
    auto min_index = [&](const std::vector<FieldElement>& cs) {
        std::optional<size_t> arg;
        std::optional<GroupValue> best;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (f_is_zero(cs[i])) continue;
            GroupValue term = add(value(F, cs[i]), gv_scale(v.alpha, Int(static_cast<long>(i))));
            if (!best || gv_less(term, *best)) {
                best = term;
                arg = i;
            }
        }
        return *arg;
    };
    size_t in = min_index(num), id = min_index(den);
    if (in != id) throw_domain("NonzeroValue", "residue of an element of nonzero value");
    return residue(F, div(F, num[in], den[id]));
}

ResidueElement limit_residue(const ExtensionValuation& v, const RatFun& r) {
    const ValuedField& F = v.field;
    const Pcs& g = v.at.gen;
    // stabilization: past both thresholds and once both pivot lines exceed the
    // fixed values, residues of r(c_nu) are constant
    auto line_clears = [&](const Poly& f, long& nu_min) -> GroupValue {
        if (f.deg() == 0) return value(F, f.c[0]);
        if (!v.declared_transcendental) {
            if (!v.degree_bound)
                throw_domain("DegreeBoundRequired", "limit valuation needs a degree bound");
            if (f.deg() >= *v.degree_bound)
                throw_domain("AssertionViolated",
                             "polynomial degree is not below the asserted degree bound");
        }
        FixedReport rep = check_fixed(F, f, v.at, v.budget);
        if (rep.verdict == FixedVerdict::NotFixed) {
            if (v.declared_transcendental)
                throw_domain("NotActuallyTranscendental",
                             "value not fixed; witness " + poly_to_string(F, f));
            throw_domain("AssertionViolated", "value not fixed below the asserted degree bound");
        }
        if (rep.verdict == FixedVerdict::Undecided)
            throw_domain("BudgetExhausted", "undecided within budget");
        long nu = rep.threshold;
        while (true) {
            GroupValue line =
                add(rep.pivot_base, gv_scale(gv_int(g->gamma_int(nu)), Int(rep.pivot)));
            if (gv_less(rep.value, line)) break;
            if (++nu > v.budget + rep.threshold)
                throw_domain("BudgetExhausted", "stabilization not reached within budget");
        }
        nu_min = std::max(nu_min, nu);
        return rep.value;
    };
    long nu = 0;
    GroupValue vn = line_clears(r.num, nu);
    GroupValue vd = line_clears(r.den, nu);
    if (vn.infinite || compare(vn, vd) != Ordering::Equal)
        throw_domain("NonzeroValue", "residue of an element of nonzero value");
    FieldElement num_v = p_eval(F, r.num, g->term(nu));
    FieldElement den_v = p_eval(F, r.den, g->term(nu));
    return residue(F, div(F, num_v, den_v));
}

} // namespace

ResidueElement residue_ratfun(const ExtensionValuation& v, const RatFun& r) {
    GroupValue total = value_ratfun(v, r);
    if (total.infinite || !(compare(total, gv_int(0)) == Ordering::Equal))
        throw_domain("NonzeroValue", "residue requires value 0");
    return v.kind == ValKind::Monomial ? monomial_residue(v, r) : limit_residue(v, r);
}

Cut induced_cut(const GroupValue& alpha) {
    if (!alpha.is_augmented())
        throw_domain("UnsupportedCut", "plain values do not induce a new cut");
    const Cut& c = *alpha.cut;
    bool pos = alpha.mult > 0;
    switch (c.kind) {
    case Cut::Kind::AboveAll:
        return pos ? Cut::above_all() : Cut::below_all();
    case Cut::Kind::BelowAll:
        return pos ? Cut::below_all() : Cut::above_all();
    case Cut::Kind::Principal: {
        std::vector<Rat> p(c.q.size());
        for (size_t i = 0; i < c.q.size(); ++i)
            p[i] = alpha.coords[i] + Rat(alpha.mult) * c.q[i];
        Cut::Side side = c.side;
        if (!pos) side = side == Cut::Side::Left ? Cut::Side::Right : Cut::Side::Left;
        return Cut::principal(std::move(p), side);
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

ApproxType approx_type_of(const ExtensionValuation& v) {
    if (v.kind == ValKind::LimitImmediate) return v.at;
    if (v.alpha.is_augmented())
        return at_value_extending(v.field, v.center, induced_cut(v.alpha));
    return at_residue_extending(v.field, v.center, gv_plain_int(v.alpha));
}

ExtensionValuation realize(const ApproxType& A, bool declared_transcendental,
                           std::optional<long> degree_bound, long budget) {
    switch (classify(A)) {
    case AtClass::Trivial:
        throw_domain("TrivialType", "trivial approximation types are realized in K itself");
    case AtClass::Empty:
        throw_domain("EmptyType", "the empty approximation type carries no constraint");
    case AtClass::ValueExtending:
        return monomial_valuation(A.field, A.witness,
                                  gv_alpha(GroupDescriptor{GroupKind::Integers}, A.cut));
    case AtClass::ResidueExtending:
        return monomial_valuation(A.field, A.witness, gv_int(A.delta));
    case AtClass::Immediate:
        if (!declared_transcendental)
            throw_domain("UnsupportedAlgebraicImmediate",
                         "realizing an algebraic immediate type needs the extension K(a), which "
                         "is not constructed here");
        return limit_valuation(A, true, degree_bound, budget);
    }
    throw_domain("UnsupportedCut", "unknown approximation type class");
}

ExtensionClass classify_extension(const ExtensionValuation& v) {
    if (v.kind == ValKind::Monomial)
        return v.alpha.is_augmented() ? ExtensionClass::ValueTranscendental
                                      : ExtensionClass::ResidueTranscendental;
    return v.declared_transcendental ? ExtensionClass::Immediate
                                     : ExtensionClass::ValuationAlgebraicDetected;
}

bool is_pure(const ExtensionValuation& v) {
    if (v.kind == ValKind::Monomial) return true; // value- or residue-extending type
    return v.declared_transcendental;
}

bool is_almost_pure(const ExtensionValuation& v) {
    if (is_pure(v)) return true;
    // algebraic completion type: supp = vK
    const Pcs& g = v.at.gen;
    if (g->declared_cofinal_in_vk()) return true;
    throw_domain("BudgetExhausted",
                 "completion-type check needs a generator cofinal in vK; a finite presentation "
                 "cannot certify it");
}

namespace {

bool distance_exceeds(const ValuedField& F, const GroupValue& d, const LowerSet& ls) {
    switch (ls.kind) {
    case LowerSet::Kind::Empty:
        return true;
    case LowerSet::Kind::All:
        return d.infinite;
    case LowerSet::Kind::UpTo:
        return d.infinite || d.coords[0] > Rat(ls.bound);
    }
    (void)F;
    return false;
}

Poly pow_linear(const ValuedField& F, const FieldElement& b, long n) {
    Poly lin{{neg(F, b), f_one(F)}}; // x - b
    Poly r = p_const(F, f_one(F));
    for (long i = 0; i < n; ++i) r = mul(F, r, lin);
    return r;
}

/// Witness for non-equivalent monomial pairs: a polynomial with provably
/// differing values under the two valuations.
Poly monomial_witness(const ExtensionValuation& v1, const ExtensionValuation& v2) {
    const ValuedField& F = v1.field;
    Poly x_b1 = pow_linear(F, v1.center, 1);
    Poly x_b2 = pow_linear(F, v2.center, 1);
    auto differs = [&](const Poly& f) {
        return values_distinguishable(value_poly(v1, f), value_poly(v2, f));
    };
    if (differs(x_b1)) return x_b1;
    if (differs(x_b2)) return x_b2;
    // both augmented with Principal cuts: separate via a power that drives the
    // plain parts to different sides of an integer, or exposes the side
    Cut c1 = induced_cut(v1.alpha), c2 = induced_cut(v2.alpha);
    if (c1.kind == Cut::Kind::Principal && c2.kind == Cut::Kind::Principal) {
        const Rat& p1 = c1.q[0];
        const Rat& p2 = c2.q[0];
        long n;
        if (p1 != p2) {
            Rat gap = p1 > p2 ? p1 - p2 : p2 - p1;
            Rat need = 1 / gap;
            n = static_cast<long>(rat_floor(need).get_si()) + 1;
        } else {
            n = static_cast<long>(p1.get_den().get_si()); // denominator exposes the side
        }
        Poly f = pow_linear(F, v1.center, n);
        if (differs(f)) return f;
    }
    throw_domain("UnsupportedCut", "no witness found for non-equivalent valuations");
}

} // namespace

namespace {

struct ValueProfile {
    Rat plain;    // folded rational part
    int iota = 0; // infinitesimal direction: sign of the side-adjusted multiplicity
    int top = 0;  // beyond-the-group direction for boundary cuts
};

ValueProfile value_profile(const GroupValue& g) {
    ValueProfile p;
    p.plain = g.coords[0];
    switch (g.cut->kind) {
    case Cut::Kind::Principal:
        p.plain += Rat(g.mult) * g.cut->q[0];
        p.iota = (g.cut->side == Cut::Side::Right ? 1 : -1) * sgn(g.mult);
        break;
    case Cut::Kind::AboveAll:
        p.top = sgn(g.mult);
        break;
    case Cut::Kind::BelowAll:
        p.top = -sgn(g.mult);
        break;
    }
    return p;
}

/// Is there an integer probe n with a < n < b (or the reverse) in the
/// augmented order? Such a probe exhibits the difference against vK = Z.
bool integer_probe_separates(const ValueProfile& a, const ValueProfile& b) {
    auto strictly_below = [](const ValueProfile& p, const Rat& n) {
        return p.plain < n || (p.plain == n && p.iota < 0);
    };
    auto strictly_above = [](const ValueProfile& p, const Rat& n) {
        return p.plain > n || (p.plain == n && p.iota > 0);
    };
    for (const Rat& base : {a.plain, b.plain}) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), base.get_num().get_mpz_t(), base.get_den().get_mpz_t());
        for (int off = 0; off <= 1; ++off) {
            Rat n(fl + off);
            if ((strictly_below(a, n) && strictly_above(b, n)) ||
                (strictly_above(a, n) && strictly_below(b, n)))
                return true;
        }
    }
    return false;
}

} // namespace

bool values_distinguishable(const GroupValue& a, const GroupValue& b) {
    if (a.infinite || b.infinite) return a.infinite != b.infinite;
    if (a.is_augmented() != b.is_augmented()) return true;
    if (!a.is_augmented()) return compare(a, b) != Ordering::Equal;
    ValueProfile pa = value_profile(a), pb = value_profile(b);
    if (pa.top != pb.top) return true;
    if (pa.top != 0) return false; // same side beyond the group: no probe in vK
    return integer_probe_separates(pa, pb);
}

EquivResult equivalent(const ExtensionValuation& v1, const ExtensionValuation& v2,
                       long sample_budget) {
    const ValuedField& F = v1.field;
    if (!(v1.field == v2.field))
        throw_domain("MixedDescriptors", "valuations over different base fields");
    // limit pairs: decided only for identical presentations
    if (v1.kind == ValKind::LimitImmediate && v2.kind == ValKind::LimitImmediate) {
        if (v1.at.gen->same_presentation(*v2.at.gen))
            return EquivResult{EquivResult::Kind::Equivalent, std::nullopt};
        return EquivResult{EquivResult::Kind::Undecided, std::nullopt};
    }
    if (v1.kind != v2.kind) {
        // a monomial valuation and a limit valuation induce approximation
        // types of different classes; separating needs evaluation rights
        const ExtensionValuation& lim = v1.kind == ValKind::LimitImmediate ? v1 : v2;
        const ExtensionValuation& mon = v1.kind == ValKind::LimitImmediate ? v2 : v1;
        if (!lim.declared_transcendental)
            return EquivResult{EquivResult::Kind::Undecided, std::nullopt};
        Poly f;
        if (mon.alpha.is_augmented()) {
            // x - b gets an augmented value under mon, a plain one under lim
            f = Poly{{neg(F, mon.center), f_one(F)}};
        } else {
            // x - c_nu with gamma_nu beyond the monomial type's support
            long nu = lim.at.gen->index_of_radius(gv_plain_int(mon.alpha) + 1, sample_budget);
            f = Poly{{neg(F, lim.at.gen->term(nu)), f_one(F)}};
        }
        if (values_distinguishable(value_poly(v1, f), value_poly(v2, f)))
            return EquivResult{EquivResult::Kind::NotEquivalent, f};
        return EquivResult{EquivResult::Kind::Undecided, std::nullopt};
    }
    // monomial pair
    const bool aug1 = v1.alpha.is_augmented(), aug2 = v2.alpha.is_augmented();
    bool equal = false;
    if (!aug1 && !aug2) {
        GroupValue d = value(F, sub(F, v1.center, v2.center));
        equal = compare(v1.alpha, v2.alpha) == Ordering::Equal && !gv_less(d, v1.alpha);
    } else if (aug1 && aug2) {
        Cut c1 = induced_cut(v1.alpha), c2 = induced_cut(v2.alpha);
        if (c1 == c2) {
            GroupValue d = value(F, sub(F, v1.center, v2.center));
            equal = distance_exceeds(F, d, cut_lower_set_z(c1));
        }
    }
    if (equal) return EquivResult{EquivResult::Kind::Equivalent, std::nullopt};
    return EquivResult{EquivResult::Kind::NotEquivalent, monomial_witness(v1, v2)};
}

std::string valuation_to_string(const ExtensionValuation& v) {
    const ValuedField& F = v.field;
    if (v.kind == ValKind::LimitImmediate) return "limit:" + at_to_string(v.at);
    if (!v.alpha.is_augmented()) {
        if (gv_plain_int(v.alpha) == 0 && f_is_zero(v.center)) return "gauss";
        return "monomial:b=" + element_to_string(F, v.center) +
               ",alpha=" + gv_to_string(v.alpha);
    }
    return "monomial:b=" + element_to_string(F, v.center) +
           ",cut=" + cut_to_string(induced_cut(v.alpha));
}

} // namespace valx
