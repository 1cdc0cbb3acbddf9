#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "valx/extension.hpp"
#include "valx/specs.hpp"

using namespace valx;
using valx::testing::Rng;

namespace {

const ValuedField Q2{FieldKind::PAdicRationals, 2};
const ValuedField F3T{FieldKind::FpRationalFunctions, 3};
const ValuedField F2T{FieldKind::FpRationalFunctions, 2};

/// Brute-force value: expand f around b by explicit binomial sums and take the
/// minimum of the term values one by one.
GroupValue brute_min_value(const ValuedField& F, const Poly& f, const FieldElement& b,
                           const GroupValue& alpha) {
    if (f.is_zero()) return gv_infinity(alpha.kind);
    std::optional<GroupValue> best;
    long n = f.deg();
    for (long i = 0; i <= n; ++i) {
        // coefficient of (x-b)^i: sum_j binom(j,i) c_j b^(j-i)
        FieldElement ci = f_zero(F);
        FieldElement bp = f_one(F);
        for (long j = i; j <= n; ++j) {
            FieldElement term = mul(F, f_from_int(F, binomial(static_cast<unsigned long>(j),
                                                              static_cast<unsigned long>(i))),
                                    mul(F, f.c[static_cast<size_t>(j)], bp));
            ci = add(F, ci, term);
            bp = mul(F, bp, b);
        }
        if (f_is_zero(ci)) continue;
        GroupValue v = add(value(F, ci), gv_scale(alpha, Int(i)));
        if (!best || gv_less(v, *best)) best = v;
    }
    return *best;
}

} // namespace

TEST_CASE("monomial values: worked examples") {
    ExtensionValuation g = gauss_valuation(Q2);
    CHECK(compare(value_poly(g, parse_poly(Q2, "x^2+2x+4")), gv_int(0)) == Ordering::Equal);

    ExtensionValuation m1 = monomial_valuation(Q2, f_zero(Q2), gv_int(1));
    CHECK(compare(value_poly(m1, parse_poly(Q2, "x^2+2x+4")), gv_int(2)) == Ordering::Equal);

    // alpha realizing the cut just above 0 over F_3(t): v(x+t) = alpha
    Cut c = Cut::principal1(Rat(0), Cut::Side::Right);
    ExtensionValuation m2 =
        monomial_valuation(F3T, f_zero(F3T), gv_alpha(GroupDescriptor{GroupKind::Integers}, c));
    GroupValue v = value_poly(m2, parse_poly(F3T, "x+t"));
    CHECK(v.is_augmented());
    CHECK(v.mult == 1);
    CHECK(gv_to_string(v) == "0+i");
    CHECK(compare(v, gv_int(1)) == Ordering::Less);
    CHECK(compare(v, gv_int(0)) == Ordering::Greater);
}

TEST_CASE("monomial values match the brute-force minimum") {
    Rng rng(61);
    for (const ValuedField& F : {Q2, F3T}) {
        for (int it = 0; it < 100; ++it) {
            FieldElement b = valx::testing::rand_element(F, rng);
            Poly f = valx::testing::rand_poly(F, rng, 8);
            long a = valx::testing::rand_long(rng, -4, 4);
            ExtensionValuation mv = monomial_valuation(F, b, gv_int(a));
            CHECK(compare(value_poly(mv, f), brute_min_value(F, f, b, gv_int(a))) ==
                  Ordering::Equal);
            // augmented alpha as well
            Cut cut = Cut::principal1(make_rat(valx::testing::rand_long(rng, -6, 6),
                                               valx::testing::rand_long(rng, 1, 4)),
                                      valx::testing::rand_long(rng, 0, 1) ? Cut::Side::Left
                                                                          : Cut::Side::Right);
            GroupValue alpha = gv_alpha(GroupDescriptor{GroupKind::Integers}, cut);
            ExtensionValuation ma = monomial_valuation(F, b, alpha);
            GroupValue lhs = value_poly(ma, f);
            GroupValue rhs = brute_min_value(F, f, b, alpha);
            if (lhs.infinite)
                CHECK(rhs.infinite);
            else
                CHECK(compare(lhs, rhs) == Ordering::Equal);
        }
    }
}

TEST_CASE("rational function values and residues under gauss") {
    ExtensionValuation g = gauss_valuation(Q2);
    RatFun r1 = parse_ratfun(Q2, "(x+2)/(x+4)");
    CHECK(compare(value_ratfun(g, r1), gv_int(0)) == Ordering::Equal);
    CHECK(r_eq(residue_ratfun(g, r1), r_one(Q2)));

    RatFun r2 = parse_ratfun(Q2, "x^2+2");
    CHECK(r_eq(residue_ratfun(g, r2), r_shift_y(Q2, r_one(Q2), Int(2)))); // y^2

    RatFun r3 = parse_ratfun(Q2, "(x^2+2)/(x^2+x)");
    ResidueElement want = div(
        Q2, r_shift_y(Q2, r_one(Q2), Int(2)),
        add(Q2, r_shift_y(Q2, r_one(Q2), Int(2)), r_shift_y(Q2, r_one(Q2), Int(1)))); // y^2/(y^2+y)
    CHECK(r_eq(residue_ratfun(g, r3), want));
    // canonical reduced rendering of y^2/(y^2+y)
    CHECK(residue_to_string(Q2, residue_ratfun(g, r3)) == "y/(y+1)");
}

TEST_CASE("residues under a monomial valuation with nonzero alpha") {
    // alpha = 1 over (Q, v_2): y stands for the residue of x/2
    ExtensionValuation m = monomial_valuation(Q2, f_zero(Q2), gv_int(1));
    ResidueElement r = residue_ratfun(m, parse_ratfun(Q2, "x/2"));
    CHECK(r_eq(r, r_shift_y(Q2, r_one(Q2), Int(1))));
    // (x^2+4x)/4 -> y^2 + y... v(x^2) = 2, v(4x) = 3: only the x^2 term survives
    ResidueElement r2 = residue_ratfun(m, parse_ratfun(Q2, "(x^2+4x)/4"));
    CHECK(r_eq(r2, r_shift_y(Q2, r_one(Q2), Int(2))));
    // 2x/(x^2+2x): num value 2; den terms have values 2 and 2: both contribute
    ResidueElement r3 = residue_ratfun(m, parse_ratfun(Q2, "2x/(x^2+2x)"));
    ResidueElement y = r_shift_y(Q2, r_one(Q2), Int(1));
    CHECK(r_eq(r3, div(Q2, y, add(Q2, mul(Q2, y, y), y))));
}

TEST_CASE("residues under a value-transcendental monomial valuation") {
    Cut c = Cut::principal1(Rat(0), Cut::Side::Right);
    ExtensionValuation m =
        monomial_valuation(Q2, f_zero(Q2), gv_alpha(GroupDescriptor{GroupKind::Integers}, c));
    CHECK(r_eq(residue_ratfun(m, parse_ratfun(Q2, "x/x")), r_one(Q2)));
    CHECK_THROWS_AS(residue_ratfun(m, parse_ratfun(Q2, "x/1")), DomainError);
    try {
        residue_ratfun(m, parse_ratfun(Q2, "x"));
    } catch (const DomainError& e) {
        CHECK(e.code() == "NonzeroValue");
    }
}

TEST_CASE("approximation types of valuations") {
    // gauss: residue-extending at (0, 0)
    ApproxType g = approx_type_of(gauss_valuation(Q2));
    CHECK(classify(g) == AtClass::ResidueExtending);
    CHECK(g.delta == 0);
    CHECK(f_is_zero(g.witness));

    Cut c = Cut::principal1(make_rat(3, 2), Cut::Side::Right);
    ApproxType v = approx_type_of(
        monomial_valuation(Q2, f_zero(Q2), gv_alpha(GroupDescriptor{GroupKind::Integers}, c)));
    CHECK(classify(v) == AtClass::ValueExtending);
    LowerSet ls = cut_lower_set_z(v.cut);
    CHECK(ls.kind == LowerSet::Kind::UpTo);
    CHECK(ls.bound == 1);

    ApproxType A = to_approx_type(PcsGenerator::artin_schreier());
    ExtensionValuation lim = limit_valuation(A, false);
    CHECK(at_equals(approx_type_of(lim), A).kind == AtEquality::Kind::Equal);
}

TEST_CASE("realization of approximation types") {
    // residue-extending -> plain monomial
    ExtensionValuation r = realize(at_residue_extending(F3T, f_zero(F3T), Int(1)));
    CHECK(r.kind == ValKind::Monomial);
    CHECK(!r.alpha.is_augmented());
    CHECK(compare(r.alpha, gv_int(1)) == Ordering::Equal);

    // value-extending -> augmented monomial with the same cut
    Cut c = Cut::principal1(Rat(2), Cut::Side::Right);
    ExtensionValuation v = realize(at_value_extending(F3T, parse_element(F3T, "t"), c));
    CHECK(v.alpha.is_augmented());
    CHECK(gv_to_string(v.alpha) == "2+i");

    // immediate without the transcendence declaration
    ApproxType A = to_approx_type(PcsGenerator::artin_schreier());
    CHECK_THROWS_AS(realize(A), DomainError);
    try {
        realize(A);
    } catch (const DomainError& e) {
        CHECK(e.code() == "UnsupportedAlgebraicImmediate");
    }
    CHECK_THROWS_AS(realize(at_trivial(Q2, f_zero(Q2))), DomainError);
    CHECK_THROWS_AS(realize(at_empty(Q2)), DomainError);
}

TEST_CASE("round trip: realize then read the approximation type back") {
    Rng rng(67);
    for (int it = 0; it < 100; ++it) {
        const ValuedField& F = it % 2 ? Q2 : F3T;
        FieldElement b = valx::testing::rand_element(F, rng);
        if (it % 2) {
            Int delta(valx::testing::rand_long(rng, -5, 5));
            ApproxType A = at_residue_extending(F, b, delta);
            ApproxType B = approx_type_of(realize(A));
            CHECK(B.variant == AtVariant::ResidueExtending);
            CHECK(f_eq(A.witness, B.witness));
            CHECK(A.delta == B.delta);
        } else {
            Cut cut = Cut::principal1(make_rat(valx::testing::rand_long(rng, -5, 5),
                                               valx::testing::rand_long(rng, 1, 3)),
                                      valx::testing::rand_long(rng, 0, 1) ? Cut::Side::Left
                                                                          : Cut::Side::Right);
            ApproxType A = at_value_extending(F, b, cut);
            if (classify(A) != AtClass::ValueExtending) continue;
            ApproxType B = approx_type_of(realize(A));
            CHECK(B.variant == AtVariant::ValueExtending);
            CHECK(f_eq(A.witness, B.witness));
            CHECK(A.cut == B.cut);
        }
    }
}

TEST_CASE("classification and purity") {
    ExtensionValuation g = gauss_valuation(Q2);
    CHECK(classify_extension(g) == ExtensionClass::ResidueTranscendental);
    CHECK(is_pure(g));
    CHECK(is_almost_pure(g));

    Cut c = Cut::principal1(Rat(2), Cut::Side::Right);
    ExtensionValuation v =
        monomial_valuation(Q2, f_zero(Q2), gv_alpha(GroupDescriptor{GroupKind::Integers}, c));
    CHECK(classify_extension(v) == ExtensionClass::ValueTranscendental);
    CHECK(is_pure(v));

    // the artin-schreier type is algebraic: detected, not pure, almost pure
    ApproxType A = to_approx_type(PcsGenerator::artin_schreier());
    ExtensionValuation lim = limit_valuation(A, false);
    CHECK(classify_extension(lim) == ExtensionClass::ValuationAlgebraicDetected);
    CHECK(!is_pure(lim));
    CHECK(is_almost_pure(lim)); // completion type: supp = vK

    // a declared-transcendental limit valuation is immediate and pure
    ApproxType T = to_approx_type(PcsGenerator::power_gap(F3T, GapExpr::exp_base(Int(2))));
    ExtensionValuation tl = limit_valuation(T, true);
    CHECK(classify_extension(tl) == ExtensionClass::Immediate);
    CHECK(is_pure(tl));
}

TEST_CASE("abhyankar bound per class") {
    auto contribution = [](ExtensionClass c) {
        switch (c) {
        case ExtensionClass::ValueTranscendental:
            return std::pair<int, int>{1, 0};
        case ExtensionClass::ResidueTranscendental:
            return std::pair<int, int>{0, 1};
        default:
            return std::pair<int, int>{0, 0};
        }
    };
    for (ExtensionClass c :
         {ExtensionClass::ValueTranscendental, ExtensionClass::ResidueTranscendental,
          ExtensionClass::Immediate, ExtensionClass::ValuationAlgebraicDetected}) {
        auto [rr, td] = contribution(c);
        CHECK(rr + td <= 1);
    }
}

TEST_CASE("valuation axioms for extension values") {
    Rng rng(71);
    Cut c = Cut::principal1(make_rat(1, 2), Cut::Side::Left);
    for (const GroupValue& alpha :
         {gv_int(1), gv_alpha(GroupDescriptor{GroupKind::Integers}, c)}) {
        ExtensionValuation v = monomial_valuation(Q2, parse_element(Q2, "2"), alpha);
        for (int it = 0; it < 60; ++it) {
            Poly f = valx::testing::rand_poly(Q2, rng, 5);
            Poly g = valx::testing::rand_poly(Q2, rng, 5);
            GroupValue vf = value_poly(v, f), vg = value_poly(v, g);
            GroupValue vfg = value_poly(v, mul(Q2, f, g));
            if (vf.infinite || vg.infinite)
                CHECK(vfg.infinite);
            else
                CHECK(compare(vfg, add(vf, vg)) == Ordering::Equal);
            GroupValue vsum = value_poly(v, add(Q2, f, g));
            if (!vsum.infinite) {
                GroupValue vmin = vf.infinite ? vg : (vg.infinite || gv_less(vf, vg) ? vf : vg);
                CHECK(!gv_less(vsum, vmin));
            }
        }
    }
}

TEST_CASE("equivalence of monomial valuations") {
    ExtensionValuation a = monomial_valuation(Q2, parse_element(Q2, "2"), gv_int(1));
    ExtensionValuation b = monomial_valuation(Q2, parse_element(Q2, "6"), gv_int(1));
    CHECK(equivalent(a, b).kind == EquivResult::Kind::Equivalent);

    ExtensionValuation c = monomial_valuation(Q2, parse_element(Q2, "0"), gv_int(1));
    ExtensionValuation d = monomial_valuation(Q2, parse_element(Q2, "1"), gv_int(1));
    EquivResult r = equivalent(c, d);
    CHECK(r.kind == EquivResult::Kind::NotEquivalent);
    REQUIRE(r.witness.has_value());
    CHECK(values_distinguishable(value_poly(c, *r.witness), value_poly(d, *r.witness)));
}

TEST_CASE("the two cut sides at 1/2 give equal types but inequivalent valuations") {
    GroupDescriptor z{GroupKind::Integers};
    Cut left = Cut::principal1(make_rat(1, 2), Cut::Side::Left);
    Cut right = Cut::principal1(make_rat(1, 2), Cut::Side::Right);
    ExtensionValuation vl = monomial_valuation(Q2, f_zero(Q2), gv_alpha(z, left));
    ExtensionValuation vr = monomial_valuation(Q2, f_zero(Q2), gv_alpha(z, right));

    CHECK(at_equals(approx_type_of(vl), approx_type_of(vr)).kind == AtEquality::Kind::Equal);

    EquivResult r = equivalent(vl, vr);
    CHECK(r.kind == EquivResult::Kind::NotEquivalent);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->deg() == 2); // x^2 exposes the side against v(2) = 1
    GroupValue wl = value_poly(vl, *r.witness);
    GroupValue wr = value_poly(vr, *r.witness);
    CHECK(compare(wl, gv_int(1)) == Ordering::Less);
    CHECK(compare(wr, gv_int(1)) == Ordering::Greater);
}

TEST_CASE("equivalent valuations assign identical values") {
    Rng rng(73);
    ExtensionValuation a = monomial_valuation(Q2, parse_element(Q2, "2"), gv_int(1));
    ExtensionValuation b = monomial_valuation(Q2, parse_element(Q2, "6"), gv_int(1));
    REQUIRE(equivalent(a, b).kind == EquivResult::Kind::Equivalent);
    for (int it = 0; it < 100; ++it) {
        Poly f = valx::testing::rand_poly(Q2, rng, 6);
        GroupValue va = value_poly(a, f), vb = value_poly(b, f);
        if (va.infinite)
            CHECK(vb.infinite);
        else
            CHECK(compare(va, vb) == Ordering::Equal);
    }
}

TEST_CASE("limit valuations: values and residues are read off the sequence") {
    // provably transcendental gap series over F_3(t)
    ApproxType A = to_approx_type(PcsGenerator::power_gap(F3T, GapExpr::exp_base(Int(2))));
    ExtensionValuation v = limit_valuation(A, true, std::nullopt, 32);

    // values land in v0K = Z and residues of value-0 elements in the base residue field
    Rng rng(79);
    for (int it = 0; it < 25; ++it) {
        Poly f = valx::testing::rand_poly(F3T, rng, 3);
        GroupValue vf = value_poly(v, f);
        if (!vf.infinite) CHECK(!vf.is_augmented());
        if (f.is_zero()) continue;
        RatFun r = rf_make(F3T, f, f); // value 0
        CHECK(r_eq(residue_ratfun(v, r), r_one(F3T)));
    }
    // x - c_3 has value gamma_3 = 8 and x/t^(gamma_0)... check a mixed ratio
    Poly num{{neg(F3T, A.gen->term(2)), f_one(F3T)}}; // x - c_2, value gamma_2 = 4
    Poly den = p_const(F3T, element_of_value(F3T, Int(4)));
    RatFun r = rf_make(F3T, num, den);
    CHECK(compare(value_ratfun(v, r), gv_int(0)) == Ordering::Equal);
    ResidueElement res = residue_ratfun(v, r);
    CHECK(!r_is_zero(res));

    // the artin-schreier declaration is refuted by its minimal polynomial
    ApproxType AS = to_approx_type(PcsGenerator::artin_schreier());
    ExtensionValuation bad = limit_valuation(AS, true, std::nullopt, 16);
    CHECK_THROWS_AS(value_poly(bad, parse_poly(F2T, "x^2+x+t")), DomainError);
    try {
        value_poly(bad, parse_poly(F2T, "x^2+x+t"));
    } catch (const DomainError& e) {
        CHECK(e.code() == "NotActuallyTranscendental");
    }

    // without declaration, a degree bound licenses evaluation below it
    ExtensionValuation bounded = limit_valuation(AS, false, 2, 16);
    CHECK(compare(value_poly(bounded, parse_poly(F2T, "x")), gv_int(1)) == Ordering::Equal);
    CHECK_THROWS_AS(value_poly(bounded, parse_poly(F2T, "x^2+x+t")), DomainError);
}

TEST_CASE("equivalence involving limit valuations") {
    ApproxType A = to_approx_type(PcsGenerator::power_gap(F3T, GapExpr::exp_base(Int(2))));
    ExtensionValuation v1 = limit_valuation(A, true);
    ExtensionValuation v2 = limit_valuation(A, true);
    CHECK(equivalent(v1, v2).kind == EquivResult::Kind::Equivalent);

    ApproxType B = to_approx_type(PcsGenerator::power_gap(F3T, GapExpr::power_of_i(Int(2))));
    CHECK(equivalent(v1, limit_valuation(B, true)).kind == EquivResult::Kind::Undecided);

    // limit vs monomial: witnessed through a deep sequence term
    ExtensionValuation mon = monomial_valuation(F3T, f_zero(F3T), gv_int(1));
    EquivResult r = equivalent(v1, mon);
    CHECK(r.kind == EquivResult::Kind::NotEquivalent);
    REQUIRE(r.witness.has_value());
    CHECK(values_distinguishable(value_poly(v1, *r.witness), value_poly(mon, *r.witness)));
}

TEST_CASE("valuation spec strings") {
    CHECK(valuation_to_string(gauss_valuation(Q2)) == "gauss");
    ExtensionValuation m = parse_valuation(Q2, "monomial:b=2,alpha=1");
    CHECK(valuation_to_string(m) == "monomial:b=2,alpha=1");
    ExtensionValuation c = parse_valuation(Q2, "monomial:b=0,cut=1/2L");
    CHECK(valuation_to_string(c) == "monomial:b=0,cut=1/2L");
    ExtensionValuation l = parse_valuation(F2T, "limit:at:immediate:pcs:artin_schreier");
    CHECK(valuation_to_string(l) == "limit:at:immediate:pcs:artin_schreier");
}
