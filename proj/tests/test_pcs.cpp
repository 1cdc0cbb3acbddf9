#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "valx/approx_type.hpp"
#include "valx/pcs.hpp"
#include "valx/specs.hpp"

using namespace valx;

namespace {

const ValuedField F2T{FieldKind::FpRationalFunctions, 2};
const ValuedField F3T{FieldKind::FpRationalFunctions, 3};

std::vector<Int> gamma_ints(const Pcs& g, long n) {
    std::vector<Int> out;
    for (const GroupValue& v : g->gamma_prefix(n)) out.push_back(v.coords[0].get_num());
    return out;
}

} // namespace

TEST_CASE("artin-schreier gammas double") {
    Pcs g = PcsGenerator::artin_schreier();
    CHECK(gamma_ints(g, 4) == std::vector<Int>{Int(1), Int(2), Int(4), Int(8)});
    CHECK(f_eq(g->term(0), f_zero(F2T)));
    CHECK(f_eq(g->term(1), parse_element(F2T, "t")));
    CHECK(f_eq(g->term(3), parse_element(F2T, "t + t^2 + t^4")));
}

TEST_CASE("power gap sequences") {
    Pcs g = PcsGenerator::power_gap(F3T, GapExpr::affine(Int(1), Int(1)));
    CHECK(gamma_ints(g, 3) == std::vector<Int>{Int(1), Int(2), Int(3)});
    Pcs h = PcsGenerator::power_gap(F3T, GapExpr::exp_base(Int(2)));
    CHECK(gamma_ints(h, 3) == std::vector<Int>{Int(1), Int(2), Int(4)});
    Pcs q = PcsGenerator::power_gap(ValuedField{FieldKind::PAdicRationals, 2},
                                    GapExpr::affine(Int(1), Int(0)));
    CHECK(f_eq(q->term(3), parse_element(ValuedField{FieldKind::PAdicRationals, 2}, "7")));
}

TEST_CASE("non pseudo-cauchy explicit list is rejected") {
    std::vector<FieldElement> terms = {parse_element(F2T, "0"), parse_element(F2T, "1"),
                                       parse_element(F2T, "1")};
    Pcs g = PcsGenerator::explicit_terms(F2T, terms);
    CHECK_THROWS_WITH_AS(g->gamma_prefix(2), doctest::Contains("repeated term"), DomainError);

    std::vector<FieldElement> bad = {parse_element(F2T, "1"), parse_element(F2T, "t"),
                                     parse_element(F2T, "t+1")};
    // gamma_0 = v(t-1) = 0, gamma_1 = v(1) = 0: not strictly increasing
    Pcs h = PcsGenerator::explicit_terms(F2T, bad);
    CHECK_THROWS_WITH_AS(h->gamma_prefix(2), doctest::Contains("strictly increasing"),
                         DomainError);
}

TEST_CASE("limit prefix checks") {
    Pcs g = PcsGenerator::artin_schreier();
    CHECK(is_limit_prefix(g, g->term(5), 3));
    CHECK(!is_limit_prefix(g, f_zero(F2T), 2));
    CHECK(is_limit_prefix(g, g->term(0), 0));
}

TEST_CASE("gamma law holds exactly on validated prefixes") {
    Pcs g = PcsGenerator::power_gap(F3T, GapExpr::power_of_i(Int(2)));
    long n = 12;
    g->gamma_prefix(n);
    for (long mu = 0; mu < n; ++mu)
        for (long nu = mu + 1; nu <= n; ++nu) {
            GroupValue d = value(F3T, sub(F3T, g->term(nu), g->term(mu)));
            CHECK(compare(d, gv_int(g->gamma_int(mu))) == Ordering::Equal);
        }
}

TEST_CASE("term values are strictly increasing or ultimately constant") {
    for (Pcs g : {PcsGenerator::artin_schreier(),
                  PcsGenerator::power_gap(F3T, GapExpr::affine(Int(2), Int(1)))}) {
        const ValuedField& F = g->field();
        std::vector<GroupValue> vals;
        for (long nu = 0; nu <= 10; ++nu) vals.push_back(value(F, g->term(nu)));
        long first_stop = -1;
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            if (compare(vals[i + 1], vals[i]) != Ordering::Greater) {
                first_stop = static_cast<long>(i);
                break;
            }
        }
        if (first_stop >= 0) {
            // once the increase stops, the value sequence is constant
            for (size_t i = static_cast<size_t>(first_stop) + 1; i + 1 < vals.size(); ++i)
                CHECK(compare(vals[i + 1], vals[i]) == Ordering::Equal);
        }
    }
}

TEST_CASE("association with approximation types") {
    Pcs g = PcsGenerator::artin_schreier();
    ApproxType A = to_approx_type(g);
    CHECK(classify(A) == AtClass::Immediate);
    // supp = Z: the gammas are unbounded
    CHECK(supp_contains(A, gv_int(1000)));
    // A_{gamma_nu} = B_{gamma_nu}(c_nu) at every prefix radius
    for (long nu = 0; nu < 6; ++nu) {
        Int gnu = g->gamma_int(nu);
        CHECK(at_member(A, g->term(nu), gv_int(gnu), BallKind::Closed));
        // anything at distance exactly gamma_nu from c_nu stays inside
        FieldElement a = add(F2T, g->term(nu), element_of_value(F2T, gnu));
        CHECK(at_member(A, a, gv_int(gnu), BallKind::Closed));
        // and an element too far from c_nu is outside
        FieldElement far = add(F2T, g->term(nu), element_of_value(F2T, gnu - 1));
        CHECK(!at_member(A, far, gv_int(gnu), BallKind::Closed));
    }
}

TEST_CASE("to_approx_type requires the limitless declaration") {
    std::vector<FieldElement> terms = {parse_element(F2T, "0"), parse_element(F2T, "t"),
                                       parse_element(F2T, "t+t^2")};
    Pcs g = PcsGenerator::explicit_terms(F2T, terms, /*declared_limitless=*/false);
    CHECK_THROWS_AS(to_approx_type(g), DomainError);
    try {
        to_approx_type(g);
    } catch (const DomainError& e) {
        CHECK(e.code() == "LimitInK");
    }
}

TEST_CASE("round trip through approximation types") {
    Pcs g = PcsGenerator::artin_schreier();
    ApproxType A = to_approx_type(g);
    Pcs h = from_approx_type(A);
    CHECK(gamma_ints(h, 5) == std::vector<Int>{Int(1), Int(2), Int(4), Int(8), Int(16)});
    ApproxType B = to_approx_type(h);
    // same balls at all prefix radii
    for (long nu = 0; nu < 6; ++nu) {
        Int gnu = g->gamma_int(nu);
        CHECK(at_member(B, g->term(nu), gv_int(gnu), BallKind::Closed));
        CHECK(at_member(A, h->term(nu), gv_int(h->gamma_int(nu)), BallKind::Closed));
    }
    // non-immediate types are not associated with sequences
    ApproxType re = at_residue_extending(F2T, f_zero(F2T), Int(1));
    CHECK_THROWS_AS(from_approx_type(re), DomainError);
}

TEST_CASE("pcs spec strings") {
    CHECK(parse_pcs(F2T, "pcs:artin_schreier")->spec_string() == "pcs:artin_schreier");
    CHECK(parse_pcs(F3T, "pcs:powergap:e=i^2")->spec_string() == "pcs:powergap:e=i^2");
    CHECK(parse_pcs(F3T, "pcs:powergap:e=2^i")->spec_string() == "pcs:powergap:e=2^i");
    CHECK(parse_pcs(F3T, "pcs:powergap:e=i+1")->spec_string() == "pcs:powergap:e=i+1");
    CHECK_THROWS_AS(parse_pcs(F3T, "pcs:artin_schreier"), ParseError); // wrong field
}
