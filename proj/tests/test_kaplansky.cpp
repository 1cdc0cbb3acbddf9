#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "valx/kaplansky.hpp"
#include "valx/specs.hpp"

using namespace valx;
using valx::testing::Rng;

namespace {

const ValuedField F2T{FieldKind::FpRationalFunctions, 2};

ApproxType artin_schreier_at() { return to_approx_type(PcsGenerator::artin_schreier()); }

} // namespace

TEST_CASE("ostrowski pivot: worked instances") {
    // {(0,1), (3,2)}: crossing at -3, beta = -2, descending order (3+2g, 0+g)
    OstResult r = ost_pivot({OstPair{gv_int(0), Int(1)}, OstPair{gv_int(3), Int(2)}},
                            Cut::above_all());
    CHECK(compare(r.beta, gv_int(-2)) == Ordering::Equal);
    REQUIRE(r.order.size() == 2);
    CHECK(r.order[0] == 1);
    CHECK(r.order[1] == 0);

    // single pair: canonical anchor
    OstResult s = ost_pivot({OstPair{gv_int(0), Int(1)}}, Cut::above_all());
    CHECK(compare(s.beta, gv_int(0)) == Ordering::Equal);
    CHECK(s.order == std::vector<size_t>{0});

    // {(0,1), (0,2)}: crossing at 0, strictly ordered for gamma >= 1
    OstResult u = ost_pivot({OstPair{gv_int(0), Int(1)}, OstPair{gv_int(0), Int(2)}},
                            Cut::above_all());
    CHECK(compare(u.beta, gv_int(1)) == Ordering::Equal);
    CHECK(u.order[0] == 1);

    CHECK_THROWS_AS(ost_pivot({OstPair{gv_int(0), Int(1)}},
                              Cut::principal1(Rat(5), Cut::Side::Right)),
                    DomainError);
}

TEST_CASE("ostrowski pivot: random instances give strict descending chains") {
    Rng rng(23);
    for (int it = 0; it < 100; ++it) {
        long m = valx::testing::rand_long(rng, 1, 5);
        std::vector<OstPair> pairs;
        std::vector<long> used;
        for (long i = 0; i < m; ++i) {
            long t;
            do {
                t = valx::testing::rand_long(rng, -6, 6);
            } while (std::find(used.begin(), used.end(), t) != used.end());
            used.push_back(t);
            pairs.push_back(OstPair{gv_int(valx::testing::rand_long(rng, -20, 20)), Int(t)});
        }
        OstResult r = ost_pivot(pairs, Cut::above_all());
        Int beta = r.beta.coords[0].get_num();
        for (int probe = 0; probe < 20; ++probe) {
            Int gamma = beta + valx::testing::rand_long(rng, 0, 30);
            for (size_t k = 0; k + 1 < r.order.size(); ++k) {
                GroupValue lhs = add(pairs[r.order[k]].alpha,
                                     gv_scale(gv_int(gamma), pairs[r.order[k]].t));
                GroupValue rhs = add(pairs[r.order[k + 1]].alpha,
                                     gv_scale(gv_int(gamma), pairs[r.order[k + 1]].t));
                CHECK(compare(lhs, rhs) == Ordering::Greater);
            }
        }
    }
}

TEST_CASE("x^2 + x + t is not fixed by the artin-schreier type") {
    ApproxType A = artin_schreier_at();
    Poly f = parse_poly(F2T, "x^2 + x + t");
    FixedReport rep = check_fixed(F2T, f, A, 12);
    CHECK(rep.verdict == FixedVerdict::NotFixed);
    CHECK(rep.pivot == 1);
    CHECK(compare(rep.pivot_base, gv_int(0)) == Ordering::Equal);
    CHECK(rep.witness_degree == 2);
    // v f(c_nu) = 2^nu exactly on the certificate range
    for (long nu = rep.threshold; nu <= rep.prefix_end; ++nu) {
        GroupValue w = value(F2T, p_eval(F2T, f, A.gen->term(nu)));
        CHECK(compare(w, gv_int(pow_int(Int(2), static_cast<unsigned long>(nu)))) ==
              Ordering::Equal);
    }
}

TEST_CASE("linear polynomials are fixed") {
    ApproxType A = artin_schreier_at();
    FixedReport rep = check_fixed(F2T, parse_poly(F2T, "x"), A, 16);
    CHECK(rep.verdict == FixedVerdict::Fixed);
    CHECK(compare(rep.value, gv_int(1)) == Ordering::Equal);

    // x - c_3 deviates from the pivot line at nu = 3 and fixes at gamma_3 = 8
    Poly f{{neg(F2T, A.gen->term(3)), f_one(F2T)}};
    FixedReport rep3 = check_fixed(F2T, f, A, 16);
    CHECK(rep3.verdict == FixedVerdict::Fixed);
    CHECK(compare(rep3.value, gv_int(8)) == Ordering::Equal);
    for (long nu = rep3.threshold; nu <= rep3.threshold + 4; ++nu) {
        CHECK(compare(value(F2T, p_eval(F2T, f, A.gen->term(nu))), gv_int(8)) == Ordering::Equal);
        GroupValue line = add(rep3.pivot_base,
                              gv_scale(gv_int(A.gen->gamma_int(nu)), Int(rep3.pivot)));
        CHECK(gv_less(rep3.value, line)); // certificate inequality
    }
}

TEST_CASE("fixed linear values") {
    ApproxType A = artin_schreier_at();
    CHECK(compare(fixed_linear_values(F2T, A, parse_poly(F2T, "x"), 2, 16), gv_int(1)) ==
          Ordering::Equal);
    CHECK(compare(fixed_linear_values(F2T, A, parse_poly(F2T, "x + 1/t"), 2, 16), gv_int(-1)) ==
          Ordering::Equal);
    CHECK(compare(fixed_linear_values(F2T, A, parse_poly(F2T, "1"), 2, 16), gv_int(0)) ==
          Ordering::Equal);
    // degree assertion violated by the associated minimal polynomial
    CHECK_THROWS_AS(fixed_linear_values(F2T, A, parse_poly(F2T, "x^2+x+t"), 3, 16), DomainError);
    try {
        fixed_linear_values(F2T, A, parse_poly(F2T, "x^2+x+t"), 3, 16);
    } catch (const DomainError& e) {
        CHECK(e.code() == "AssertionViolated");
    }
}

TEST_CASE("fixed certificates re-verify past the threshold") {
    ApproxType A = artin_schreier_at();
    Rng rng(41);
    for (int it = 0; it < 20; ++it) {
        // random monic linear polynomial
        Poly f{{valx::testing::rand_element(F2T, rng), f_one(F2T)}};
        if (f.deg() != 1) continue;
        FixedReport rep = check_fixed(F2T, f, A, 24);
        REQUIRE(rep.verdict == FixedVerdict::Fixed);
        for (long nu = rep.threshold; nu <= rep.threshold + 4; ++nu) {
            CHECK(compare(value(F2T, p_eval(F2T, f, A.gen->term(nu))), rep.value) ==
                  Ordering::Equal);
            GroupValue line =
                add(rep.pivot_base, gv_scale(gv_int(A.gen->gamma_int(nu)), Int(rep.pivot)));
            CHECK(gv_less(rep.value, line));
        }
    }
}

TEST_CASE("pivot term is the strict minimum past the threshold") {
    ApproxType A = artin_schreier_at();
    Rng rng(47);
    // derivative pivots of random polynomials with fixed derivative values
    for (int it = 0; it < 12; ++it) {
        Poly f = valx::testing::rand_poly(F2T, rng, 4);
        if (f.deg() < 1) continue;
        PivotData pd;
        try {
            pd = derivative_pivot(F2T, f, A, 24);
        } catch (const DomainError&) {
            continue; // a derivative with unfixed value: not this test's subject
        }
        REQUIRE(pd.betas.size() == static_cast<size_t>(f.deg()));
        Int floor_g = pd.ost_threshold.coords[0].get_num();
        for (int probe = 0; probe < 50; ++probe) {
            Int gamma = floor_g + valx::testing::rand_long(rng, 0, 1000);
            GroupValue pivot_term = add(pd.betas[static_cast<size_t>(pd.h - 1)],
                                        gv_scale(gv_int(gamma), Int(pd.h)));
            for (long i = 1; i <= f.deg(); ++i) {
                if (i == pd.h) continue;
                const GroupValue& beta = pd.betas[static_cast<size_t>(i - 1)];
                if (beta.infinite) continue;
                CHECK(gv_less(pivot_term, add(beta, gv_scale(gv_int(gamma), Int(i)))));
            }
        }
    }
    // the worked instance: x^2 + x + t has beta_1 = beta_2 = 0 and pivot 1
    PivotData pd = derivative_pivot(F2T, parse_poly(F2T, "x^2+x+t"), A, 16);
    CHECK(pd.h == 1);
    CHECK(compare(pd.betas[0], gv_int(0)) == Ordering::Equal);
    CHECK(compare(pd.betas[1], gv_int(0)) == Ordering::Equal);
    // x^2 over F_2(t): the first derivative vanishes identically
    PivotData pd2 = derivative_pivot(F2T, parse_poly(F2T, "x^2"), A, 16);
    CHECK(pd2.betas[0].infinite);
    CHECK(pd2.h == 2);
}

TEST_CASE("every monic linear polynomial is fixed while the minimal degree is 2") {
    ApproxType A = artin_schreier_at();
    Rng rng(53);
    for (int it = 0; it < 10; ++it) {
        Poly lin{{valx::testing::rand_element(F2T, rng), f_one(F2T)}};
        CHECK(check_fixed(F2T, lin, A, 24).verdict == FixedVerdict::Fixed);
    }
    CHECK(check_fixed(F2T, parse_poly(F2T, "x^2+x+t"), A, 12).verdict == FixedVerdict::NotFixed);
}

TEST_CASE("undecided on too small a budget") {
    ApproxType A = artin_schreier_at();
    // explicit truncation: a 3-term explicit prefix cannot decide x^2+x+t
    std::vector<FieldElement> terms = {A.gen->term(0), A.gen->term(1), A.gen->term(2)};
    Pcs g = PcsGenerator::explicit_terms(F2T, terms, /*declared_limitless=*/true);
    ApproxType B = to_approx_type(g);
    FixedReport rep = check_fixed(F2T, parse_poly(F2T, "x^2+x+t"), B, 64);
    CHECK(rep.verdict != FixedVerdict::Fixed);
}
