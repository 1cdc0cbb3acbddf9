#include "valx/kaplansky.hpp"

#include <algorithm>

namespace valx {

OstResult ost_pivot(const std::vector<OstPair>& pairs, const Cut& upsilon) {
    if (upsilon.kind != Cut::Kind::AboveAll)
        throw_domain("UpsilonBoundedAbove",
                     "the pivot needs an Upsilon without maximal element; over vK = Z only the "
                     "above-all cut qualifies");
    if (pairs.empty()) throw_domain("UpsilonBoundedAbove", "no finite terms to order");
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].alpha.infinite || pairs[i].alpha.is_augmented())
            throw_domain("UnsupportedCut", "pivot terms must be finite plain values");
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].t == pairs[j].t)
                throw_domain("UnsupportedCut", "pivot multipliers must be pairwise distinct");
    }
    // for gamma past every crossing (alpha_i - alpha_j)/(t_j - t_i), the term
    // with the larger multiplier dominates
    std::vector<size_t> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return pairs[i].t > pairs[j].t; });

    bool have_cross = false;
    Rat max_cross;
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            Rat cross = (pairs[i].alpha.coords[0] - pairs[j].alpha.coords[0]) /
                        Rat(pairs[j].t - pairs[i].t);
            if (!have_cross || cross > max_cross) {
                max_cross = cross;
                have_cross = true;
            }
        }
    }
    if (!have_cross) return OstResult{gv_int(0), order};
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), max_cross.get_num().get_mpz_t(), max_cross.get_den().get_mpz_t());
    return OstResult{gv_int(fl + 1), order}; // least integer strictly above every crossing
}

namespace {

struct LevelReport {
    FixedReport rep;
    long degree = -1; // degree of this derivative level
};

/// Reports for every Hasse-Schmidt derivative level d_k f, k = deg f .. 0.
/// Level k uses v(d_i d_k f) = v(binom(k+i, i)) + value(level k+i), so each
/// level is scanned at most once.
class FixedSolver {
public:
    FixedSolver(const ValuedField& F, const Poly& f, const ApproxType& A, long budget)
        : F_(F), A_(A), budget_(budget), n_(f.deg()) {
        levels_.resize(static_cast<size_t>(n_) + 1);
        for (long k = 0; k <= n_; ++k) derivs_.push_back(hasse_derivative(F_, f, k));
    }

    FixedReport solve() {
        try {
            for (long k = n_; k >= 0; --k) levels_[static_cast<size_t>(k)] = solve_level(k);
            return levels_[0].rep;
        } catch (const DomainError& e) {
            if (e.code() != "BudgetExhausted") throw;
            FixedReport rep;
            rep.verdict = FixedVerdict::Undecided;
            return rep;
        }
    }

private:
    LevelReport solve_level(long k) {
        const Poly& g = derivs_[static_cast<size_t>(k)];
        LevelReport out;
        out.degree = g.deg();
        if (g.deg() <= 0) {
            // constants are trivially fixed, the zero polynomial with value infinity
            out.rep.verdict = FixedVerdict::Fixed;
            out.rep.value = g.is_zero() ? gv_infinity() : value(F_, g.c[0]);
            out.rep.threshold = 0;
            return out;
        }
        // fixed values of this level's derivatives, via the composition law
        std::vector<OstPair> pairs;
        std::vector<long> thresholds;
        for (long i = 1; i <= g.deg(); ++i) {
            const LevelReport& up = levels_[static_cast<size_t>(k + i)];
            if (up.rep.verdict == FixedVerdict::NotFixed) {
                out.rep = up.rep; // propagated: f is non-minimal evidence
                return out;
            }
            if (up.rep.verdict == FixedVerdict::Undecided) {
                out.rep = up.rep;
                return out;
            }
            FieldElement binom_f =
                f_from_int(F_, binomial(static_cast<unsigned long>(k + i), static_cast<unsigned long>(i)));
            if (f_is_zero(binom_f) || up.rep.value.infinite) continue; // beta_i = infinity
            GroupValue beta = add(value(F_, binom_f), up.rep.value);
            pairs.push_back(OstPair{beta, Int(i)});
            thresholds.push_back(up.rep.threshold);
        }
        // the top derivative is a nonzero constant, so at least one finite pair exists
        OstResult ost = ost_pivot(pairs, Cut::above_all());
        const OstPair& pivot_pair = pairs[ost.order.back()];
        long h = to_long(pivot_pair.t);
        const GroupValue& beta_h = pivot_pair.alpha;

        long nu_star = A_.gen->index_of_radius(gv_as_int(ost.beta), budget_);
        for (long t : thresholds) nu_star = std::max(nu_star, t);

        out.rep.pivot = h;
        out.rep.pivot_base = beta_h;
        out.rep.threshold = nu_star;
        long last = budget_;
        if (A_.gen->max_term_index() != LONG_MAX)
            last = std::min(budget_, A_.gen->max_term_index() - 1);
        long hits = 0;
        for (long nu = nu_star; nu <= last; ++nu) {
            GroupValue w = value(F_, p_eval(F_, g, A_.gen->term(nu)));
            GroupValue line = add(beta_h, gv_scale(gv_int(A_.gen->gamma_int(nu)), Int(h)));
            Ordering c = compare(w, line);
            if (c == Ordering::Less) {
                // v(g(c_mu) - g(c_nu)) = line_nu > w for mu > nu: value sealed
                out.rep.verdict = FixedVerdict::Fixed;
                out.rep.value = w;
                out.rep.threshold = nu;
                return out;
            }
            if (c == Ordering::Greater) {
                // g(c_mu) = g(c_nu) + (difference of value line_nu < w): sealed at line_nu
                out.rep.verdict = FixedVerdict::Fixed;
                out.rep.value = line;
                out.rep.threshold = nu + 1;
                return out;
            }
            ++hits;
        }
        if (hits >= 2) {
            // the value rides the strictly increasing pivot line on the whole
            // validated prefix: not fixed, with the prefix as certificate
            out.rep.verdict = FixedVerdict::NotFixed;
            out.rep.witness_degree = g.deg();
            out.rep.prefix_end = last;
            return out;
        }
        out.rep.verdict = FixedVerdict::Undecided;
        return out;
    }

    static Int gv_as_int(const GroupValue& g) {
        return g.coords[0].get_num(); // beta from ost_pivot is integral
    }

    const ValuedField& F_;
    const ApproxType& A_;
    long budget_;
    long n_;
    std::vector<Poly> derivs_;
    std::vector<LevelReport> levels_;
};

} // namespace

PivotData derivative_pivot(const ValuedField& F, const Poly& f, const ApproxType& A, long budget) {
    if (f.deg() < 1) throw_domain("UnsupportedCut", "derivative pivot needs deg f >= 1");
    PivotData out;
    std::vector<OstPair> pairs;
    for (long i = 1; i <= f.deg(); ++i) {
        Poly di = hasse_derivative(F, f, i);
        GroupValue beta;
        if (di.is_zero()) {
            beta = gv_infinity();
        } else if (di.deg() == 0) {
            beta = value(F, di.c[0]);
        } else {
            FixedReport rep = check_fixed(F, di, A, budget);
            if (rep.verdict == FixedVerdict::NotFixed)
                throw_domain("AssertionViolated",
                             "derivative value not fixed at degree " +
                                 std::to_string(rep.witness_degree));
            if (rep.verdict == FixedVerdict::Undecided)
                throw_domain("BudgetExhausted", "derivative value undecided within budget");
            beta = rep.value;
        }
        out.betas.push_back(beta);
        if (!beta.infinite) pairs.push_back(OstPair{beta, Int(i)});
    }
    OstResult ost = ost_pivot(pairs, Cut::above_all());
    out.h = to_long(pairs[ost.order.back()].t);
    out.ost_threshold = ost.beta;
    return out;
}

FixedReport check_fixed(const ValuedField& F, const Poly& f, const ApproxType& A, long budget) {
    if (A.variant != AtVariant::ImmediateFromPcs)
        throw_domain("NotImmediate", "check_fixed needs an immediate approximation type with a "
                                     "presenting sequence");
    if (f.deg() < 1) throw_domain("UnsupportedCut", "check_fixed needs deg f >= 1");
    if (!(A.field == F)) throw_domain("MixedDescriptors", "polynomial and type over different fields");
    return FixedSolver(F, f, A, budget).solve();
}

GroupValue fixed_linear_values(const ValuedField& F, const ApproxType& A, const Poly& g,
                               long d_known, long budget) {
    if (g.deg() >= d_known)
        throw_domain("AssertionViolated", "polynomial degree is not below the asserted degree bound");
    if (g.deg() < 1) return g.is_zero() ? gv_infinity() : value(F, g.c[0]);
    FixedReport rep = check_fixed(F, g, A, budget);
    switch (rep.verdict) {
    case FixedVerdict::Fixed:
        return rep.value;
    case FixedVerdict::NotFixed:
        throw_domain("AssertionViolated",
                     "value not fixed at degree " + std::to_string(rep.witness_degree) +
                         ", contradicting the asserted degree bound");
    case FixedVerdict::Undecided:
        throw_domain("BudgetExhausted", "undecided within budget");
    }
    throw_domain("UnsupportedCut", "unreachable");
}

} // namespace valx
