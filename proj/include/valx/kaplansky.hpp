#pragma once

#include <vector>

#include "valx/approx_type.hpp"
#include "valx/poly.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Fixed-value decision machinery for polynomials against immediate
// approximation types: the Ostrowski pivot over ordered groups, fixed
// derivative values, and certified Fixed/NotFixed verdicts.
// ---------------------------------------------------------------------------

struct OstPair {
    GroupValue alpha; // finite plain value
    Int t;            // pairwise distinct integers
};

struct OstResult {
    GroupValue beta;           // least Upsilon element past every crossing point
    std::vector<size_t> order; // sigma: order[0] is the strictly largest term for gamma >= beta
};

/// Permutation sigma and threshold beta with
///   alpha_{sigma(1)} + t_{sigma(1)}*gamma > ... > alpha_{sigma(m)} + t_{sigma(m)}*gamma
/// for every gamma >= beta in Upsilon. Upsilon is given by the cut whose lower
/// set it is and must have no maximal element (over vK = Z that means the
/// above-all cut); otherwise UpsilonBoundedAbove. With no crossing points any
/// beta works; the canonical anchor 0 is returned.
OstResult ost_pivot(const std::vector<OstPair>& pairs, const Cut& upsilon);

/// Fixed derivative values of f against A, with the pivot index h and the
/// threshold past which beta_h + h*gamma is the strict minimum of all
/// beta_i + i*gamma over the support.
struct PivotData {
    std::vector<GroupValue> betas; // beta_1..beta_n; infinite for vanishing derivatives
    long h = 0;
    GroupValue ost_threshold;
};

/// Computes the beta_i = v d_i f(c) for c deep in A and the pivot; requires
/// every derivative value to be fixed (AssertionViolated otherwise).
PivotData derivative_pivot(const ValuedField& F, const Poly& f, const ApproxType& A, long budget);

enum class FixedVerdict { Fixed, NotFixed, Undecided };

/// Certified decision for one polynomial f against an immediate A.
///   Fixed:    v f(c_nu) = value and pivot_base + pivot*gamma_nu > value for
///             every nu >= threshold in the validated prefix (and beyond: the
///             pivot equation seals the value).
///   NotFixed: v f(c_nu) = pivot_base + pivot*gamma_nu at every index
///             threshold <= nu <= prefix_end of the validated prefix.
struct FixedReport {
    FixedVerdict verdict = FixedVerdict::Undecided;
    GroupValue value;         // Fixed only (may be infinite for the zero polynomial)
    long threshold = 0;       // nu*
    long pivot = 0;           // h, 1 <= h <= deg f
    GroupValue pivot_base;    // beta_h
    long witness_degree = -1; // NotFixed: degree of the unfixed polynomial (a
                              // derivative's degree when f itself is non-minimal evidence)
    long prefix_end = 0;      // NotFixed: last scanned index
};

/// Decide whether A fixes the value of f (deg f >= 1), recursing through the
/// Hasse-Schmidt derivatives. A NotFixed verdict for a derivative propagates,
/// flagging f as non-minimal evidence via witness_degree.
FixedReport check_fixed(const ValuedField& F, const Poly& f, const ApproxType& A, long budget);

/// The fixed value of g under the caller's assertion deg g < d_known (the
/// degree of A); AssertionViolated when the certificate refutes it.
GroupValue fixed_linear_values(const ValuedField& F, const ApproxType& A, const Poly& g,
                               long d_known, long budget);

} // namespace valx
