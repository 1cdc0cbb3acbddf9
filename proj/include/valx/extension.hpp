#pragma once

#include <optional>
#include <string>

#include "valx/approx_type.hpp"
#include "valx/kaplansky.hpp"
#include "valx/poly.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Valuations on K(x) extending the base valuation: monomial valuations
// v(sum c_i (x-b)^i) = min v0(c_i) + i*alpha with alpha in vK or realizing a
// cut, and limit valuations read off an immediate approximation type through
// the fixed-value machinery.
// ---------------------------------------------------------------------------

enum class ValKind { Monomial, LimitImmediate };

struct ExtensionValuation {
    ValuedField field;
    ValKind kind = ValKind::Monomial;
    // Monomial
    FieldElement center; // b
    GroupValue alpha;    // plain delta in vK, or augmented (non-torsion by construction)
    // LimitImmediate
    ApproxType at;
    bool declared_transcendental = false;
    std::optional<long> degree_bound; // licence to evaluate below this degree
    long budget = kDefaultBudget;
};

ExtensionValuation gauss_valuation(const ValuedField& F);
ExtensionValuation monomial_valuation(const ValuedField& F, const FieldElement& b,
                                      const GroupValue& alpha);
ExtensionValuation limit_valuation(const ApproxType& A, bool declared_transcendental,
                                   std::optional<long> degree_bound = std::nullopt,
                                   long budget = kDefaultBudget);

/// Value of a polynomial in x. Monomial: exact minimum over shifted monomials.
/// LimitImmediate: the fixed value; a NotFixed certificate refutes the
/// transcendence declaration (NotActuallyTranscendental with the witness).
GroupValue value_poly(const ExtensionValuation& v, const Poly& f);
GroupValue value_ratfun(const ExtensionValuation& v, const RatFun& r);

/// Residue of a value-0 rational function: an element of Kv0(y) for monomial
/// valuations with alpha in vK (y the residue of d(x-b), v0(d) = -alpha), a
/// constant for value-transcendental ones, and the stabilized base-field
/// residue for limit valuations.
ResidueElement residue_ratfun(const ExtensionValuation& v, const RatFun& r);

/// The approximation type of x under v; exact, no truncation.
ApproxType approx_type_of(const ExtensionValuation& v);

/// The extension realizing a non-trivial, non-empty approximation type.
/// Immediate types additionally need the transcendence declaration;
/// constructing K(a) for algebraic completion types is out of reach here.
ExtensionValuation realize(const ApproxType& A, bool declared_transcendental = false,
                           std::optional<long> degree_bound = std::nullopt,
                           long budget = kDefaultBudget);

enum class ExtensionClass { Immediate, ValueTranscendental, ResidueTranscendental,
                            ValuationAlgebraicDetected };

ExtensionClass classify_extension(const ExtensionValuation& v);
bool is_pure(const ExtensionValuation& v);
/// Pure, or an algebraic completion type (supp = vK read off the generator's
/// cofinality; BudgetExhausted when that cannot be certified).
bool is_almost_pure(const ExtensionValuation& v);

struct EquivResult {
    enum class Kind { Equivalent, NotEquivalent, Undecided } kind = Kind::Undecided;
    std::optional<Poly> witness; // NotEquivalent: polynomial with differing values
};

/// Decision rule: plain monomials are equivalent iff alpha_1 = alpha_2 = delta
/// and v(b1-b2) >= delta; augmented ones iff the cuts induced by alpha_1 and
/// alpha_2 coincide as representations (same point and side, or the same
/// boundary) and v(b1-b2) strictly exceeds the lower set. Limit pairs are
/// decided only for identical presentations.
EquivResult equivalent(const ExtensionValuation& v1, const ExtensionValuation& v2,
                       long sample_budget = kDefaultBudget);

/// Cut induced in vK by an augmented value (folds base and multiplicity into
/// the cut point; negative multiplicity flips the side).
Cut induced_cut(const GroupValue& alpha);

/// Exact separation of two extension values that may live in different
/// augmented groups: true when they provably differ (different plain parts,
/// different augmentedness, or opposite infinitesimal/boundary directions).
bool values_distinguishable(const GroupValue& a, const GroupValue& b);

std::string valuation_to_string(const ExtensionValuation& v);

} // namespace valx
