#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valx/balls.hpp"
#include "valx/pcs.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Finitely presented approximation types over (K, v): full nests of balls
// given by one of five presentations. Membership, support, classification,
// equality and finite-fragment realization are all decided from the
// presentation, never from materialized nests.
// ---------------------------------------------------------------------------

inline constexpr long kDefaultBudget = 64;

enum class AtVariant { Trivial, Empty, ValueExtending, ResidueExtending, ImmediateFromPcs };

struct ApproxType {
    ValuedField field;
    AtVariant variant = AtVariant::Empty;
    FieldElement witness; // c for Trivial, b for Value/ResidueExtending
    Cut cut;              // ValueExtending: balls at every radius in the lower set
    Int delta;            // ResidueExtending: max of supp, open ball there empty
    Pcs gen;              // ImmediateFromPcs
};

ApproxType at_trivial(const ValuedField& F, const FieldElement& c);
ApproxType at_empty(const ValuedField& F);
ApproxType at_value_extending(const ValuedField& F, const FieldElement& b, const Cut& cut);
ApproxType at_residue_extending(const ValuedField& F, const FieldElement& b, const Int& delta);

/// Immediate AT associated with the sequence (LimitInK unless the generator
/// is declared limitless). Its ball at any radius <= gamma_nu is B(c_nu).
ApproxType to_approx_type(const Pcs& g);

/// A pseudo Cauchy sequence associated with an immediate AT, following the
/// canonical picking strategy (ball centers). NotImmediate otherwise.
Pcs from_approx_type(const ApproxType& A);

/// Mutually exclusive classification; a value-extending cut with empty lower
/// set is the empty approximation type and classifies as Empty.
enum class AtClass { Trivial, Empty, Immediate, ValueExtending, ResidueExtending };
AtClass classify(const ApproxType& A);

bool supp_contains(const ApproxType& A, const GroupValue& gamma, long budget = kDefaultBudget);
/// Cut of vK whose lower set is supp(A) \ {infinity}.
Cut supp_cut(const ApproxType& A);

/// Ball membership c in A_gamma (closed) or A°_gamma (open). OutOfSupport for
/// closed radii beyond the support; empty open balls answer false.
bool at_member(const ApproxType& A, const FieldElement& c, const GroupValue& gamma, BallKind kind,
               long budget = kDefaultBudget);

struct AtEquality {
    enum class Kind { Equal, NotEqual, Undecided } kind = Kind::Equal;
    std::optional<GroupValue> witness_radius; // NotEqual: a radius where balls differ
};
AtEquality at_equals(const ApproxType& A, const ApproxType& B, long budget = kDefaultBudget);

struct IntersectionWitness {
    enum class Kind { Element, EmptyByDeclaration, NoneUpToBound } kind = Kind::Element;
    std::optional<FieldElement> element;
};
IntersectionWitness intersection_witness(const ApproxType& A);

// --- finite fragments (the canonical finitely realizable constraint sets) ---

struct FragmentConstraint {
    enum class Op { GE, GT, EQ, NotGE, NotGT } op = Op::GE; // v(X - c) <op> gamma
    FieldElement c;
    Int gamma;
};

struct Fragment {
    std::vector<FragmentConstraint> constraints;
};

/// First n constraints of the canonical fragment of A.
Fragment canonical_fragment(const ApproxType& A, long n);

bool constraint_satisfied(const ValuedField& F, const FragmentConstraint& ct,
                          const FieldElement& a);
bool fragment_satisfied(const ValuedField& F, const Fragment& frag, const FieldElement& a);

/// An element of K satisfying the first n constraints of the canonical
/// fragment. Immediate: a sequence term deep enough. ResidueExtending:
/// b + c*d with v(c) = 0 and the residue of c avoiding the excluded ones
/// (requires an infinite residue field). ValueExtending: requires a dense
/// value group, which no supported base field has.
FieldElement realize_fragment(const ApproxType& A, long n);

std::string fragment_constraint_to_string(const ValuedField& F, const FragmentConstraint& ct);
std::string at_to_string(const ApproxType& A); // spec-string form

} // namespace valx
