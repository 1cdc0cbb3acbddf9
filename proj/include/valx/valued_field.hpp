#pragma once

#include <string>
#include <variant>

#include "valx/errors.hpp"
#include "valx/fp.hpp"
#include "valx/ordered_group.hpp"
#include "valx/rational.hpp"
#include "valx/spoly.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Exact base fields with computable valuation and residue:
//   (Q, v_p), (F_p(t), v_t), (Q(t), v_t). All have value group Z.
// ---------------------------------------------------------------------------

enum class FieldKind { PAdicRationals, FpRationalFunctions, QRationalFunctions };

struct ValuedField {
    FieldKind kind = FieldKind::PAdicRationals;
    long p = 2; // prime; unused for QRationalFunctions

    GroupDescriptor value_group() const { return GroupDescriptor{GroupKind::Integers}; }

    bool residue_field_infinite() const { return kind == FieldKind::QRationalFunctions; }

    friend bool operator==(const ValuedField&, const ValuedField&) = default;
};

/// Exact element: reduced fraction of integers, or reduced fraction of sparse
/// t-polynomials over F_p or Q. Canonical form makes equality structural.
using FieldElement = std::variant<Rat, SFrac<Fp>, SFrac<Rat>>;

/// Element of the residue field F_p or Q, or a rational function in the
/// distinguished transcendental generator y over it (module extension emits
/// those). Constants are degree-0 fractions.
using ResidueElement = std::variant<SFrac<Fp>, SFrac<Rat>>;

GroupValue value(const ValuedField& F, const FieldElement& a);
ResidueElement residue(const ValuedField& F, const FieldElement& a); // NegativeValue if v(a) < 0

FieldElement f_zero(const ValuedField& F);
FieldElement f_one(const ValuedField& F);
FieldElement f_from_int(const ValuedField& F, const Int& n);
FieldElement f_from_rat(const ValuedField& F, const Rat& q);

FieldElement add(const ValuedField& F, const FieldElement& a, const FieldElement& b);
FieldElement sub(const ValuedField& F, const FieldElement& a, const FieldElement& b);
FieldElement mul(const ValuedField& F, const FieldElement& a, const FieldElement& b);
FieldElement div(const ValuedField& F, const FieldElement& a, const FieldElement& b);
FieldElement neg(const ValuedField& F, const FieldElement& a);
FieldElement inv(const ValuedField& F, const FieldElement& a); // DivisionByZero

bool f_is_zero(const FieldElement& a);
bool f_eq(const FieldElement& a, const FieldElement& b);

FieldElement uniformizer(const ValuedField& F); // p or t
/// uniformizer^gamma; gamma may be negative.
FieldElement element_of_value(const ValuedField& F, const Int& gamma);

// residue-field helpers
ResidueElement r_zero(const ValuedField& F);
ResidueElement r_one(const ValuedField& F);
ResidueElement r_from_int(const ValuedField& F, const Int& n);
ResidueElement add(const ValuedField& F, const ResidueElement& a, const ResidueElement& b);
ResidueElement mul(const ValuedField& F, const ResidueElement& a, const ResidueElement& b);
ResidueElement inv(const ValuedField& F, const ResidueElement& a);
ResidueElement div(const ValuedField& F, const ResidueElement& a, const ResidueElement& b);
bool r_eq(const ResidueElement& a, const ResidueElement& b);
bool r_is_zero(const ResidueElement& a);
/// y * a, for building rational functions in the residue generator.
ResidueElement r_shift_y(const ValuedField& F, const ResidueElement& a, const Int& power);

std::string field_to_string(const ValuedField& F);
std::string element_to_string(const ValuedField& F, const FieldElement& a);
std::string residue_to_string(const ValuedField& F, const ResidueElement& r);

} // namespace valx
