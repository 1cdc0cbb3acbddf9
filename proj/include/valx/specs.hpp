#pragma once

#include <string>

#include "valx/approx_type.hpp"
#include "valx/extension.hpp"
#include "valx/poly.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Textual grammars: field specs (Q@p=2, Fp(t)@p=3, Q(t)), element literals
// (3/8, (t^2+1)/(t-1)), polynomials in x, cuts (3/2L, aboveall), pCs specs
// (pcs:artin_schreier, pcs:powergap:e=i^2, pcs:file:PATH), approximation-type
// and valuation specs. Parsers throw ParseError; formatters invert them.
// ---------------------------------------------------------------------------

ValuedField parse_field(const std::string& s);

FieldElement parse_element(const ValuedField& F, const std::string& s);
Poly parse_poly(const ValuedField& F, const std::string& s);
RatFun parse_ratfun(const ValuedField& F, const std::string& s);

Cut parse_cut(const std::string& s);

Pcs parse_pcs(const ValuedField& F, const std::string& s);

ApproxType parse_at(const ValuedField& F, const std::string& s);

ExtensionValuation parse_valuation(const ValuedField& F, const std::string& s,
                                   long budget = kDefaultBudget);

/// Inverse of gv_to_string within a known group and (for augmented forms) cut.
GroupValue parse_group_value(const std::string& s, GroupKind kind, const Cut* cut = nullptr);

Ball parse_ball(const ValuedField& F, const std::string& s); // B[g](c) / B°[g](c)

} // namespace valx
