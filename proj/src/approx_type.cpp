#include "valx/approx_type.hpp"

#include <algorithm>

namespace valx {

namespace {

Int gv_as_int(const GroupValue& g) {
    if (g.infinite || g.is_augmented())
        throw_domain("UnsupportedCut", "finite plain value expected");
    if (g.coords[0].get_den() != 1)
        throw_domain("UnsupportedCut", "integer value expected");
    return g.coords[0].get_num();
}

/// v(a - b) as a plain value (infinite when a = b).
GroupValue dist(const ValuedField& F, const FieldElement& a, const FieldElement& b) {
    return value(F, sub(F, a, b));
}

} // namespace

ApproxType at_trivial(const ValuedField& F, const FieldElement& c) {
    ApproxType a;
    a.field = F;
    a.variant = AtVariant::Trivial;
    a.witness = c;
    return a;
}

ApproxType at_empty(const ValuedField& F) {
    ApproxType a;
    a.field = F;
    a.variant = AtVariant::Empty;
    a.witness = f_zero(F);
    return a;
}

ApproxType at_value_extending(const ValuedField& F, const FieldElement& b, const Cut& cut) {
    if (cut.kind == Cut::Kind::Principal && cut.q.size() != 1)
        throw_domain("UnsupportedCut", "rank-1 cut expected over vK = Z");
    ApproxType a;
    a.field = F;
    a.variant = AtVariant::ValueExtending;
    a.witness = b;
    a.cut = cut;
    return a;
}

ApproxType at_residue_extending(const ValuedField& F, const FieldElement& b, const Int& delta) {
    ApproxType a;
    a.field = F;
    a.variant = AtVariant::ResidueExtending;
    a.witness = b;
    a.delta = delta;
    return a;
}

ApproxType to_approx_type(const Pcs& g) {
    if (!g->declared_limitless())
        throw_domain("LimitInK", "sequence is not declared limitless; its limits realize a "
                                 "trivial approximation type");
    if (g->max_term_index() < 1)
        throw_domain("NotPseudoCauchy", "at least two terms are needed");
    g->gamma_prefix(std::min<long>(2, g->max_term_index())); // validate a short prefix up front
    ApproxType a;
    a.field = g->field();
    a.variant = AtVariant::ImmediateFromPcs;
    a.witness = f_zero(g->field());
    a.gen = g;
    return a;
}

Pcs from_approx_type(const ApproxType& A) {
    if (A.variant != AtVariant::ImmediateFromPcs)
        throw_domain("NotImmediate", "only immediate approximation types are associated with "
                                     "pseudo Cauchy sequences");
    // canonical choice: the presenting sequence's own terms are ball centers
    // with c_nu in A_{gamma_nu} \ A_{gamma_{nu+1}}
    return A.gen;
}

AtClass classify(const ApproxType& A) {
    switch (A.variant) {
    case AtVariant::Trivial:
        return AtClass::Trivial;
    case AtVariant::Empty:
        return AtClass::Empty;
    case AtVariant::ValueExtending:
        // an empty lower set means no balls at all
        return cut_lower_set_z(A.cut).kind == LowerSet::Kind::Empty ? AtClass::Empty
                                                                    : AtClass::ValueExtending;
    case AtVariant::ResidueExtending:
        return AtClass::ResidueExtending;
    case AtVariant::ImmediateFromPcs:
        return AtClass::Immediate;
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

bool supp_contains(const ApproxType& A, const GroupValue& gamma, long budget) {
    switch (A.variant) {
    case AtVariant::Trivial:
        return true; // every radius including infinity
    case AtVariant::Empty:
        return false;
    case AtVariant::ValueExtending:
        if (gamma.infinite) return false;
        return cut_membership(gamma, A.cut) == CutSide::InD;
    case AtVariant::ResidueExtending:
        if (gamma.infinite) return false;
        return gv_as_int(gamma) <= A.delta;
    case AtVariant::ImmediateFromPcs: {
        if (gamma.infinite) return false;
        if (A.gen->declared_cofinal_in_vk()) return true; // supp = vK
        Int g = gv_as_int(gamma);
        A.gen->index_of_radius(g, budget); // BudgetExhausted when out of reach
        return true;
    }
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

Cut supp_cut(const ApproxType& A) {
    switch (A.variant) {
    case AtVariant::Trivial:
        return Cut::above_all();
    case AtVariant::Empty:
        return Cut::below_all();
    case AtVariant::ValueExtending:
        return A.cut;
    case AtVariant::ResidueExtending:
        return Cut::principal1(Rat(A.delta), Cut::Side::Right);
    case AtVariant::ImmediateFromPcs:
        // gamma_nu strictly increasing in Z is cofinal: supp = vK
        return Cut::above_all();
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

bool at_member(const ApproxType& A, const FieldElement& c, const GroupValue& gamma, BallKind kind,
               long budget) {
    const ValuedField& F = A.field;
    if (kind == BallKind::Closed && !supp_contains(A, gamma, budget))
        throw_domain("OutOfSupport", "no closed ball at this radius");
    switch (A.variant) {
    case AtVariant::Trivial: {
        GroupValue d = dist(F, c, A.witness);
        return kind == BallKind::Closed ? !gv_less(d, gamma) : gv_less(gamma, d);
    }
    case AtVariant::Empty:
        return false;
    case AtVariant::ValueExtending: {
        if (kind == BallKind::Open &&
            (gamma.infinite || cut_membership(gamma, A.cut) == CutSide::InE))
            return false; // no open ball there either
        GroupValue d = dist(F, c, A.witness);
        return kind == BallKind::Closed ? !gv_less(d, gamma) : gv_less(gamma, d);
    }
    case AtVariant::ResidueExtending: {
        if (kind == BallKind::Open && (gamma.infinite || gv_as_int(gamma) >= A.delta))
            return false; // the open ball at delta is empty
        GroupValue d = dist(F, c, A.witness);
        return kind == BallKind::Closed ? !gv_less(d, gamma) : gv_less(gamma, d);
    }
    case AtVariant::ImmediateFromPcs: {
        if (kind == BallKind::Open && gamma.infinite) return false;
        Int g = gv_as_int(gamma);
        // closed witness: any index with gamma_nu >= g; open needs strictly more room
        long nu = A.gen->index_of_radius(kind == BallKind::Closed ? g : g + 1, budget);
        GroupValue d = dist(F, c, A.gen->term(nu));
        return kind == BallKind::Closed ? !gv_less(d, gamma) : gv_less(gamma, d);
    }
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

namespace {

/// v(b - b') exceeds every element of the lower set.
bool distance_exceeds_lower_set(const ValuedField& F, const FieldElement& b1,
                                const FieldElement& b2, const LowerSet& ls) {
    GroupValue d = dist(F, b1, b2);
    switch (ls.kind) {
    case LowerSet::Kind::Empty:
        return true;
    case LowerSet::Kind::All:
        return d.infinite;
    case LowerSet::Kind::UpTo:
        return d.infinite || d.coords[0] > Rat(ls.bound);
    }
    return false;
}

GroupValue differing_radius(const ValuedField& F, const FieldElement& b1, const FieldElement& b2,
                            const Int& max_radius) {
    GroupValue d = dist(F, b1, b2);
    if (d.infinite) return gv_int(max_radius); // same centers: supports must differ there
    Int w = d.coords[0].get_num() + 1;
    return gv_int(w <= max_radius ? w : max_radius);
}

} // namespace

AtEquality at_equals(const ApproxType& A, const ApproxType& B, long budget) {
    const ValuedField& F = A.field;
    AtClass ca = classify(A), cb = classify(B);
    if (ca != cb) {
        // cross-variant: supports or intersection behavior differ
        AtEquality r;
        r.kind = AtEquality::Kind::NotEqual;
        return r;
    }
    AtEquality eq{AtEquality::Kind::Equal, std::nullopt};
    switch (ca) {
    case AtClass::Empty:
        return eq;
    case AtClass::Trivial: {
        if (f_eq(A.witness, B.witness)) return eq;
        return AtEquality{AtEquality::Kind::NotEqual, dist(F, A.witness, B.witness)};
    }
    case AtClass::ValueExtending: {
        LowerSet la = cut_lower_set_z(A.cut), lb = cut_lower_set_z(B.cut);
        if (!(la == lb)) {
            Int wa = la.kind == LowerSet::Kind::UpTo ? la.bound : Int(0);
            Int wb = lb.kind == LowerSet::Kind::UpTo ? lb.bound : Int(0);
            return AtEquality{AtEquality::Kind::NotEqual, gv_int(std::max(wa, wb))};
        }
        if (distance_exceeds_lower_set(F, A.witness, B.witness, la)) return eq;
        Int top = la.kind == LowerSet::Kind::UpTo ? la.bound : Int(0);
        return AtEquality{AtEquality::Kind::NotEqual,
                          la.kind == LowerSet::Kind::UpTo
                              ? differing_radius(F, A.witness, B.witness, top)
                              : dist(F, A.witness, B.witness)};
    }
    case AtClass::ResidueExtending: {
        if (A.delta != B.delta)
            return AtEquality{AtEquality::Kind::NotEqual, gv_int(std::max(A.delta, B.delta))};
        GroupValue d = dist(F, A.witness, B.witness);
        if (!gv_less(d, gv_int(A.delta))) return eq;
        return AtEquality{AtEquality::Kind::NotEqual,
                          differing_radius(F, A.witness, B.witness, A.delta)};
    }
    case AtClass::Immediate: {
        if (A.gen->same_presentation(*B.gen)) return eq;
        // mutual ball containment at interleaved radii up to the budget
        for (long nu = 0; nu <= budget; ++nu) {
            bool have_a = nu < std::min<long>(A.gen->max_term_index(), budget + 1);
            bool have_b = nu < std::min<long>(B.gen->max_term_index(), budget + 1);
            if (!have_a && !have_b) break;
            try {
                if (have_a) {
                    Int g = A.gen->gamma_int(nu);
                    if (!at_member(B, A.gen->term(nu), gv_int(g), BallKind::Closed, budget))
                        return AtEquality{AtEquality::Kind::NotEqual, gv_int(g)};
                }
                if (have_b) {
                    Int g = B.gen->gamma_int(nu);
                    if (!at_member(A, B.gen->term(nu), gv_int(g), BallKind::Closed, budget))
                        return AtEquality{AtEquality::Kind::NotEqual, gv_int(g)};
                }
            } catch (const DomainError& e) {
                if (e.code() == "BudgetExhausted") break;
                throw;
            }
        }
        return AtEquality{AtEquality::Kind::Undecided, std::nullopt};
    }
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

IntersectionWitness intersection_witness(const ApproxType& A) {
    switch (A.variant) {
    case AtVariant::Trivial:
    case AtVariant::ValueExtending:
    case AtVariant::ResidueExtending:
        return IntersectionWitness{IntersectionWitness::Kind::Element, A.witness};
    case AtVariant::Empty:
        // intersection over no balls is all of K
        return IntersectionWitness{IntersectionWitness::Kind::Element, A.witness};
    case AtVariant::ImmediateFromPcs:
        return IntersectionWitness{IntersectionWitness::Kind::EmptyByDeclaration, std::nullopt};
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

Fragment canonical_fragment(const ApproxType& A, long n) {
    const ValuedField& F = A.field;
    Fragment frag;
    switch (A.variant) {
    case AtVariant::ImmediateFromPcs: {
        // {v(X - c_nu) >= gamma_nu : nu < n}
        A.gen->gamma_prefix(n);
        for (long nu = 0; nu < n; ++nu)
            frag.constraints.push_back(
                FragmentConstraint{FragmentConstraint::Op::GE, A.gen->term(nu), A.gen->gamma_int(nu)});
        return frag;
    }
    case AtVariant::ResidueExtending: {
        // {v(X - b) = delta} + {not v(X - (b + j*d)) > delta : 1 <= j < n}
        frag.constraints.push_back(FragmentConstraint{FragmentConstraint::Op::EQ, A.witness, A.delta});
        FieldElement d = element_of_value(F, A.delta);
        for (long j = 1; j < n; ++j) {
            FieldElement cj = add(F, A.witness, mul(F, f_from_int(F, Int(j)), d));
            frag.constraints.push_back(FragmentConstraint{FragmentConstraint::Op::NotGT, cj, A.delta});
        }
        return frag;
    }
    case AtVariant::ValueExtending: {
        LowerSet ls = cut_lower_set_z(A.cut);
        if (ls.kind == LowerSet::Kind::Empty)
            throw_domain("UnsupportedCut", "the empty approximation type has no canonical fragment");
        if (ls.kind == LowerSet::Kind::All) {
            // supp = vK: only inclusion constraints exist
            for (long j = 0; j < n; ++j)
                frag.constraints.push_back(
                    FragmentConstraint{FragmentConstraint::Op::GT, A.witness, Int(j)});
            return frag;
        }
        // {v(X - b) > gamma : top n radii} + one exclusion above the support
        for (long j = 0; j < n; ++j)
            frag.constraints.push_back(
                FragmentConstraint{FragmentConstraint::Op::GT, A.witness, ls.bound - j});
        frag.constraints.push_back(
            FragmentConstraint{FragmentConstraint::Op::NotGE, A.witness, ls.bound + 1});
        return frag;
    }
    case AtVariant::Trivial:
    case AtVariant::Empty:
        throw_domain("UnsupportedCut", "no canonical fragment for this variant");
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

bool constraint_satisfied(const ValuedField& F, const FragmentConstraint& ct,
                          const FieldElement& a) {
    GroupValue d = value(F, sub(F, a, ct.c));
    GroupValue g = gv_int(ct.gamma);
    switch (ct.op) {
    case FragmentConstraint::Op::GE:
        return !gv_less(d, g);
    case FragmentConstraint::Op::GT:
        return gv_less(g, d);
    case FragmentConstraint::Op::EQ:
        return compare(d, g) == Ordering::Equal;
    case FragmentConstraint::Op::NotGE:
        return gv_less(d, g);
    case FragmentConstraint::Op::NotGT:
        return !gv_less(g, d);
    }
    throw_domain("UnsupportedCut", "unknown constraint");
}

bool fragment_satisfied(const ValuedField& F, const Fragment& frag, const FieldElement& a) {
    for (const auto& ct : frag.constraints)
        if (!constraint_satisfied(F, ct, a)) return false;
    return true;
}

FieldElement realize_fragment(const ApproxType& A, long n) {
    const ValuedField& F = A.field;
    switch (A.variant) {
    case AtVariant::ImmediateFromPcs:
        // c_n lies in every fragment ball: v(c_n - c_nu) = gamma_nu for nu < n
        return A.gen->term(n);
    case AtVariant::ResidueExtending: {
        if (!F.residue_field_infinite())
            throw_domain("InfiniteResidueRequired",
                         "residue-extending fragments need an infinite residue field");
        // a = b + c*d with vc = 0 and residue(c) avoiding the excluded
        // residues -d^{-1}(b - c_j) = j for j = 1..n-1; c = n works
        FieldElement d = element_of_value(F, A.delta);
        return add(F, A.witness, mul(F, f_from_int(F, Int(std::max<long>(n, 1))), d));
    }
    case AtVariant::ValueExtending:
        throw_domain("DenseValueGroupRequired",
                     "value-extending fragments need a dense value group; vK = Z is discrete");
    case AtVariant::Trivial:
        return A.witness;
    case AtVariant::Empty:
        throw_domain("UnsupportedCut", "the empty approximation type has no canonical fragment");
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

std::string fragment_constraint_to_string(const ValuedField& F, const FragmentConstraint& ct) {
    std::string core = "v(X-(" + element_to_string(F, ct.c) + "))";
    switch (ct.op) {
    case FragmentConstraint::Op::GE:
        return core + " >= " + ct.gamma.get_str();
    case FragmentConstraint::Op::GT:
        return core + " > " + ct.gamma.get_str();
    case FragmentConstraint::Op::EQ:
        return core + " = " + ct.gamma.get_str();
    case FragmentConstraint::Op::NotGE:
        return "not(" + core + " >= " + ct.gamma.get_str() + ")";
    case FragmentConstraint::Op::NotGT:
        return "not(" + core + " > " + ct.gamma.get_str() + ")";
    }
    throw_domain("UnsupportedCut", "unknown constraint");
}

std::string at_to_string(const ApproxType& A) {
    const ValuedField& F = A.field;
    switch (A.variant) {
    case AtVariant::Trivial:
        return "at:trivial:c=" + element_to_string(F, A.witness);
    case AtVariant::Empty:
        return "at:empty";
    case AtVariant::ValueExtending:
        return "at:value:b=" + element_to_string(F, A.witness) + ",cut=" + cut_to_string(A.cut);
    case AtVariant::ResidueExtending:
        return "at:residue:b=" + element_to_string(F, A.witness) + ",delta=" + A.delta.get_str();
    case AtVariant::ImmediateFromPcs:
        return "at:immediate:" + A.gen->spec_string();
    }
    throw_domain("UnsupportedCut", "unknown approximation type variant");
}

} // namespace valx
