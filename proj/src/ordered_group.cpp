#include "valx/ordered_group.hpp"

#include <algorithm>

namespace valx {

namespace {

int cmp_rat(const Rat& a, const Rat& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

int cmp_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp_rat(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

void check_same_group(const GroupValue& a, const GroupValue& b) {
    if (a.kind != b.kind)
        throw_domain("MixedDescriptors", "values from different group descriptors");
}

Ordering from_cmp(int c) { return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal; }

} // namespace

GroupValue gv_int(long v) { return gv_int(Int(v)); }

GroupValue gv_int(const Int& v) {
    GroupValue g;
    g.kind = GroupKind::Integers;
    g.coords = {Rat(v)};
    return g;
}

GroupValue gv_rat(const Rat& v) {
    GroupValue g;
    g.kind = GroupKind::Rationals;
    g.coords = {v};
    return g;
}

GroupValue gv_lex(const Rat& a, const Rat& b) {
    GroupValue g;
    g.kind = GroupKind::LexSquare;
    g.coords = {a, b};
    return g;
}

GroupValue gv_infinity(GroupKind kind) {
    GroupValue g;
    g.kind = kind;
    g.infinite = true;
    return g;
}

GroupValue gv_augmented(GroupValue base, const Int& mult, const Cut& cut) {
    if (base.infinite) throw_domain("MixedCuts", "cannot augment the infinite value");
    if (cut.kind == Cut::Kind::Principal &&
        cut.q.size() != static_cast<size_t>(base.coords.size()))
        throw_domain("UnsupportedCut", "cut point rank does not match the group");
    base.mult = mult;
    if (mult != 0)
        base.cut = cut;
    else
        base.cut.reset();
    return base;
}

GroupValue gv_alpha(const GroupDescriptor& d, const Cut& cut, const Int& mult) {
    GroupValue zero;
    zero.kind = d.kind;
    zero.coords.assign(static_cast<size_t>(d.rank()), Rat(0));
    return gv_augmented(std::move(zero), mult, cut);
}

Ordering compare(const GroupValue& a, const GroupValue& b) {
    check_same_group(a, b);
    if (a.infinite || b.infinite) {
        if (a.infinite && b.infinite) return Ordering::Equal;
        return a.infinite ? Ordering::Greater : Ordering::Less;
    }
    if (!a.is_augmented() && !b.is_augmented()) {
        int c = cmp_vec(a.coords, b.coords);
        return from_cmp(c);
    }
    // at least one augmented: both must refer to the same cut
    const Cut* cut = nullptr;
    if (a.cut && b.cut) {
        if (!(*a.cut == *b.cut)) throw_domain("MixedCuts", "augmented values carry different cuts");
        cut = &*a.cut;
    } else {
        cut = a.cut ? &*a.cut : &*b.cut;
    }
    const Int& m = a.mult;
    const Int& n = b.mult;
    switch (cut->kind) {
    case Cut::Kind::Principal: {
        // base + mult*q, compared lexicographically with the signed
        // multiplicity as the infinitesimal tiebreaker:
        //   side Right: alpha = q + iota  =>  (base + mult*q,  mult)
        //   side Left : alpha = q - iota  =>  (base + mult*q, -mult)
        std::vector<Rat> ka = a.coords, kb = b.coords;
        for (size_t i = 0; i < ka.size(); ++i) {
            ka[i] += Rat(m) * cut->q[i];
            kb[i] += Rat(n) * cut->q[i];
        }
        int c = cmp_vec(ka, kb);
        if (c != 0) return from_cmp(c);
        int cm = cmp(m, n);
        if (cut->side == Cut::Side::Left) cm = -cm;
        return from_cmp(cm);
    }
    case Cut::Kind::AboveAll: {
        // alpha exceeds the whole group: multiplicity dominates
        int cm = cmp(m, n);
        if (cm != 0) return from_cmp(cm);
        return from_cmp(cmp_vec(a.coords, b.coords));
    }
    case Cut::Kind::BelowAll: {
        int cm = -cmp(m, n);
        if (cm != 0) return from_cmp(cm);
        return from_cmp(cmp_vec(a.coords, b.coords));
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

bool gv_less(const GroupValue& a, const GroupValue& b) { return compare(a, b) == Ordering::Less; }
bool gv_leq(const GroupValue& a, const GroupValue& b) { return compare(a, b) != Ordering::Greater; }

CutSide cut_membership(const GroupValue& g, const Cut& c) {
    if (g.infinite || g.is_augmented())
        throw_domain("UnsupportedCut", "cut membership is defined for finite plain values");
    switch (c.kind) {
    case Cut::Kind::BelowAll:
        return CutSide::InE;
    case Cut::Kind::AboveAll:
        return CutSide::InD;
    case Cut::Kind::Principal: {
        if (c.q.size() != g.coords.size())
            throw_domain("UnsupportedCut", "cut point rank does not match the group");
        int cv = cmp_vec(g.coords, c.q);
        if (c.side == Cut::Side::Left) return cv < 0 ? CutSide::InD : CutSide::InE;
        return cv <= 0 ? CutSide::InD : CutSide::InE;
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

GroupValue add(const GroupValue& a, const GroupValue& b) {
    check_same_group(a, b);
    if (a.infinite || b.infinite) return gv_infinity(a.kind);
    GroupValue r;
    r.kind = a.kind;
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
    r.mult = a.mult + b.mult;
    if (a.cut && b.cut && !(*a.cut == *b.cut))
        throw_domain("MixedCuts", "adding augmented values with different cuts");
    if (r.mult != 0)
        r.cut = a.cut ? a.cut : b.cut;
    return r;
}

GroupValue neg(const GroupValue& a) {
    if (a.infinite) throw_domain("UnsupportedCut", "negation of the infinite value");
    GroupValue r = a;
    for (auto& c : r.coords) c = -c;
    r.mult = -a.mult;
    return r;
}

GroupValue sub(const GroupValue& a, const GroupValue& b) { return add(a, neg(b)); }

GroupValue gv_scale(const GroupValue& a, const Int& k) {
    if (a.infinite) {
        if (k == 0) throw_domain("UnsupportedCut", "0 * infinity");
        return a;
    }
    GroupValue r = a;
    for (auto& c : r.coords) c *= Rat(k);
    r.mult = a.mult * k;
    if (r.mult == 0) r.cut.reset();
    return r;
}

bool is_torsion_modulo_base(const GroupValue& a) { return !a.is_augmented(); }

int rational_rank(const GroupDescriptor& d, bool augmented) {
    int base = d.kind == GroupKind::LexSquare ? 2 : 1;
    return base + (augmented ? 1 : 0);
}

LowerSet cut_lower_set_z(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::BelowAll:
        return LowerSet{LowerSet::Kind::Empty, Int(0)};
    case Cut::Kind::AboveAll:
        return LowerSet{LowerSet::Kind::All, Int(0)};
    case Cut::Kind::Principal: {
        if (c.q.size() != 1) throw_domain("UnsupportedCut", "rank-1 cut expected");
        const Rat& q = c.q[0];
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        // Right: {g <= q} = {g <= floor(q)}; Left: {g < q} = {g <= ceil(q)-1}
        if (c.side == Cut::Side::Right) return LowerSet{LowerSet::Kind::UpTo, fl};
        if (q.get_den() == 1) return LowerSet{LowerSet::Kind::UpTo, fl - 1};
        return LowerSet{LowerSet::Kind::UpTo, fl};
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

std::string gv_to_string(const GroupValue& v) {
    if (v.infinite) return "inf";
    std::string plain;
    if (v.kind == GroupKind::LexSquare) {
        std::vector<Rat> c = v.coords;
        if (v.is_augmented() && v.cut->kind == Cut::Kind::Principal)
            for (size_t i = 0; i < c.size(); ++i) c[i] += Rat(v.mult) * v.cut->q[i];
        plain = "(" + rat_to_string(c[0]) + "," + rat_to_string(c[1]) + ")";
    } else {
        Rat c = v.coords[0];
        if (v.is_augmented() && v.cut->kind == Cut::Kind::Principal) c += Rat(v.mult) * v.cut->q[0];
        plain = rat_to_string(c);
    }
    if (!v.is_augmented()) return plain;
    // infinitesimal part: side Right contributes +mult*iota, Left -mult*iota;
    // for the boundary cuts an element above/below the whole group is written T
    Int k;
    char marker;
    switch (v.cut->kind) {
    case Cut::Kind::Principal:
        marker = 'i';
        k = v.cut->side == Cut::Side::Right ? v.mult : -v.mult;
        break;
    case Cut::Kind::AboveAll:
        marker = 'T';
        k = v.mult;
        break;
    case Cut::Kind::BelowAll:
        marker = 'T';
        k = -v.mult;
        break;
    default:
        throw_domain("UnsupportedCut", "unknown cut kind");
    }
    std::string s = plain;
    s += (k > 0 ? "+" : "-");
    Int ak = abs(k);
    if (ak != 1) s += ak.get_str();
    s += marker;
    return s;
}

std::string cut_to_string(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::BelowAll:
        return "belowall";
    case Cut::Kind::AboveAll:
        return "aboveall";
    case Cut::Kind::Principal: {
        std::string s;
        if (c.q.size() == 1) {
            s = rat_to_string(c.q[0]);
        } else {
            s = "(" + rat_to_string(c.q[0]) + "," + rat_to_string(c.q[1]) + ")";
        }
        return s + (c.side == Cut::Side::Left ? "L" : "R");
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

std::string cut_to_text(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::BelowAll:
        return "below-all";
    case Cut::Kind::AboveAll:
        return "above-all";
    case Cut::Kind::Principal: {
        std::string s = "q=";
        if (c.q.size() == 1)
            s += rat_to_string(c.q[0]);
        else
            s += "(" + rat_to_string(c.q[0]) + "," + rat_to_string(c.q[1]) + ")";
        s += " side=";
        s += c.side == Cut::Side::Left ? "left" : "right";
        return s;
    }
    }
    throw_domain("UnsupportedCut", "unknown cut kind");
}

} // namespace valx
