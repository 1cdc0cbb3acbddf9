#include "valx/balls.hpp"

#include <algorithm>

namespace valx {

Ball make_ball(const ValuedField& F, const FieldElement& center, const GroupValue& radius,
               BallKind kind) {
    if (radius.is_augmented())
        throw_domain("UnsupportedCut", "ball radius must lie in the value group");
    if (kind == BallKind::Open && radius.infinite)
        throw_domain("UnsupportedCut", "open balls require a finite radius");
    (void)F;
    return Ball{center, radius, kind};
}

bool ball_member(const ValuedField& F, const FieldElement& a, const Ball& b) {
    GroupValue d = value(F, sub(F, a, b.center));
    if (b.kind == BallKind::Closed) return !gv_less(d, b.radius);
    return gv_less(b.radius, d);
}

namespace {

/// Strict "bigger as a set" order on (radius, kind): smaller radius wins,
/// closed beats open at the same radius.
int size_cmp(const Ball& a, const Ball& b) {
    Ordering c = compare(a.radius, b.radius);
    if (c == Ordering::Less) return 1;
    if (c == Ordering::Greater) return -1;
    if (a.kind == b.kind) return 0;
    return a.kind == BallKind::Closed ? 1 : -1;
}

} // namespace

BallRelation compare_balls(const ValuedField& F, const Ball& b1, const Ball& b2) {
    const bool c2_in_1 = ball_member(F, b2.center, b1);
    const bool c1_in_2 = ball_member(F, b1.center, b2);
    if (!c2_in_1 && !c1_in_2) return BallRelation::Disjoint;
    // they intersect, so they are comparable and share every common center
    int sc = size_cmp(b1, b2);
    if (sc > 0) return BallRelation::SupersetStrict;
    if (sc < 0) return BallRelation::SubsetStrict;
    return BallRelation::Equal;
}

Nest nest_insert(const ValuedField& F, Nest n, const Ball& b) {
    for (const Ball& m : n.balls) {
        BallRelation r = compare_balls(F, m, b);
        if (r == BallRelation::Disjoint)
            throw_domain("NotComparable", "ball is disjoint from a member of the nest");
        if (r == BallRelation::Equal) return n; // already present (same extent)
    }
    auto it = std::find_if(n.balls.begin(), n.balls.end(),
                           [&](const Ball& m) { return size_cmp(m, b) < 0; });
    n.balls.insert(it, b);
    return n;
}

std::string ball_to_string(const ValuedField& F, const Ball& b) {
    std::string s = b.kind == BallKind::Open ? "B°" : "B";
    s += "[" + gv_to_string(b.radius) + "](" + element_to_string(F, b.center) + ")";
    return s;
}

} // namespace valx
