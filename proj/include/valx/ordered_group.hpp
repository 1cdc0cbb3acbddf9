#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valx/errors.hpp"
#include "valx/rational.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Value groups: Z, Q, Z^2 (lexicographic), their divisible hulls, cuts in
// them, and the cut-augmented groups G + Z*alpha where alpha realizes a cut.
// ---------------------------------------------------------------------------

enum class GroupKind { Integers, Rationals, LexSquare };

struct GroupDescriptor {
    GroupKind kind = GroupKind::Integers;

    int rank() const { return kind == GroupKind::LexSquare ? 2 : 1; }

    GroupDescriptor divisible_hull() const {
        // hull of Z is Q; LexSquare's hull is the lexicographic rational plane,
        // which shares the LexSquare comparison rules.
        if (kind == GroupKind::Integers) return GroupDescriptor{GroupKind::Rationals};
        return *this;
    }

    /// True when every coordinate of a member must be an integer.
    bool integral() const { return kind != GroupKind::Rationals; }

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// A cut (D, E) in the group. Principal cuts sit immediately left or right of
/// a divisible-hull point q: D(Left) = {g < q}, D(Right) = {g <= q}. Cuts that
/// are not of this shape (possible over LexSquare) are not representable and
/// are rejected where they would arise.
struct Cut {
    enum class Kind { BelowAll, AboveAll, Principal };
    enum class Side { Left, Right };

    Kind kind = Kind::AboveAll;
    std::vector<Rat> q; // hull coordinates; Principal only
    Side side = Side::Right;

    static Cut below_all() { return Cut{Kind::BelowAll, {}, Side::Right}; }
    static Cut above_all() { return Cut{Kind::AboveAll, {}, Side::Right}; }
    static Cut principal(std::vector<Rat> q, Side side) { return Cut{Kind::Principal, std::move(q), side}; }
    static Cut principal1(const Rat& q, Side side) { return Cut{Kind::Principal, {q}, side}; }

    friend bool operator==(const Cut&, const Cut&) = default;
};

/// Element of a value group, of its cut augmentation, or the maximal symbol
/// infinity. With mult == 0 this is a plain group element; with mult = n != 0
/// it denotes base + n*alpha for the alpha realizing `cut` (alpha is never a
/// torsion element modulo the group, so such a value never equals a plain one).
struct GroupValue {
    GroupKind kind = GroupKind::Integers;
    bool infinite = false;
    std::vector<Rat> coords{Rat(0)}; // rank-many; empty when infinite
    Int mult = 0;
    std::optional<Cut> cut; // engaged iff mult != 0

    bool is_augmented() const { return mult != 0; }

    friend bool operator==(const GroupValue&, const GroupValue&) = default;
};

enum class Ordering { Less, Equal, Greater };
enum class CutSide { InD, InE };

GroupValue gv_int(long v);
GroupValue gv_int(const Int& v);
GroupValue gv_rat(const Rat& v);
GroupValue gv_lex(const Rat& a, const Rat& b);
GroupValue gv_infinity(GroupKind kind = GroupKind::Integers);
GroupValue gv_augmented(GroupValue base, const Int& mult, const Cut& cut);
/// n * alpha for the alpha of `cut`, over the descriptor's zero.
GroupValue gv_alpha(const GroupDescriptor& d, const Cut& cut, const Int& mult = Int(1));

Ordering compare(const GroupValue& a, const GroupValue& b);
bool gv_less(const GroupValue& a, const GroupValue& b);
bool gv_leq(const GroupValue& a, const GroupValue& b);

CutSide cut_membership(const GroupValue& g, const Cut& c);

GroupValue add(const GroupValue& a, const GroupValue& b);
GroupValue neg(const GroupValue& a);
GroupValue sub(const GroupValue& a, const GroupValue& b);
GroupValue gv_scale(const GroupValue& a, const Int& k);

/// False whenever the alpha-multiplicity is nonzero (alpha realizes a cut and
/// is non-torsion modulo the base group); plain values are torsion trivially.
bool is_torsion_modulo_base(const GroupValue& a);

int rational_rank(const GroupDescriptor& d, bool augmented);

/// Canonical description of the subset D(cut) of a rank-1 integral group:
/// empty, everything, or {g <= bound}. Used for approximation-type equality,
/// where only the induced subset of vK matters, not the cut representation.
struct LowerSet {
    enum class Kind { Empty, All, UpTo } kind = Kind::All;
    Int bound; // UpTo only
    friend bool operator==(const LowerSet&, const LowerSet&) = default;
};
LowerSet cut_lower_set_z(const Cut& c);

std::string gv_to_string(const GroupValue& v);
std::string cut_to_string(const Cut& c);      // compact: "3/2L", "belowall", "aboveall"
std::string cut_to_text(const Cut& c);        // human: "q=3/2 side=left"

} // namespace valx
