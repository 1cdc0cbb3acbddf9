#pragma once

#include <string>
#include <vector>

#include "valx/valued_field.hpp"

namespace valx {

// ---------------------------------------------------------------------------
// Closed/open ultrametric balls in (K, v) and inclusion-ordered nests.
// ---------------------------------------------------------------------------

enum class BallKind { Closed, Open };

/// B_r(c) = {a : v(a-c) >= r} (closed) or strict (open). Open balls require a
/// finite radius; a closed ball of radius infinity is the singleton {c}.
struct Ball {
    FieldElement center;
    GroupValue radius; // plain; finite, or infinite for a closed singleton
    BallKind kind = BallKind::Closed;
};

Ball make_ball(const ValuedField& F, const FieldElement& center, const GroupValue& radius,
               BallKind kind);

bool ball_member(const ValuedField& F, const FieldElement& a, const Ball& b);

enum class BallRelation { Equal, SubsetStrict, SupersetStrict, Disjoint };

/// Relation of b1 to b2, decided symbolically from the centers' distance.
BallRelation compare_balls(const ValuedField& F, const Ball& b1, const Ball& b2);

/// Generating balls of a nest, sorted by inclusion, largest first. Every pair
/// is comparable; at most one closed and one open ball per radius. The full
/// nest (all larger balls) is never materialized: each larger ball is already
/// determined by any member ball.
struct Nest {
    std::vector<Ball> balls;
};

/// Sorted insert; NotComparable if the ball is disjoint from a member.
Nest nest_insert(const ValuedField& F, Nest n, const Ball& b);

std::string ball_to_string(const ValuedField& F, const Ball& b);

} // namespace valx
