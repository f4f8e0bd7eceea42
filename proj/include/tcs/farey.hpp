#pragma once
// Farey-graph structure on the boundary circle: the edge predicate, mediants,
// the bypass-attachment slope rule, the neighbor set S(r), region guards, and
// the two thickening state machines driven by repeated bypass attachment.

#include <vector>

#include "tcs/circle.hpp"
#include "tcs/errors.hpp"
#include "tcs/slope.hpp"

namespace tcs {

// Edge iff the primitive vectors have determinant +-1; symmetric, irreflexive.
bool farey_edge(const Slope& a, const Slope& b);

// Which lift of infinity the mediant uses: 1/0 (right half of the circle)
// or -1/0 (left half). Auto picks the side matching the finite partner's
// sign, with 0 treated as right.
enum class InfSide { Auto, Right, Left };

// (p_a + p_b)/(q_a + q_b) for Farey-adjacent inputs; NotAdjacent otherwise.
Slope mediant(const Slope& a, const Slope& b, InfSide side = InfSide::Auto);

// Slope produced by attaching a bypass to a torus with dividing slope s and
// ruling slope r: the Farey neighbor of s furthest along the directed arc
// from s to r. Odd flip counts traverse the arc clockwise (increasing),
// even counts anticlockwise. Computed by a determinant-1 transport of s to
// infinity, an integer floor or ceiling of the image of r, and transport
// back. If s and r are already adjacent the result is r itself.
Slope bypass_slope(const Slope& s, const Slope& r, int64 flips);

// Membership in S(r): Farey neighbors of r lying strictly between r and
// infinity in clockwise order. InfiniteInput when r is infinite.
bool in_S(const Slope& r, const Slope& s);

// All members of S(r) with denominator <= den_bound, sorted along the arc
// (increasing value).
std::vector<Slope> enumerate_S(const Slope& r, int64 den_bound);

struct RegionGuards {
    bool in_R_plus = false;    // s in [2, 4) or s >= 5
    bool exceptional = false;  // s = (4k+1)/k for some natural k
    bool in_gap = false;       // 4 < s <= 5
};

// All three guards at once; infinity reports all false.
RegionGuards region_guards(const Slope& s);

struct ThickeningResult {
    enum class Kind { ReachedInfinity, ReachedOne, Stalled };
    Kind kind = Kind::Stalled;
    std::vector<Slope> path;             // bypass path, first entry the input
    std::vector<Slope> structural_tail;  // [0, 1] for ReachedOne
    Slope stalled_at;                    // guard-failing slope for Stalled

    bool reached_infinity() const { return kind == Kind::ReachedInfinity; }
    bool reached_one() const { return kind == Kind::ReachedOne; }
    bool stalled() const { return kind == Kind::Stalled; }
};

// Repeated bypass attachment toward ruling slope 0 from s > 2 (or s = inf),
// guarded before each step by s >= 2 and s not exceptional; ends at infinity
// or stalls at the guard-failing slope.
ThickeningResult thicken_positive(const Slope& s);

// Repeated bypass attachment toward ruling slope 0 from s < 0, stopping at
// the first slope of the form -1/k; the structural tail [0, 1] records the
// basic-slice continuation to slope 1.
ThickeningResult thicken_negative(const Slope& s);

} // namespace tcs
