#pragma once

// Points on the boundary circle of the Farey graph: rationals, the point at
// infinity, and real quadratic irrationals (a + b*sqrt(d))/c. Comparisons are
// exact integer sign computations; no floating point is involved. The
// clockwise circular order is increasing real value with a single wrap
// through infinity, so clockwise from 0 visits 1/2, 1, 2, inf, -2, -1.

#include <cstdint>
#include <string>

#include "tcs/slope.hpp"

namespace tcs {

// Exact element of the field Q(sqrt(d)): (a + b*sqrt(d)) / c with c > 0,
// gcd(a, b, c) = 1, and d a positive non-square. Closed under field ops with
// a fixed d, which is all the monodromy fixed-point checks need.
struct QuadNum {
    int64 a = 0;
    int64 b = 0;
    int64 c = 1;
    int64 d = 2;

    QuadNum() = default;
    QuadNum(int64 a_, int64 b_, int64 c_, int64 d_); // normalizes

    bool is_rational() const { return b == 0; }

    friend bool operator==(const QuadNum&, const QuadNum&) = default;
};

QuadNum quad_from_rational(const Slope& r, int64 d);
QuadNum quad_add(const QuadNum& x, const QuadNum& y);
QuadNum quad_sub(const QuadNum& x, const QuadNum& y);
QuadNum quad_mul(const QuadNum& x, const QuadNum& y);
QuadNum quad_div(const QuadNum& x, const QuadNum& y); // OutOfDomain on zero divisor
double quad_to_double(const QuadNum& x);              // diagnostics only

// Sign of a + b*sqrt(d) by exact integer analysis.
int sign_quad_sum(int128 a, int128 b, int64 d);

struct CirclePoint {
    // kind Rational covers finite rationals and the point at infinity.
    enum class Kind { Rational, Quadratic };
    Kind kind = Kind::Rational;
    Slope rational;
    QuadNum quadratic;

    CirclePoint() : rational(0) {}
    CirclePoint(const Slope& s) : kind(Kind::Rational), rational(s) {}
    CirclePoint(const QuadNum& q) : kind(Kind::Quadratic), quadratic(q) {}

    bool is_infinite() const {
        return kind == Kind::Rational && rational.is_infinite();
    }
};

bool points_equal(const CirclePoint& a, const CirclePoint& b);

// Three-way comparison of finite circle points (InfiniteInput on infinity).
int cmp(const CirclePoint& a, const CirclePoint& b);

// Strict membership of x in the arc traversed clockwise from a to b.
// DegenerateArc when a = b; false whenever x equals an endpoint.
bool clockwise_between(const CirclePoint& a, const CirclePoint& x, const CirclePoint& b);

std::string to_string(const CirclePoint& p);

} // namespace tcs
