#include "tcs/circle.hpp"

#include <cmath>
#include <limits>

namespace tcs {

namespace {

int64 narrow(int128 v) {
    if (v > std::numeric_limits<int64>::max() || v < std::numeric_limits<int64>::min()) {
        throw std::overflow_error("quadratic arithmetic exceeds 64-bit range");
    }
    return static_cast<int64>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_square(int64 d) {
    if (d < 0) return false;
    int64 r = static_cast<int64>(std::llround(std::sqrt(static_cast<double>(d))));
    for (int64 s = r > 1 ? r - 1 : 0; s <= r + 1; ++s) {
        if (s * s == d) return true;
    }
    return false;
}

QuadNum make_quad(int128 a, int128 b, int128 c, int64 d) {
    if (c == 0) {
        throw OutOfDomain("quadratic number with zero denominator");
    }
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    int128 g = gcd128(gcd128(a, b), c);
    if (g == 0) g = 1;
    QuadNum q;
    q.a = narrow(a / g);
    q.b = narrow(b / g);
    q.c = narrow(c / g);
    q.d = d;
    return q;
}

} // namespace

QuadNum::QuadNum(int64 a_, int64 b_, int64 c_, int64 d_) {
    if (d_ <= 0 || is_square(d_)) {
        throw OutOfDomain("quadratic discriminant must be a positive non-square");
    }
    *this = make_quad(a_, b_, c_, d_);
}

QuadNum quad_from_rational(const Slope& r, int64 d) {
    if (r.is_infinite()) {
        throw InfiniteInput("cannot embed infinity into a quadratic field");
    }
    return QuadNum(r.num, 0, r.den, d);
}

namespace {

void require_same_field(const QuadNum& x, const QuadNum& y) {
    if (x.d != y.d) {
        throw OutOfDomain("mixed quadratic fields in field arithmetic");
    }
}

} // namespace

QuadNum quad_add(const QuadNum& x, const QuadNum& y) {
    require_same_field(x, y);
    return make_quad(static_cast<int128>(x.a) * y.c + static_cast<int128>(y.a) * x.c,
                     static_cast<int128>(x.b) * y.c + static_cast<int128>(y.b) * x.c,
                     static_cast<int128>(x.c) * y.c, x.d);
}

QuadNum quad_sub(const QuadNum& x, const QuadNum& y) {
    require_same_field(x, y);
    return make_quad(static_cast<int128>(x.a) * y.c - static_cast<int128>(y.a) * x.c,
                     static_cast<int128>(x.b) * y.c - static_cast<int128>(y.b) * x.c,
                     static_cast<int128>(x.c) * y.c, x.d);
}

QuadNum quad_mul(const QuadNum& x, const QuadNum& y) {
    require_same_field(x, y);
    int128 a = static_cast<int128>(x.a) * y.a + static_cast<int128>(x.b) * y.b * x.d;
    int128 b = static_cast<int128>(x.a) * y.b + static_cast<int128>(x.b) * y.a;
    return make_quad(a, b, static_cast<int128>(x.c) * y.c, x.d);
}

QuadNum quad_div(const QuadNum& x, const QuadNum& y) {
    require_same_field(x, y);
    // 1/((a + b*sqrt(d))/c) = c*(a - b*sqrt(d)) / (a^2 - b^2 d)
    int128 norm = static_cast<int128>(y.a) * y.a - static_cast<int128>(y.b) * y.b * y.d;
    if (norm == 0) {
        throw OutOfDomain("division by zero quadratic number");
    }
    QuadNum inv = make_quad(static_cast<int128>(y.c) * y.a,
                            -static_cast<int128>(y.c) * y.b,
                            norm, y.d);
    return quad_mul(x, inv);
}

double quad_to_double(const QuadNum& x) {
    return (static_cast<double>(x.a) + static_cast<double>(x.b) * std::sqrt(static_cast<double>(x.d))) /
           static_cast<double>(x.c);
}

int sign_quad_sum(int128 a, int128 b, int64 d) {
    auto sgn = [](int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    // Opposite signs: compare a^2 against b^2 d. The term with the larger
    // square dominates, so the sign follows the dominant term.
    int128 val = a * a - b * b * static_cast<int128>(d);
    if (val == 0) return 0;
    return (val > 0) ? sgn(a) : sgn(b);
}

namespace {

// Sign of a + b*sqrt(d1) + c*sqrt(d2) with d1 != d2, by isolating one radical
// and squaring; the inner comparison reduces to a single-radical sign.
int sign_mixed_radicals(int128 a, int128 b, int64 d1, int128 c, int64 d2) {
    auto sgn = [](int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
    if (c == 0) return sign_quad_sum(a, b, d1);
    if (b == 0) return sign_quad_sum(a, c, d2);
    int left = sign_quad_sum(a, b, d1); // sign of a + b*sqrt(d1)
    int right = -sgn(c);                // sign of -c*sqrt(d2)
    if (left != right) {
        if (left > right) return 1;
        return -1;
    }
    // Same nonzero sign s: |L| vs |R| decides; compare squares.
    int128 diff = a * a + b * b * static_cast<int128>(d1) - c * c * static_cast<int128>(d2);
    int t = sign_quad_sum(diff, 2 * a * b, d1);
    return left > 0 ? t : -t;
}

} // namespace

bool points_equal(const CirclePoint& a, const CirclePoint& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() && b.is_infinite();
    }
    return cmp(a, b) == 0;
}

int cmp(const CirclePoint& a, const CirclePoint& b) {
    if (a.is_infinite() || b.is_infinite()) {
        throw InfiniteInput("cannot linearly compare the point at infinity");
    }
    const bool ar = (a.kind == CirclePoint::Kind::Rational);
    const bool br = (b.kind == CirclePoint::Kind::Rational);
    if (ar && br) {
        return cmp(a.rational, b.rational);
    }
    if (ar && !br) {
        return -cmp(b, a);
    }
    const QuadNum& x = a.quadratic;
    if (br) {
        // (a1 + b1*sqrt(d))/c1 vs p/q  <=>  sign((a1 q - p c1) + b1 q sqrt(d))
        const Slope& r = b.rational;
        int128 A = static_cast<int128>(x.a) * r.den - static_cast<int128>(r.num) * x.c;
        int128 B = static_cast<int128>(x.b) * r.den;
        return sign_quad_sum(A, B, x.d);
    }
    const QuadNum& y = b.quadratic;
    int128 A = static_cast<int128>(x.a) * y.c - static_cast<int128>(y.a) * x.c;
    if (x.d == y.d) {
        int128 B = static_cast<int128>(x.b) * y.c - static_cast<int128>(y.b) * x.c;
        return sign_quad_sum(A, B, x.d);
    }
    int128 B = static_cast<int128>(x.b) * y.c;
    int128 C = -static_cast<int128>(y.b) * x.c;
    return sign_mixed_radicals(A, B, x.d, C, y.d);
}

bool clockwise_between(const CirclePoint& a, const CirclePoint& x, const CirclePoint& b) {
    if (points_equal(a, b)) {
        throw DegenerateArc("clockwise_between requires distinct arc endpoints");
    }
    if (points_equal(x, a) || points_equal(x, b)) {
        return false;
    }
    // Strict clockwise triple test on the circle R union {inf}, clockwise =
    // increasing with a single wrap through infinity. At most one of the
    // three points is infinite here.
    if (a.is_infinite()) return cmp(x, b) < 0;
    if (x.is_infinite()) return cmp(b, a) < 0;
    if (b.is_infinite()) return cmp(a, x) < 0;
    int ax = cmp(a, x);
    int xb = cmp(x, b);
    int ba = cmp(b, a);
    return (ax < 0 && xb < 0) || (xb < 0 && ba < 0) || (ba < 0 && ax < 0);
}

std::string to_string(const CirclePoint& p) {
    if (p.kind == CirclePoint::Kind::Rational) {
        return to_string(p.rational);
    }
    const QuadNum& q = p.quadratic;
    std::string s = "(" + std::to_string(q.a);
    s += (q.b >= 0 ? "+" : "-");
    s += std::to_string(q.b >= 0 ? q.b : -q.b) + "*sqrt(" + std::to_string(q.d) + "))/";
    s += std::to_string(q.c);
    return s;
}

} // namespace tcs
