#include "tcs/monodromy.hpp"

#include "tcs/farey.hpp"

namespace tcs {

MCMatrix mat_mul(const MCMatrix& x, const MCMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

MCMatrix mat_pow(const MCMatrix& x, int64 e) {
    MCMatrix acc;
    MCMatrix base = x;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

MCMatrix phi_matrix(int64 n) {
    if (n < 3) {
        throw OutOfDomain("monodromy matrix needs n >= 3");
    }
    return {-n + 2, 1, -1, 0};
}

bool verify_phi_factorization(int64 n) {
    MCMatrix lower{1, 0, -1, 1};
    MCMatrix upper{1, 1, 0, 1};
    MCMatrix product = mat_mul(mat_mul(lower, upper), mat_pow(lower, n - 1));
    return product == phi_matrix(n);
}

bool is_pseudo_anosov(const MCMatrix& m) {
    int64 t = m.trace();
    return t > 2 || t < -2;
}

FixedSlopes fixed_slopes(int64 n) {
    if (n < 5) {
        throw OutOfDomain("fixed slopes exist for n >= 5 only");
    }
    int64 d = n * n - 4 * n;
    FixedSlopes out;
    out.attracting = CirclePoint(QuadNum(n - 2, -1, 2, d));
    out.repelling = CirclePoint(QuadNum(n - 2, 1, 2, d));
    return out;
}

Slope act_on_slope(const MCMatrix& m, const Slope& s) {
    int64 x = s.den, y = s.num;
    return Slope(m.c * x + m.d * y, m.a * x + m.b * y);
}

TriangleReport triangle_certificate(int64 n) {
    FixedSlopes fs = fixed_slopes(n);
    TriangleReport rep;
    const Slope inf = Slope::infinity();
    const Slope triple_a[3] = {inf, Slope(-1), Slope(0)};
    const Slope triple_b[3] = {Slope(1, 2), Slope(2, 3), Slope(1)};
    rep.adjacency_first = farey_edge(triple_a[0], triple_a[1]) &&
                          farey_edge(triple_a[1], triple_a[2]) &&
                          farey_edge(triple_a[0], triple_a[2]);
    rep.adjacency_second = farey_edge(triple_b[0], triple_b[1]) &&
                           farey_edge(triple_b[1], triple_b[2]) &&
                           farey_edge(triple_b[0], triple_b[2]);
    rep.membership_first = true;
    rep.membership_second = true;
    for (const Slope& s : triple_a) {
        rep.membership_first = rep.membership_first &&
            clockwise_between(fs.repelling, CirclePoint(s), fs.attracting);
    }
    for (const Slope& s : triple_b) {
        rep.membership_second = rep.membership_second &&
            clockwise_between(fs.attracting, CirclePoint(s), fs.repelling);
    }
    return rep;
}

const char* curve_name(Curve c) {
    switch (c) {
        case Curve::Gamma: return "gamma";
        case Curve::Alpha: return "alpha";
        case Curve::Beta: return "beta";
        case Curve::Delta: return "delta";
        case Curve::Sigma: return "sigma";
    }
    throw UnknownSymbol("unnamed curve");
}

std::string to_string(const TwistWord& w) {
    if (w.letters.empty()) {
        return "1";
    }
    std::string out;
    for (const TwistLetter& l : w.letters) {
        if (!out.empty()) out += ' ';
        out += curve_name(l.curve);
        if (l.exponent != 1) {
            out += '^';
            out += std::to_string(l.exponent);
        }
    }
    return out;
}

namespace {

bool commute(Curve x, Curve y) {
    return (x == Curve::Alpha && y == Curve::Gamma) ||
           (x == Curve::Gamma && y == Curve::Alpha);
}

} // namespace

TwistWord reduce_twist_word(const TwistWord& w) {
    std::vector<TwistLetter> letters = w.letters;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<TwistLetter> next;
        for (const TwistLetter& l : letters) {
            if (l.exponent == 0) {
                changed = true;
                continue;
            }
            if (!next.empty() && next.back().curve == l.curve) {
                next.back().exponent += l.exponent;
                changed = true;
                if (next.back().exponent == 0) {
                    next.pop_back();
                }
                continue;
            }
            if (!next.empty() && commute(next.back().curve, l.curve) &&
                static_cast<int>(next.back().curve) > static_cast<int>(l.curve)) {
                TwistLetter moved = next.back();
                next.back() = l;
                next.push_back(moved);
                changed = true;
                continue;
            }
            next.push_back(l);
        }
        letters = std::move(next);
    }
    return {letters};
}

TwistWord stein_witness(int64 n) {
    if (n < 3) {
        throw OutOfDomain("witness word needs n >= 3");
    }
    TwistWord w;
    w.letters = {{Curve::Alpha, 1},  {Curve::Beta, 1},  {Curve::Alpha, n - 1},
                 {Curve::Gamma, -1}, {Curve::Alpha, -2}, {Curve::Gamma, 1},
                 {Curve::Delta, 1},  {Curve::Sigma, 1}};
    return reduce_twist_word(w);
}

bool all_positive(const TwistWord& w) {
    for (const TwistLetter& l : w.letters) {
        if (l.exponent <= 0) return false;
    }
    return true;
}

int64 exponent_sum(const TwistWord& w) {
    int64 sum = 0;
    for (const TwistLetter& l : w.letters) {
        sum += l.exponent;
    }
    return sum;
}

} // namespace tcs
