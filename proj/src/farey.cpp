#include "tcs/farey.hpp"

#include <algorithm>
#include <limits>

namespace tcs {

namespace {

int128 cross(const Slope& a, const Slope& b) {
    return static_cast<int128>(a.num) * b.den - static_cast<int128>(b.num) * a.den;
}

// Bezout coefficients (u, v) with u*p + v*q = 1 for a normalized slope p/q.
void bezout(int64 p, int64 q, int64& u, int64& v) {
    int64 old_r = p, r = q;
    int64 old_u = 1, uu = 0;
    int64 old_v = 0, vv = 1;
    while (r != 0) {
        int64 k = old_r / r;
        int64 t = old_r - k * r; old_r = r; r = t;
        t = old_u - k * uu; old_u = uu; uu = t;
        t = old_v - k * vv; old_v = vv; vv = t;
    }
    if (old_r < 0) {
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
}

int128 floor_div(int128 a, int128 b) {
    int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int64 narrow(int128 v) {
    if (v > std::numeric_limits<int64>::max() || v < std::numeric_limits<int64>::min()) {
        throw std::overflow_error("slope arithmetic exceeds 64-bit range");
    }
    return static_cast<int64>(v);
}

} // namespace

bool farey_edge(const Slope& a, const Slope& b) {
    int128 det = cross(a, b);
    return det == 1 || det == -1;
}

Slope mediant(const Slope& a, const Slope& b, InfSide side) {
    if (!farey_edge(a, b)) {
        throw NotAdjacent("mediant needs Farey-adjacent slopes");
    }
    const Slope* fin = &a;
    const Slope* inf = nullptr;
    if (a.is_infinite()) {
        inf = &a;
        fin = &b;
    } else if (b.is_infinite()) {
        inf = &b;
    }
    if (inf == nullptr) {
        return Slope(a.num + b.num, a.den + b.den);
    }
    int64 lift = 1;
    if (side == InfSide::Left || (side == InfSide::Auto && fin->num < 0)) {
        lift = -1;
    }
    return Slope(fin->num + lift, fin->den);
}

Slope bypass_slope(const Slope& s, const Slope& r, int64 flips) {
    if (s == r) {
        throw DegenerateInput("bypass needs distinct dividing and ruling slopes");
    }
    if (farey_edge(s, r)) {
        return r;
    }
    const int64 p = s.num;
    const int64 q = s.den;
    int64 u = 0, v = 0;
    bezout(p, q, u, v);
    // Transport s to infinity by M = [[p, -q], [v, u]] acting on (den, num)
    // vectors; the image of r is t = y/x below.
    int128 x = static_cast<int128>(p) * r.den - static_cast<int128>(q) * r.num;
    int128 y = static_cast<int128>(v) * r.den + static_cast<int128>(u) * r.num;
    int128 g = (flips % 2 != 0) ? floor_div(y, x) : -floor_div(-y, x);
    // Transport the integer neighbor g back through the inverse map.
    return Slope(narrow(p * g - v), narrow(u + q * g));
}

bool in_S(const Slope& r, const Slope& s) {
    if (r.is_infinite()) {
        throw InfiniteInput("S(r) needs a finite base slope");
    }
    return !s.is_infinite() && farey_edge(r, s) && r < s;
}

std::vector<Slope> enumerate_S(const Slope& r, int64 den_bound) {
    if (r.is_infinite()) {
        throw InfiniteInput("S(r) needs a finite base slope");
    }
    std::vector<Slope> out;
    for (int64 den = 1; den <= den_bound; ++den) {
        for (int64 sign : {-1, 1}) {
            int128 target = static_cast<int128>(r.num) * den + sign;
            if (target % r.den != 0) continue;
            int128 num = target / r.den;
            if (num > std::numeric_limits<int64>::max() || num < std::numeric_limits<int64>::min()) continue;
            Slope s(static_cast<int64>(num), den);
            if (s.den == den && r < s) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RegionGuards region_guards(const Slope& s) {
    RegionGuards g;
    if (s.is_infinite()) {
        return g;
    }
    g.in_R_plus = (s >= Slope(2) && s < Slope(4)) || s >= Slope(5);
    g.exceptional = (s.num == 4 * s.den + 1);
    g.in_gap = s > Slope(4) && s <= Slope(5);
    return g;
}

ThickeningResult thicken_positive(const Slope& s) {
    if (!s.is_infinite() && s <= Slope(2)) {
        throw OutOfDomain("positive thickening starts above slope 2");
    }
    ThickeningResult res;
    res.path.push_back(s);
    Slope cur = s;
    while (!cur.is_infinite()) {
        RegionGuards g = region_guards(cur);
        if (cur < Slope(2) || g.exceptional) {
            res.kind = ThickeningResult::Kind::Stalled;
            res.stalled_at = cur;
            return res;
        }
        cur = bypass_slope(cur, Slope(0), 1);
        res.path.push_back(cur);
    }
    res.kind = ThickeningResult::Kind::ReachedInfinity;
    return res;
}

ThickeningResult thicken_negative(const Slope& s) {
    if (s.is_infinite() || s >= Slope(0)) {
        throw OutOfDomain("negative thickening starts below slope 0");
    }
    ThickeningResult res;
    res.path.push_back(s);
    Slope cur = s;
    while (cur.num != -1) {
        cur = bypass_slope(cur, Slope(0), 1);
        res.path.push_back(cur);
    }
    res.kind = ThickeningResult::Kind::ReachedOne;
    res.structural_tail = {Slope(0), Slope(1)};
    return res;
}

} // namespace tcs
