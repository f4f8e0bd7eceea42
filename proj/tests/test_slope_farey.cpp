#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "tcs/circle.hpp"
#include "tcs/farey.hpp"
#include "tcs/slope.hpp"

#include "oracles.hpp"

using namespace tcs;

TEST_CASE("slopes normalize to lowest terms with nonnegative denominator") {
    CHECK(Slope(2, 4) == Slope(1, 2));
    CHECK(Slope(-2, 4) == Slope(-1, 2));
    CHECK(Slope(1, -2) == Slope(-1, 2));
    CHECK(Slope(-3, -6) == Slope(1, 2));
    CHECK(Slope(0, 7) == Slope(0));
    CHECK(Slope(5, 0) == Slope::infinity());
    CHECK(Slope(-1, 0) == Slope::infinity());
    CHECK(Slope(7).is_integer());
    CHECK(Slope(6, 3).is_integer());
    CHECK(Slope::infinity().is_infinite());
    CHECK_FALSE(Slope(1, 2).is_infinite());
    CHECK_THROWS_AS(Slope(0, 0), OutOfDomain);
}

TEST_CASE("slope comparisons are exact and reject infinity") {
    CHECK(Slope(1, 3) < Slope(1, 2));
    CHECK(Slope(-1, 2) < Slope(1, 3));
    CHECK(Slope(-2) < Slope(-3, 2));
    CHECK(Slope(7, 3) > Slope(2));
    CHECK(Slope(5, 10) <= Slope(1, 2));
    CHECK(Slope(5, 10) >= Slope(1, 2));
    CHECK(cmp(Slope(2, 3), Slope(2, 3)) == 0);
    CHECK_THROWS_AS(cmp(Slope(1), Slope::infinity()), InfiniteInput);
    CHECK_THROWS_AS(Slope::infinity() < Slope(1), InfiniteInput);
}

TEST_CASE("slope field operations") {
    CHECK(add(Slope(1, 2), Slope(1, 3)) == Slope(5, 6));
    CHECK(sub(Slope(1, 2), Slope(1, 3)) == Slope(1, 6));
    CHECK(mul(Slope(2, 3), Slope(3, 4)) == Slope(1, 2));
    CHECK(div(Slope(1, 2), Slope(3, 4)) == Slope(2, 3));
    CHECK(neg(Slope(-5, 7)) == Slope(5, 7));
    CHECK(recip(Slope(2, 3)) == Slope(3, 2));
    CHECK(recip(Slope(-2, 3)) == Slope(-3, 2));
    CHECK(recip(Slope(0)) == Slope::infinity());
    CHECK(recip(Slope::infinity()) == Slope(0));
    CHECK_THROWS_AS(div(Slope(1), Slope(0)), OutOfDomain);
    CHECK_THROWS_AS(add(Slope::infinity(), Slope(1)), InfiniteInput);
    CHECK_THROWS_AS(neg(Slope::infinity()), InfiniteInput);
}

TEST_CASE("floor of a slope rounds toward minus infinity") {
    CHECK(floor_of(Slope(7, 2)) == 3);
    CHECK(floor_of(Slope(-7, 2)) == -4);
    CHECK(floor_of(Slope(-1, 3)) == -1);
    CHECK(floor_of(Slope(6, 3)) == 2);
    CHECK(floor_of(Slope(-6, 3)) == -2);
    CHECK_THROWS_AS(floor_of(Slope::infinity()), InfiniteInput);
}

TEST_CASE("slope literals parse and print in canonical form") {
    CHECK(parse_slope("inf") == Slope::infinity());
    CHECK(parse_slope("-inf") == Slope::infinity());
    CHECK(parse_slope("7/2") == Slope(7, 2));
    CHECK(parse_slope("-5") == Slope(-5));
    CHECK(parse_slope("+3") == Slope(3));
    CHECK(parse_slope("0/7") == Slope(0));
    CHECK(parse_slope("3/-6") == Slope(-1, 2));
    CHECK_THROWS_AS(parse_slope("0/0"), ParseError);
    CHECK_THROWS_AS(parse_slope(""), ParseError);
    CHECK_THROWS_AS(parse_slope("abc"), ParseError);
    CHECK_THROWS_AS(parse_slope("1/"), ParseError);
    CHECK_THROWS_AS(parse_slope("1.5"), ParseError);
    CHECK_THROWS_AS(parse_slope("1/2/3"), ParseError);

    CHECK(to_string(Slope::infinity()) == "inf");
    CHECK(to_string(Slope(7, 2)) == "7/2");
    CHECK(to_string(Slope(-1, 2)) == "-1/2");
    CHECK(to_string(Slope(5)) == "5");
    CHECK(to_string(Slope(0)) == "0");

    for (int64 num = -20; num <= 20; ++num) {
        for (int64 den = 1; den <= 20; ++den) {
            Slope s(num, den);
            CHECK(parse_slope(to_string(s)) == s);
        }
    }
}

TEST_CASE("quadratic numbers normalize and validate the discriminant") {
    QuadNum q(2, 2, 4, 2);
    CHECK(q.a == 1);
    CHECK(q.b == 1);
    CHECK(q.c == 2);
    CHECK(q.d == 2);
    QuadNum flipped(1, 1, -2, 2);
    CHECK(flipped.a == -1);
    CHECK(flipped.b == -1);
    CHECK(flipped.c == 2);
    QuadNum zero(0, 0, 5, 7);
    CHECK(zero.a == 0);
    CHECK(zero.c == 1);
    CHECK_THROWS_AS(QuadNum(1, 1, 0, 2), OutOfDomain);
    CHECK_THROWS_AS(QuadNum(1, 1, 1, 4), OutOfDomain);
    CHECK_THROWS_AS(QuadNum(1, 1, 1, 9), OutOfDomain);
    CHECK_THROWS_AS(QuadNum(1, 1, 1, 0), OutOfDomain);
    CHECK_THROWS_AS(QuadNum(1, 1, 1, -3), OutOfDomain);
}

TEST_CASE("quadratic field arithmetic") {
    QuadNum sqrt5(0, 1, 1, 5);
    QuadNum one = quad_from_rational(Slope(1), 5);
    QuadNum golden(1, 1, 2, 5);
    CHECK(quad_mul(sqrt5, sqrt5) == quad_from_rational(Slope(5), 5));
    CHECK(quad_mul(golden, golden) == quad_add(golden, one));
    CHECK(quad_div(one, golden) == quad_sub(golden, one));
    CHECK(quad_sub(golden, golden) == quad_from_rational(Slope(0), 5));
    CHECK_THROWS_AS(quad_div(golden, quad_from_rational(Slope(0), 5)), OutOfDomain);
    CHECK_THROWS_AS(quad_add(QuadNum(0, 1, 1, 2), QuadNum(0, 1, 1, 3)), OutOfDomain);
    CHECK_THROWS_AS(quad_from_rational(Slope::infinity(), 5), InfiniteInput);
}

TEST_CASE("sign of a + b*sqrt(d) is computed exactly") {
    CHECK(sign_quad_sum(1, -1, 2) == -1);
    CHECK(sign_quad_sum(3, -2, 2) == 1);
    CHECK(sign_quad_sum(2, -1, 5) == -1);
    CHECK(sign_quad_sum(-3, 2, 2) == -1);
    CHECK(sign_quad_sum(-2, 1, 5) == 1);
    CHECK(sign_quad_sum(0, 0, 2) == 0);
    CHECK(sign_quad_sum(0, -4, 7) == -1);
    CHECK(sign_quad_sum(9, 0, 7) == 1);
}

TEST_CASE("circle points compare exactly across kinds") {
    CirclePoint sqrt2{QuadNum(0, 1, 1, 2)};
    CirclePoint sqrt3{QuadNum(0, 1, 1, 3)};
    CirclePoint sqrt6{QuadNum(0, 1, 1, 6)};
    CirclePoint onePlusSqrt2{QuadNum(1, 1, 1, 2)};
    CHECK(cmp(sqrt2, CirclePoint(Slope(3, 2))) < 0);
    CHECK(cmp(CirclePoint(Slope(3, 2)), sqrt2) > 0);
    CHECK(cmp(sqrt2, sqrt3) < 0);
    CHECK(cmp(onePlusSqrt2, sqrt6) < 0);
    CHECK(cmp(sqrt6, onePlusSqrt2) > 0);
    CHECK(cmp(CirclePoint(QuadNum(3, -1, 2, 5)), CirclePoint(QuadNum(3, 1, 2, 5))) < 0);
    CHECK(points_equal(CirclePoint(QuadNum(3, 0, 2, 5)), CirclePoint(Slope(3, 2))));
    CHECK(points_equal(CirclePoint(Slope::infinity()), CirclePoint(Slope::infinity())));
    CHECK_FALSE(points_equal(CirclePoint(Slope::infinity()), CirclePoint(Slope(1))));
    CHECK_THROWS_AS(cmp(sqrt2, CirclePoint(Slope::infinity())), InfiniteInput);
}

TEST_CASE("clockwise order is increasing value with one wrap through infinity") {
    const CirclePoint ring[7] = {
        CirclePoint(Slope(0)),  CirclePoint(Slope(1, 2)),      CirclePoint(Slope(1)),
        CirclePoint(Slope(2)),  CirclePoint(Slope::infinity()), CirclePoint(Slope(-2)),
        CirclePoint(Slope(-1)),
    };
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            for (int k = 0; k < 7; ++k) {
                if (i == j || j == k || i == k) continue;
                bool expected = ((j - i + 7) % 7) < ((k - i + 7) % 7);
                CHECK(clockwise_between(ring[i], ring[j], ring[k]) == expected);
            }
        }
    }
    CHECK_FALSE(clockwise_between(ring[0], ring[0], ring[2]));
    CHECK_FALSE(clockwise_between(ring[0], ring[2], ring[2]));
    CHECK_THROWS_AS(clockwise_between(ring[1], ring[0], ring[1]), DegenerateArc);
}

TEST_CASE("quadratic endpoints bound arcs exactly") {
    CirclePoint low{QuadNum(3, -1, 2, 5)};
    CirclePoint high{QuadNum(3, 1, 2, 5)};
    CHECK(clockwise_between(high, CirclePoint(Slope::infinity()), low));
    CHECK(clockwise_between(high, CirclePoint(Slope(-1)), low));
    CHECK(clockwise_between(high, CirclePoint(Slope(0)), low));
    CHECK_FALSE(clockwise_between(high, CirclePoint(Slope(1)), low));
    CHECK(clockwise_between(low, CirclePoint(Slope(1, 2)), high));
    CHECK(clockwise_between(low, CirclePoint(Slope(1)), high));
    CHECK_FALSE(clockwise_between(low, CirclePoint(Slope(0)), high));
    CHECK(to_string(low) == "(3-1*sqrt(5))/2");
    CHECK(to_string(high) == "(3+1*sqrt(5))/2");
}

TEST_CASE("farey edge is the unimodular pairing") {
    CHECK(farey_edge(Slope(0), Slope::infinity()));
    CHECK(farey_edge(Slope(1, 2), Slope(1, 3)));
    CHECK(farey_edge(Slope(5, 2), Slope(3)));
    CHECK(farey_edge(Slope(-5, 7), Slope(-2, 3)));
    CHECK_FALSE(farey_edge(Slope(1, 2), Slope(3, 4)));
    CHECK_FALSE(farey_edge(Slope(2, 3), Slope(2, 3)));
    CHECK_FALSE(farey_edge(Slope::infinity(), Slope(5, 2)));
    CHECK(farey_edge(Slope::infinity(), Slope(7)));
    for (int64 den = 1; den <= 6; ++den) {
        for (int64 num = -15; num <= 15; ++num) {
            Slope s(num, den);
            if (s.den != den) continue;
            for (const Slope& t : oracle::neighbors(s, 8)) {
                CHECK(farey_edge(s, t));
                CHECK(farey_edge(t, s));
            }
        }
    }
}

TEST_CASE("mediant of adjacent slopes is adjacent to both and lies between") {
    CHECK(mediant(Slope(1, 2), Slope(1, 3)) == Slope(2, 5));
    CHECK(mediant(Slope(0), Slope(1)) == Slope(1, 2));
    CHECK(mediant(Slope(3), Slope::infinity()) == Slope(4));
    CHECK(mediant(Slope(3), Slope::infinity(), InfSide::Left) == Slope(2));
    CHECK(mediant(Slope(-3), Slope::infinity()) == Slope(-4));
    CHECK(mediant(Slope(-3), Slope::infinity(), InfSide::Right) == Slope(-2));
    CHECK(mediant(Slope(0), Slope::infinity()) == Slope(1));
    CHECK(mediant(Slope(0), Slope::infinity(), InfSide::Left) == Slope(-1));
    CHECK_THROWS_AS(mediant(Slope(1, 2), Slope(3, 4)), NotAdjacent);
    CHECK_THROWS_AS(mediant(Slope::infinity(), Slope(5, 2)), NotAdjacent);

    for (int64 den = 1; den <= 6; ++den) {
        for (int64 num = -15; num <= 15; ++num) {
            Slope s(num, den);
            if (s.den != den) continue;
            for (const Slope& t : oracle::neighbors(s, 8)) {
                if (t.is_infinite()) continue;
                Slope m = mediant(s, t);
                CHECK(farey_edge(s, m));
                CHECK(farey_edge(m, t));
                if (s < t) {
                    CHECK((s < m && m < t));
                } else {
                    CHECK((t < m && m < s));
                }
            }
        }
    }
}

TEST_CASE("bypass slope frozen examples") {
    CHECK(bypass_slope(Slope(5, 2), Slope(0), 1) == Slope(3));
    CHECK(bypass_slope(Slope(3), Slope(0), 1) == Slope::infinity());
    CHECK(bypass_slope(Slope(-5, 7), Slope(0), 1) == Slope(-2, 3));
    CHECK(bypass_slope(Slope(5, 2), Slope(0), 0) == Slope(2));
    CHECK(bypass_slope(Slope(2), Slope(0), 1) == Slope::infinity());
    CHECK(bypass_slope(Slope(2), Slope(0), 0) == Slope(1));
    CHECK(bypass_slope(Slope(1, 2), Slope(0), 1) == Slope(0));
    CHECK(bypass_slope(Slope(22, 5), Slope(0), 1) == Slope(9, 2));
    CHECK(bypass_slope(Slope(14, 3), Slope(0), 1) == Slope(5));
    CHECK_THROWS_AS(bypass_slope(Slope(0), Slope(0), 1), DegenerateInput);
    CHECK_THROWS_AS(bypass_slope(Slope::infinity(), Slope::infinity(), 1), DegenerateInput);
}

TEST_CASE("bypass slope depends only on flip parity") {
    const Slope s(7, 3);
    const Slope r(0);
    CHECK(bypass_slope(s, r, 3) == bypass_slope(s, r, 1));
    CHECK(bypass_slope(s, r, 2) == bypass_slope(s, r, 0));
    CHECK(bypass_slope(s, r, -1) == bypass_slope(s, r, 1));
    CHECK(bypass_slope(s, r, -2) == bypass_slope(s, r, 0));
}

TEST_CASE("bypass result is the extremal neighbor along the directed arc") {
    std::vector<Slope> pool;
    for (int64 den = 1; den <= 6; ++den) {
        for (int64 num = -18; num <= 18; ++num) {
            Slope s(num, den);
            if (s.den == den) pool.push_back(s);
        }
    }
    pool.push_back(Slope::infinity());
    const std::vector<Slope> rulings = {
        Slope(0),     Slope(1),    Slope(-1),          Slope(1, 2),
        Slope(-5, 7), Slope(7, 3), Slope::infinity(),
    };
    for (const Slope& s : pool) {
        for (const Slope& r : rulings) {
            if (s == r) continue;
            for (int flips : {0, 1}) {
                Slope res = bypass_slope(s, r, flips);
                CHECK(oracle::bypass_is_optimal(s, r, flips, res));
            }
        }
    }
}

TEST_CASE("S(r) membership and enumeration") {
    CHECK(in_S(Slope(5, 2), Slope(3)));
    CHECK_FALSE(in_S(Slope(5, 2), Slope(2)));
    CHECK_FALSE(in_S(Slope(5, 2), Slope(7, 3)));
    CHECK_FALSE(in_S(Slope(5, 2), Slope::infinity()));
    CHECK(in_S(Slope(-5, 7), Slope(-2, 3)));
    CHECK_THROWS_AS(in_S(Slope::infinity(), Slope(2)), InfiniteInput);
    CHECK_THROWS_AS(enumerate_S(Slope::infinity(), 5), InfiniteInput);

    const std::vector<Slope> expected_52 = {Slope(23, 9), Slope(18, 7), Slope(13, 5),
                                            Slope(8, 3), Slope(3)};
    CHECK(enumerate_S(Slope(5, 2), 10) == expected_52);

    for (int64 den = 1; den <= 5; ++den) {
        for (int64 num = -12; num <= 12; ++num) {
            Slope r(num, den);
            if (r.den != den) continue;
            std::vector<Slope> got = enumerate_S(r, 9);
            for (std::size_t i = 0; i + 1 < got.size(); ++i) {
                CHECK(got[i] < got[i + 1]);
            }
            std::vector<Slope> expect;
            for (const Slope& t : oracle::neighbors(r, 9)) {
                if (!t.is_infinite() && r < t) expect.push_back(t);
            }
            std::sort(expect.begin(), expect.end());
            CHECK(got == expect);
            for (const Slope& s : got) {
                CHECK(in_S(r, s));
            }
        }
    }
}

TEST_CASE("S(r) of a negative base contains no positive slope") {
    for (int64 den = 1; den <= 12; ++den) {
        for (int64 num = -40; num <= -1; ++num) {
            Slope r(num, den);
            if (r.den != den) continue;
            for (const Slope& s : enumerate_S(r, 25)) {
                CHECK(s <= Slope(0));
            }
        }
    }
}

TEST_CASE("region guards") {
    RegionGuards g = region_guards(Slope(9, 2));
    CHECK_FALSE(g.in_R_plus);
    CHECK(g.exceptional);
    CHECK(g.in_gap);

    g = region_guards(Slope(2));
    CHECK(g.in_R_plus);
    CHECK_FALSE(g.exceptional);
    CHECK_FALSE(g.in_gap);

    g = region_guards(Slope(4));
    CHECK_FALSE(g.in_R_plus);
    CHECK_FALSE(g.exceptional);
    CHECK_FALSE(g.in_gap);

    g = region_guards(Slope(5));
    CHECK(g.in_R_plus);
    CHECK(g.exceptional);
    CHECK(g.in_gap);

    g = region_guards(Slope(13, 3));
    CHECK_FALSE(g.in_R_plus);
    CHECK(g.exceptional);
    CHECK(g.in_gap);

    g = region_guards(Slope(7, 2));
    CHECK(g.in_R_plus);
    CHECK_FALSE(g.exceptional);
    CHECK_FALSE(g.in_gap);

    g = region_guards(Slope(-3));
    CHECK_FALSE(g.in_R_plus);
    CHECK_FALSE(g.exceptional);
    CHECK_FALSE(g.in_gap);

    g = region_guards(Slope::infinity());
    CHECK_FALSE(g.in_R_plus);
    CHECK_FALSE(g.exceptional);
    CHECK_FALSE(g.in_gap);
}

TEST_CASE("positive thickening paths") {
    ThickeningResult seven_halves = thicken_positive(Slope(7, 2));
    CHECK(seven_halves.reached_infinity());
    CHECK(seven_halves.path ==
          std::vector<Slope>{Slope(7, 2), Slope(4), Slope::infinity()});

    ThickeningResult stalled = thicken_positive(Slope(22, 5));
    CHECK(stalled.stalled());
    CHECK(stalled.stalled_at == Slope(9, 2));
    CHECK(stalled.path == std::vector<Slope>{Slope(22, 5), Slope(9, 2)});

    ThickeningResult stalled5 = thicken_positive(Slope(23, 5));
    CHECK(stalled5.stalled());
    CHECK(stalled5.stalled_at == Slope(5));
    CHECK(stalled5.path == std::vector<Slope>{Slope(23, 5), Slope(14, 3), Slope(5)});

    ThickeningResult from_inf = thicken_positive(Slope::infinity());
    CHECK(from_inf.reached_infinity());
    CHECK(from_inf.path == std::vector<Slope>{Slope::infinity()});

    CHECK_THROWS_AS(thicken_positive(Slope(2)), OutOfDomain);
    CHECK_THROWS_AS(thicken_positive(Slope(3, 2)), OutOfDomain);
    CHECK_THROWS_AS(thicken_positive(Slope(-1)), OutOfDomain);
}

TEST_CASE("negative thickening paths") {
    ThickeningResult res = thicken_negative(Slope(-5, 7));
    CHECK(res.reached_one());
    CHECK(res.path == std::vector<Slope>{Slope(-5, 7), Slope(-2, 3), Slope(-1, 2)});
    CHECK(res.structural_tail == std::vector<Slope>{Slope(0), Slope(1)});

    ThickeningResult trivial = thicken_negative(Slope(-1, 2));
    CHECK(trivial.reached_one());
    CHECK(trivial.path == std::vector<Slope>{Slope(-1, 2)});

    ThickeningResult chain = thicken_negative(Slope(-7, 5));
    CHECK(chain.reached_one());
    CHECK(chain.path == std::vector<Slope>{Slope(-7, 5), Slope(-4, 3), Slope(-1)});

    CHECK_THROWS_AS(thicken_negative(Slope(0)), OutOfDomain);
    CHECK_THROWS_AS(thicken_negative(Slope(1, 2)), OutOfDomain);
    CHECK_THROWS_AS(thicken_negative(Slope::infinity()), OutOfDomain);
}

TEST_CASE("negative thickening sweeps to a -1/k slope along adjacent steps") {
    for (int64 den = 1; den <= 12; ++den) {
        for (int64 num = -60; num <= -1; ++num) {
            Slope s(num, den);
            if (s.den != den) continue;
            ThickeningResult res = thicken_negative(s);
            CHECK(res.reached_one());
            CHECK(res.path.front() == s);
            CHECK(res.path.back().num == -1);
            CHECK(res.structural_tail == std::vector<Slope>{Slope(0), Slope(1)});
            for (std::size_t i = 0; i + 1 < res.path.size(); ++i) {
                CHECK(res.path[i] < res.path[i + 1]);
                CHECK(farey_edge(res.path[i], res.path[i + 1]));
            }
        }
    }
}

TEST_CASE("positive thickening from S(r) stays clear of the guard regions") {
    for (int64 den = 1; den <= 8; ++den) {
        for (int64 num = 2; num <= 40; ++num) {
            Slope r(num, den);
            if (r.den != den || !region_guards(r).in_R_plus) continue;
            for (const Slope& s : enumerate_S(r, 20)) {
                CHECK(s > Slope(2));
                CHECK_FALSE(region_guards(s).in_gap);
                ThickeningResult res = thicken_positive(s);
                CHECK(res.reached_infinity());
                for (const Slope& step : res.path) {
                    if (step.is_infinite()) continue;
                    CHECK(step > Slope(2));
                    CHECK_FALSE(region_guards(step).in_gap);
                }
                for (std::size_t i = 0; i + 1 < res.path.size(); ++i) {
                    CHECK(farey_edge(res.path[i], res.path[i + 1]));
                    if (!res.path[i + 1].is_infinite()) {
                        CHECK(res.path[i] < res.path[i + 1]);
                    }
                }
            }
        }
    }
}
