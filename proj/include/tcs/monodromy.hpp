#pragma once
// The fibered-complement monodromy as an integer matrix: factorization
// check, pseudo-Anosov certificate, exact fixed slopes, projective action
// on slopes, triangle certificates, and Dehn-twist word reduction.

#include <string>
#include <vector>

#include "tcs/circle.hpp"
#include "tcs/errors.hpp"
#include "tcs/slope.hpp"

namespace tcs {

struct MCMatrix {
    int64 a = 1, b = 0, c = 0, d = 1;

    int64 det() const { return a * d - b * c; }
    int64 trace() const { return a + d; }
    friend bool operator==(const MCMatrix&, const MCMatrix&) = default;
};

MCMatrix mat_mul(const MCMatrix& x, const MCMatrix& y);
MCMatrix mat_pow(const MCMatrix& x, int64 e);

// The monodromy matrix (-n+2, 1; -1, 0) for n >= 3.
MCMatrix phi_matrix(int64 n);

// Checks phi_matrix(n) against the product (1,0;-1,1)(1,1;0,1)(1,0;-1,1)^(n-1).
bool verify_phi_factorization(int64 n);

// |trace| > 2 for a determinant-1 matrix.
bool is_pseudo_anosov(const MCMatrix& m);

struct FixedSlopes {
    CirclePoint attracting;  // (n-2-sqrt(n^2-4n))/2, in (0, 1/2)
    CirclePoint repelling;   // (n-2+sqrt(n^2-4n))/2, above 2
};

FixedSlopes fixed_slopes(int64 n);

// Projective action on (den, num) vectors: (x, y) -> (ax+by, cx+dy), then
// take the slope of the image.
Slope act_on_slope(const MCMatrix& m, const Slope& s);

struct TriangleReport {
    bool adjacency_first = false;   // {inf, -1, 0} pairwise Farey-adjacent
    bool adjacency_second = false;  // {1/2, 2/3, 1} pairwise Farey-adjacent
    bool membership_first = false;  // {inf, -1, 0} inside the clockwise arc s_r -> s_a
    bool membership_second = false; // {1/2, 2/3, 1} inside the clockwise arc s_a -> s_r
    bool all_pass() const {
        return adjacency_first && adjacency_second && membership_first && membership_second;
    }
};

TriangleReport triangle_certificate(int64 n);

// Dehn-twist alphabet in the fixed commutation-swap order.
enum class Curve { Gamma = 0, Alpha = 1, Beta = 2, Delta = 3, Sigma = 4 };

const char* curve_name(Curve c);

struct TwistLetter {
    Curve curve = Curve::Alpha;
    int64 exponent = 1;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct TwistWord {
    std::vector<TwistLetter> letters;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

std::string to_string(const TwistWord& w);

// Normal form under: merge adjacent equal curves, drop zero exponents, and
// swap adjacent commuting letters into the fixed curve order. The only
// commuting pair here is (alpha, gamma).
TwistWord reduce_twist_word(const TwistWord& w);

// Normal form of alpha beta alpha^(n-1) gamma^-1 with the substitution
// alpha^-2 gamma delta sigma appended; all-positive for n >= 5.
TwistWord stein_witness(int64 n);

// True when every exponent is positive.
bool all_positive(const TwistWord& w);

// Sum of exponents.
int64 exponent_sum(const TwistWord& w);

} // namespace tcs
