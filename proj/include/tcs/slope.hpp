#pragma once

// Extended rational slopes: the vertices of the Farey graph, Q union {inf}.
// A slope is stored in lowest terms with a non-negative denominator; the
// single point at infinity is 1/0 (the spelling -1/0 normalizes to it).
// All arithmetic and comparisons are exact; cross products run in 128-bit.

#include <cstdint>
#include <string>

#include "tcs/errors.hpp"

namespace tcs {

using int64 = std::int64_t;
using int128 = __int128;

struct Slope {
    int64 num = 0;
    int64 den = 1;

    constexpr Slope() = default;
    Slope(int64 n);            // integer slope n/1
    Slope(int64 n, int64 d);   // normalizes sign and gcd; d may be negative

    static Slope infinity() {
        Slope s;
        s.num = 1;
        s.den = 0;
        return s;
    }

    bool is_infinite() const { return den == 0; }
    bool is_integer() const { return den == 1; }

    friend bool operator==(const Slope&, const Slope&) = default;
};

// Three-way comparison of finite slopes; throws InfiniteInput on infinity.
int cmp(const Slope& a, const Slope& b);

bool operator<(const Slope& a, const Slope& b);
bool operator<=(const Slope& a, const Slope& b);
bool operator>(const Slope& a, const Slope& b);
bool operator>=(const Slope& a, const Slope& b);

// Exact field operations on finite slopes (InfiniteInput otherwise), except
// recip which is projective: recip(0) = inf and recip(inf) = 0.
Slope add(const Slope& a, const Slope& b);
Slope sub(const Slope& a, const Slope& b);
Slope mul(const Slope& a, const Slope& b);
Slope div(const Slope& a, const Slope& b); // OutOfDomain when b = 0
Slope neg(const Slope& a);
Slope recip(const Slope& a);
int64 floor_of(const Slope& a); // InfiniteInput on infinity

double to_double(const Slope& a); // diagnostics only; infinity is an error

// Slope literal grammar: INT, INT/INT, inf, -inf. Lowest-terms INT/INT with a
// zero denominator normalizes to inf; 0/0 is a ParseError.
Slope parse_slope(const std::string& text);

// Canonical output form: lowest terms, "inf" for the point at infinity.
std::string to_string(const Slope& s);

} // namespace tcs
