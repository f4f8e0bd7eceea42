#include "tcs/slope.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace tcs {

namespace {

int64 narrow(int128 v) {
    if (v > std::numeric_limits<int64>::max() || v < std::numeric_limits<int64>::min()) {
        throw std::overflow_error("slope arithmetic exceeds 64-bit range");
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

Slope make(int128 n, int128 d) {
    if (n == 0 && d == 0) {
        throw OutOfDomain("slope 0/0 is undefined");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d == 0) {
        Slope s;
        s.num = 1;
        s.den = 0;
        return s;
    }
    int128 g = gcd128(n, d);
    Slope s;
    s.num = narrow(n / g);
    s.den = narrow(d / g);
    return s;
}

} // namespace

Slope::Slope(int64 n) : num(n), den(1) {}

Slope::Slope(int64 n, int64 d) {
    *this = make(n, d);
}

int cmp(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite()) {
        throw InfiniteInput("cannot linearly compare the point at infinity");
    }
    int128 lhs = static_cast<int128>(a.num) * b.den;
    int128 rhs = static_cast<int128>(b.num) * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool operator<(const Slope& a, const Slope& b) { return cmp(a, b) < 0; }
bool operator<=(const Slope& a, const Slope& b) { return cmp(a, b) <= 0; }
bool operator>(const Slope& a, const Slope& b) { return cmp(a, b) > 0; }
bool operator>=(const Slope& a, const Slope& b) { return cmp(a, b) >= 0; }

namespace {

void require_finite(const Slope& a, const char* what) {
    if (a.is_infinite()) {
        throw InfiniteInput(std::string(what) + " requires a finite slope");
    }
}

} // namespace

Slope add(const Slope& a, const Slope& b) {
    require_finite(a, "add");
    require_finite(b, "add");
    return make(static_cast<int128>(a.num) * b.den + static_cast<int128>(b.num) * a.den,
                static_cast<int128>(a.den) * b.den);
}

Slope sub(const Slope& a, const Slope& b) {
    require_finite(a, "sub");
    require_finite(b, "sub");
    return make(static_cast<int128>(a.num) * b.den - static_cast<int128>(b.num) * a.den,
                static_cast<int128>(a.den) * b.den);
}

Slope mul(const Slope& a, const Slope& b) {
    require_finite(a, "mul");
    require_finite(b, "mul");
    return make(static_cast<int128>(a.num) * b.num, static_cast<int128>(a.den) * b.den);
}

Slope div(const Slope& a, const Slope& b) {
    require_finite(a, "div");
    require_finite(b, "div");
    if (b.num == 0) {
        throw OutOfDomain("division by zero");
    }
    return make(static_cast<int128>(a.num) * b.den, static_cast<int128>(a.den) * b.num);
}

Slope neg(const Slope& a) {
    require_finite(a, "neg");
    Slope s;
    s.num = -a.num;
    s.den = a.den;
    return s;
}

Slope recip(const Slope& a) {
    return make(a.den, a.num);
}

int64 floor_of(const Slope& a) {
    require_finite(a, "floor");
    int64 q = a.num / a.den;
    if (a.num % a.den != 0 && a.num < 0) {
        --q;
    }
    return q;
}

double to_double(const Slope& a) {
    require_finite(a, "to_double");
    return static_cast<double>(a.num) / static_cast<double>(a.den);
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "-inf") {
        return Slope::infinity();
    }
    auto parse_int = [](const std::string& part) -> int64 {
        if (part.empty()) {
            throw ParseError("empty integer in slope literal");
        }
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) {
            throw ParseError("sign without digits in slope literal");
        }
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw ParseError("invalid slope literal: " + part);
            }
        }
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(part.c_str(), &end, 10);
        if (errno != 0 || end == nullptr || *end != '\0') {
            throw ParseError("integer out of range in slope literal: " + part);
        }
        return v;
    };
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Slope(parse_int(text));
        }
        int64 n = parse_int(text.substr(0, slash));
        int64 d = parse_int(text.substr(slash + 1));
        return Slope(n, d);
    } catch (const OutOfDomain&) {
        throw ParseError("slope literal 0/0 is undefined");
    }
}

std::string to_string(const Slope& s) {
    if (s.is_infinite()) {
        return "inf";
    }
    if (s.den == 1) {
        return std::to_string(s.num);
    }
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

} // namespace tcs
