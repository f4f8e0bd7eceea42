#include "tcs/contfrac.hpp"

#include <limits>

namespace tcs {

namespace detail {

std::vector<int64> nf_expand_negative(const Slope& x) {
    if (x.is_infinite()) {
        throw OutOfDomain("expansion is defined for finite rationals only");
    }
    if (x >= Slope(0)) {
        throw OutOfDomain("expansion needs a negative rational");
    }
    std::vector<int64> terms;
    Slope cur = x;
    for (;;) {
        if (cur.is_integer()) {
            terms.push_back(cur.num);
            break;
        }
        int64 a = floor_of(cur);
        terms.push_back(a);
        cur = recip(sub(Slope(a), cur));
    }
    return terms;
}

int64 head_product(const std::vector<int64>& terms) {
    int128 prod = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        prod *= terms[i] + 1;
        if (prod > std::numeric_limits<int64>::max() || prod < std::numeric_limits<int64>::min()) {
            throw std::overflow_error("counting product exceeds 64-bit range");
        }
    }
    return prod < 0 ? static_cast<int64>(-prod) : static_cast<int64>(prod);
}

} // namespace detail

std::vector<int64> nf_expand(const Slope& x) {
    if (x.is_infinite() || x > Slope(-1)) {
        throw OutOfDomain("nf_expand needs a rational <= -1");
    }
    return detail::nf_expand_negative(x);
}

Slope nf_eval(const std::vector<int64>& terms) {
    if (terms.empty()) {
        throw MalformedTerms("term sequence is empty");
    }
    if (terms.front() > -1) {
        throw MalformedTerms("leading term must be <= -1");
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] > -2) {
            throw MalformedTerms("tail terms must be <= -2");
        }
    }
    Slope acc(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        acc = sub(Slope(*it), recip(acc));
    }
    return acc;
}

int64 phi(const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("phi is defined for finite rationals");
    }
    Slope shifted = r.is_integer() ? Slope(1) : sub(r, Slope(floor_of(r)));
    return detail::head_product(detail::nf_expand_negative(neg(recip(shifted))));
}

int64 psi(const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("psi is defined for finite rationals");
    }
    if (r == Slope(1)) {
        return 0;
    }
    return phi(recip(sub(Slope(1), r)));
}

} // namespace tcs
