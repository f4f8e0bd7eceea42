#pragma once
// Negative continued fractions [r0, ..., rk] = r0 - 1/(r1 - 1/(...)) and the
// counting functions phi and psi built on them.

#include <vector>

#include "tcs/errors.hpp"
#include "tcs/slope.hpp"

namespace tcs {

// Canonical greedy expansion of a rational x <= -1. The leading term is
// <= -1 and every later term is <= -2; integers expand to a single term.
std::vector<int64> nf_expand(const Slope& x);

// Exact value of a term sequence; inverse of nf_expand on canonical forms.
Slope nf_eval(const std::vector<int64>& terms);

// phi(r): shift r into (0, 1] by an integer translation (integers map to 1),
// expand -1/r, return |r0 * (r1+1) * ... * (rk+1)|. Translation-periodic.
int64 phi(const Slope& r);

// psi(r): 0 when r = 1, otherwise phi(1/(1-r)).
int64 psi(const Slope& r);

namespace detail {

// Greedy expansion of any finite negative rational; same recursion as
// nf_expand without the x <= -1 domain check. The leading term of a value
// in (-1, 0) is -1, so the term bounds still hold.
std::vector<int64> nf_expand_negative(const Slope& x);

// |t0 * (t1+1) * ... * (tk+1)| for an expansion produced above.
int64 head_product(const std::vector<int64>& terms);

} // namespace detail

} // namespace tcs
