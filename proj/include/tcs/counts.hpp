#pragma once
// Closed-form tight-structure counts: solid tori, rational contact surgeries,
// and the main census with its status taxonomy.

#include <optional>

#include "tcs/errors.hpp"
#include "tcs/slope.hpp"

namespace tcs {

enum class Status { Classified, LowerBoundOnly, InfinitelyMany, Unclassified };

const char* status_name(Status s);
Status status_from_name(const std::string& name);

struct CountBreakdown {
    Status status = Status::Unclassified;
    int64 psi_family = 0;
    int64 phi_family = 0;
    std::optional<int64> total;  // empty means infinitely many
    bool stein_fillable = false; // meaningful only when Classified
    int64 vot_lower = 0;
};

// Tight structures on the solid torus with boundary slope q/p, via the
// expansion of q/p; requires gcd(p, q) = 1 and q > -p >= 1.
int64 solid_torus_count(int64 p, int64 q);

struct NrBoundaryCounts {
    int64 at_infinity = 0;   // phi(r)
    int64 at_one = 0;        // psi(r)
    Slope reparam_meridian;  // 1/(1-r) after the boundary coordinate change
};

NrBoundaryCounts nr_boundary_counts(const Slope& r);

// Structures induced by contact (p/q)-surgery on a fixed Legendrian knot;
// positive coefficients recurse through p/(q - kp) with minimal k >= 1.
// ZeroCoefficient when p = 0.
int64 dg_surgery_count(int64 p, int64 q);

// Lower bound on virtually overtwisted structures among the classified
// count; requires n >= 5 and r in [2,4) u [5,inf) or r < 0.
int64 vot_lower(int64 n, const Slope& r);

// The census entry for the surgered manifold with parameters (n, r).
CountBreakdown main_count(int64 n, const Slope& r);

} // namespace tcs
