#include "tcs/counts.hpp"

#include <numeric>

#include "tcs/contfrac.hpp"
#include "tcs/farey.hpp"

namespace tcs {

const char* status_name(Status s) {
    switch (s) {
        case Status::Classified: return "classified";
        case Status::LowerBoundOnly: return "lower_bound_only";
        case Status::InfinitelyMany: return "infinitely_many";
        case Status::Unclassified: return "unclassified";
    }
    return "unclassified";
}

Status status_from_name(const std::string& name) {
    if (name == "classified") return Status::Classified;
    if (name == "lower_bound_only") return Status::LowerBoundOnly;
    if (name == "infinitely_many") return Status::InfinitelyMany;
    if (name == "unclassified") return Status::Unclassified;
    throw ParseError("unknown status: " + name);
}

int64 solid_torus_count(int64 p, int64 q) {
    if (std::gcd(p, q) != 1 || !(q > -p && -p >= 1)) {
        throw OutOfDomain("solid torus count needs gcd(p,q) = 1 and q > -p >= 1");
    }
    std::vector<int64> terms = nf_expand(Slope(q, p));
    int128 prod = 1;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        prod *= terms[i] + 1;
    }
    prod *= terms.back();
    return prod < 0 ? static_cast<int64>(-prod) : static_cast<int64>(prod);
}

NrBoundaryCounts nr_boundary_counts(const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("boundary counts need a finite slope");
    }
    NrBoundaryCounts out;
    out.at_infinity = phi(r);
    out.at_one = psi(r);
    out.reparam_meridian = recip(sub(Slope(1), r));
    return out;
}

int64 dg_surgery_count(int64 p, int64 q) {
    if (p == 0) {
        throw ZeroCoefficient("contact 0-surgery has no tight representative");
    }
    if (q < 1 || std::gcd(p, q) != 1) {
        throw OutOfDomain("surgery coefficient must be p/q in lowest terms with q >= 1");
    }
    if (p > 0) {
        int64 k = q / p + 1;
        return dg_surgery_count(-p, k * p - q);
    }
    return detail::head_product(detail::nf_expand_negative(Slope(p, q)));
}

int64 vot_lower(int64 n, const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("lower bound needs a finite slope");
    }
    bool negative = r < Slope(0);
    if (n < 5 || !(negative || region_guards(r).in_R_plus)) {
        throw OutOfDomain("lower bound applies to n >= 5 with r in R+ or r < 0");
    }
    int64 bound = negative ? psi(r) - 2 : psi(r) + 2 * phi(r) - 6;
    return bound > 0 ? bound : 0;
}

CountBreakdown main_count(int64 n, const Slope& r) {
    if (n < 3) {
        throw OutOfDomain("census needs n >= 3");
    }
    if (r.is_infinite()) {
        throw OutOfDomain("census needs a finite surgery slope");
    }
    CountBreakdown out;
    if (r == Slope(0)) {
        out.status = Status::InfinitelyMany;
        out.psi_family = psi(r);
        out.phi_family = 0;
        out.total = std::nullopt;
        return out;
    }
    bool negative = r < Slope(0);
    bool classified = n >= 5 && (negative || region_guards(r).in_R_plus);
    out.psi_family = psi(r);
    out.phi_family = (!negative && r >= Slope(1)) ? 2 * phi(r) : 0;
    if (classified) {
        out.status = Status::Classified;
        out.stein_fillable = true;
        out.vot_lower = vot_lower(n, r);
    } else {
        out.status = Status::LowerBoundOnly;
    }
    out.total = out.psi_family + out.phi_family;
    return out;
}

} // namespace tcs
