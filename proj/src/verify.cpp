#include "tcs/verify.hpp"

#include <vector>

#include "tcs/census.hpp"
#include "tcs/contfrac.hpp"
#include "tcs/counts.hpp"
#include "tcs/farey.hpp"
#include "tcs/monodromy.hpp"
#include "tcs/surgery.hpp"

namespace tcs {

namespace {

std::string mark(const std::string& label, bool ok) {
    return label + (ok ? " ok" : " FAIL");
}

// Reduced slopes num/den for every den in [1, den_bound] with value in
// [lo, hi] (numerator magnitude capped so the sweep stays finite).
std::vector<Slope> reduced_range(int64 den_bound, const Slope& lo, const Slope& hi,
                                 int64 num_cap) {
    std::vector<Slope> out;
    for (int64 den = 1; den <= den_bound; ++den) {
        for (int64 num = -num_cap; num <= num_cap; ++num) {
            Slope s(num, den);
            if (s.den != den) continue;
            if (s >= lo && s <= hi) out.push_back(s);
        }
    }
    return out;
}

} // namespace

SuiteResult verify_counts(bool parallel) {
    (void)parallel;
    CountBreakdown weeks = main_count(5, Slope(5, 2));
    bool weeks_ok = weeks.status == Status::Classified && weeks.total == 7 &&
                    weeks.psi_family == 3 && weeks.phi_family == 4;

    bool table_ok = true;
    for (int64 n = 5; n <= 10 && table_ok; ++n) {
        for (int64 m = -20; m <= 20; ++m) {
            if (m == 1 || m == 4) continue;
            CountBreakdown b = main_count(n, Slope(m));
            if (m == 0) {
                if (b.status != Status::InfinitelyMany || b.total.has_value()) {
                    table_ok = false;
                    break;
                }
                continue;
            }
            int64 expected = m < 0 ? (1 - m) : (m == 2 ? 3 : 4);
            if (b.status != Status::Classified || b.total != expected) {
                table_ok = false;
                break;
            }
        }
    }
    SuiteResult res;
    res.ok = weeks_ok && table_ok;
    res.summary = mark("weeks=7", weeks_ok) + "; " + mark("integer-table", table_ok);
    return res;
}

SuiteResult verify_farey(int64 den_bound, bool parallel) {
    const int64 num_cap = 300;
    std::vector<Slope> monotone_sweep =
        reduced_range(10, Slope(2), Slope(30), num_cap);
    int monotone_ok = 1;
#pragma omp parallel for reduction(&& : monotone_ok) if (parallel)
    for (std::size_t i = 0; i < monotone_sweep.size(); ++i) {
        const Slope& s = monotone_sweep[i];
        Slope up = bypass_slope(s, Slope(0), 1);
        Slope down = bypass_slope(s, Slope(0), 0);
        bool ok = farey_edge(s, up) && farey_edge(s, down) &&
                  (up.is_infinite() || up > s) && !down.is_infinite() && down < s;
        monotone_ok = monotone_ok && ok;
    }

    std::vector<Slope> positive_bases;
    for (const Slope& r : reduced_range(den_bound, Slope(2), Slope(num_cap), num_cap)) {
        if (region_guards(r).in_R_plus) positive_bases.push_back(r);
    }
    std::vector<Slope> negative_bases =
        reduced_range(den_bound, Slope(-num_cap), Slope(-1, num_cap), num_cap);

    int guards_ok = 1;
#pragma omp parallel for reduction(&& : guards_ok) if (parallel)
    for (std::size_t i = 0; i < positive_bases.size(); ++i) {
        for (const Slope& s : enumerate_S(positive_bases[i], 50)) {
            bool ok = s > Slope(2) && !region_guards(s).in_gap &&
                      thicken_positive(s).reached_infinity();
            guards_ok = guards_ok && ok;
        }
    }
#pragma omp parallel for reduction(&& : guards_ok) if (parallel)
    for (std::size_t i = 0; i < negative_bases.size(); ++i) {
        for (const Slope& s : enumerate_S(negative_bases[i], 50)) {
            if (s == Slope(0)) continue;
            bool ok = s < Slope(0) && thicken_negative(s).reached_one();
            guards_ok = guards_ok && ok;
        }
    }

    SuiteResult res;
    res.ok = monotone_ok && guards_ok;
    res.summary = mark("bypass-monotone", monotone_ok) + "; " +
                  mark("S(r)-guards", guards_ok);
    return res;
}

SuiteResult verify_monodromy(bool parallel) {
    (void)parallel;
    bool factorization_ok = true;
    for (int64 n = 3; n <= 200; ++n) {
        factorization_ok = factorization_ok && verify_phi_factorization(n);
    }
    bool triangles_ok = true;
    for (int64 n = 5; n <= 50; ++n) {
        triangles_ok = triangles_ok && triangle_certificate(n).all_pass();
    }
    bool witness_ok = true;
    for (int64 n = 5; n <= 50; ++n) {
        TwistWord w = stein_witness(n);
        TwistWord expected = reduce_twist_word(
            {{{Curve::Alpha, 1}, {Curve::Beta, 1}, {Curve::Alpha, n - 3},
              {Curve::Delta, 1}, {Curve::Sigma, 1}}});
        witness_ok = witness_ok && w == expected && all_positive(w) &&
                     exponent_sum(w) == n + 1;
    }
    SuiteResult res;
    res.ok = factorization_ok && triangles_ok && witness_ok;
    res.summary = mark("factorization", factorization_ok) + "; " +
                  mark("triangles", triangles_ok) + "; " +
                  mark("stein-witness", witness_ok);
    return res;
}

SuiteResult verify_surgery(bool parallel) {
    int oracle_ok = 1;
#pragma omp parallel for reduction(&& : oracle_ok) if (parallel)
    for (int64 p = -20; p <= 20; ++p) {
        if (p == 0) continue;
        for (int64 q = 1; q <= 20; ++q) {
            Slope coeff(p, q);
            if (coeff.num != p || coeff.den != q) continue;
            ConvertedLink link =
                convert_contact_surgery({KnotType::TrefoilRH_tb1, coeff});
            bool ok = dg_surgery_count(p, q) ==
                      static_cast<int64>(enumerate_stab_choices(link).size());
            oracle_ok = oracle_ok && ok;
        }
    }

    bool chern_ok = true;
    const Slope samples[] = {Slope(2),     Slope(5, 2), Slope(3),  Slope(7, 2),
                             Slope(16, 5), Slope(5),    Slope(11, 2), Slope(6)};
    for (int64 n = 3; n <= 12 && chern_ok; ++n) {
        for (const Slope& r : samples) {
            if (!families_distinct(n, r)) {
                chern_ok = false;
                break;
            }
            ConvertedLink psi_link = convert_contact_surgery(
                {KnotType::TrefoilRH_tb1, sub(r, Slope(1))});
            for (const RotAssignment& choice : enumerate_stab_choices(psi_link)) {
                ChernData data = chern_data(Family::PsiFamily, n, r, choice);
                if (!data.element || data.element->n_part != 0) {
                    chern_ok = false;
                    break;
                }
            }
            ConvertedLink phi_link = phi_family_link(n, r);
            for (const RotAssignment& choice : enumerate_stab_choices(phi_link)) {
                ChernData data = chern_data(Family::PhiFamily, n, r, choice);
                int64 plus = (n - 2) % n;
                int64 minus = ((2 - n) % n + n) % n;
                if (!data.mu_coeff ||
                    (*data.mu_coeff != plus && *data.mu_coeff != minus) ||
                    *data.mu_coeff == 0) {
                    chern_ok = false;
                    break;
                }
            }
            if (!chern_ok) break;
        }
    }

    SuiteResult res;
    res.ok = oracle_ok && chern_ok;
    res.summary = mark("dg-oracle", oracle_ok) + "; " + mark("chern-separation", chern_ok);
    return res;
}

} // namespace tcs
