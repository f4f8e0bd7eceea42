#include "tcs/surgery.hpp"

#include <cstdlib>

#include "tcs/contfrac.hpp"
#include "tcs/farey.hpp"

namespace tcs {

namespace {

struct ConversionParts {
    int64 plus_count = 0;
    std::vector<int64> terms;
};

// Peel off the (+1)-components of a positive coefficient until the remainder
// p/(q - kp) is negative, then expand the remainder.
ConversionParts decompose(Slope coeff) {
    ConversionParts parts;
    while (coeff > Slope(0)) {
        int64 k = coeff.den / coeff.num + 1;
        parts.plus_count += k;
        coeff = Slope(coeff.num, coeff.den - k * coeff.num);
    }
    parts.terms = detail::nf_expand_negative(coeff);
    return parts;
}

int64 mod_nonneg(int64 a, int64 m) {
    int64 r = a % m;
    return r < 0 ? r + m : r;
}

void require_choice_fits(const ConvertedLink& link, const RotAssignment& choice) {
    if (choice.choices.size() != link.components.size()) {
        throw OutOfDomain("stabilization choice does not match the link size");
    }
    for (std::size_t i = 0; i < link.components.size(); ++i) {
        const RotChoice& c = choice.choices[i];
        const LinkComponent& comp = link.components[i];
        if (c.pos < 0 || c.neg < 0 || c.pos + c.neg != comp.stab_budget ||
            c.rot != comp.base_rot + c.pos - c.neg) {
            throw OutOfDomain("stabilization choice violates a component budget");
        }
    }
}

} // namespace

std::optional<std::string> overtwisted_guard(const SurgeryInstruction& instr) {
    if (instr.coefficient.is_infinite()) {
        return std::nullopt;
    }
    if (instr.coefficient == Slope(0)) {
        return "contact 0-surgery";
    }
    if (instr.knot == KnotType::Unknot_tb_minus1 &&
        instr.coefficient > Slope(0) && instr.coefficient < Slope(1)) {
        return "unknot with 0<r<1";
    }
    return std::nullopt;
}

ConvertedLink convert_contact_surgery(const SurgeryInstruction& instr) {
    if (instr.coefficient.is_infinite()) {
        throw InfiniteInput("surgery coefficient must be finite");
    }
    if (auto reason = overtwisted_guard(instr)) {
        throw Overtwisted(*reason);
    }
    ConversionParts parts = decompose(instr.coefficient);
    ConvertedLink link;
    for (int64 i = 0; i < parts.plus_count; ++i) {
        link.components.push_back({SurgerySign::PlusOne, 0, 0});
    }
    const std::vector<int64>& t = parts.terms;
    link.components.push_back({SurgerySign::MinusOne, -(t[0] + 1), 0});
    for (std::size_t i = 1; i < t.size(); ++i) {
        link.components.push_back({SurgerySign::MinusOne, -(t[i] + 2), 0});
    }
    return link;
}

std::vector<RotAssignment> enumerate_stab_choices(const ConvertedLink& link) {
    const std::size_t m = link.components.size();
    std::vector<int64> pos(m, 0);
    std::vector<RotAssignment> out;
    for (;;) {
        RotAssignment assignment;
        assignment.choices.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const LinkComponent& comp = link.components[i];
            RotChoice& c = assignment.choices[i];
            c.pos = pos[i];
            c.neg = comp.stab_budget - pos[i];
            c.rot = comp.base_rot + c.pos - c.neg;
        }
        out.push_back(std::move(assignment));
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (pos[i] < link.components[i].stab_budget) {
                ++pos[i];
                break;
            }
            pos[i] = 0;
            if (i == 0) return out;
        }
        if (m == 0) return out;
    }
}

H1Group h1(int64 n, const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("homology needs a finite surgery slope");
    }
    if (n < 1) {
        throw OutOfDomain("homology needs n >= 1");
    }
    H1Group g;
    g.n = n;
    g.p = r.num < 0 ? -r.num : r.num;
    g.non_torsion = (g.p == 0);
    if (!g.non_torsion) {
        g.order = n * g.p;
    }
    return g;
}

std::vector<int64> chain_reduction_coeffs(const std::vector<int64>& tail_terms) {
    const std::size_t k = tail_terms.size();
    std::vector<int64> c{1};
    if (k >= 1) {
        c.push_back(2);
    }
    if (k >= 2) {
        c.push_back((tail_terms[0] + 1) * 2 - 1);
    }
    for (std::size_t i = 3; i <= k; ++i) {
        c.push_back(tail_terms[i - 2] * c[i - 1] - c[i - 2]);
    }
    return c;
}

ConvertedLink phi_family_link(int64 n, const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("family links need a finite slope");
    }
    if (n < 3 || r < Slope(1)) {
        throw OutOfDomain("two-parameter family needs n >= 3 and r >= 1");
    }
    ConvertedLink link =
        convert_contact_surgery({KnotType::TrefoilRH_tb1, Slope(n - 1)});
    if (r > Slope(1)) {
        Slope unknot_coeff = neg(recip(sub(r, Slope(1))));
        ConvertedLink tail =
            convert_contact_surgery({KnotType::Unknot_tb_minus1, unknot_coeff});
        link.components.insert(link.components.end(), tail.components.begin(),
                               tail.components.end());
    }
    return link;
}

ChernData chern_data(Family family, int64 n, const Slope& r, const RotAssignment& choice) {
    if (r.is_infinite()) {
        throw InfiniteInput("Chern data needs a finite slope");
    }
    if (n < 3) {
        throw OutOfDomain("Chern data needs n >= 3");
    }
    ChernData out;
    if (family == Family::PsiFamily) {
        if (r == Slope(1)) {
            throw OutOfDomain("the one-parameter family is empty at r = 1");
        }
        ConvertedLink link =
            convert_contact_surgery({KnotType::TrefoilRH_tb1, sub(r, Slope(1))});
        require_choice_fits(link, choice);
        for (const RotChoice& c : choice.choices) {
            out.rot_tuple.push_back(c.rot);
        }
        if (r < Slope(1)) {
            out.reduced = false;
            out.note = "no printed chain reduction below r = 1; rot tuple only";
            return out;
        }
        ConversionParts parts = decompose(sub(r, Slope(1)));
        std::vector<int64> coeffs = chain_reduction_coeffs(parts.terms);
        int64 m = 0;
        std::size_t chain_index = 0;
        for (std::size_t i = 0; i < link.components.size(); ++i) {
            if (link.components[i].sign != SurgerySign::MinusOne) continue;
            ++chain_index;
            m += choice.choices[i].rot * coeffs[chain_index];
        }
        int64 p = r.num < 0 ? -r.num : r.num;
        H1Element el;
        el.n_mod = n;
        el.p_mod = p;
        el.n_part = 0;
        el.p_part = mod_nonneg(m, p);
        out.element = el;
        return out;
    }
    ConvertedLink link = phi_family_link(n, r);
    require_choice_fits(link, choice);
    for (const RotChoice& c : choice.choices) {
        out.rot_tuple.push_back(c.rot);
    }
    int64 sign = choice.choices[1].rot;
    out.mu_coeff = mod_nonneg(sign > 0 ? n - 2 : -(n - 2), n);
    out.nu_unreduced = true;
    out.note = "nu coefficient left unreduced";
    return out;
}

bool families_distinct(int64 n, const Slope& r) {
    if (r.is_infinite()) {
        throw InfiniteInput("family separation needs a finite slope");
    }
    if (n < 3 || !region_guards(r).in_R_plus) {
        throw OutOfDomain("family separation needs n >= 3 and r in R+");
    }
    return mod_nonneg(n - 2, n) != 0 && mod_nonneg(-(n - 2), n) != 0;
}

} // namespace tcs
