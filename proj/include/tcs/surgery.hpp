#pragma once
// Conversion of rational contact surgeries into (+1)/(-1)-surgery links,
// stabilization-choice enumeration, the first-homology presentation, the
// meridian chain reduction, and the Chern-coefficient separation of the two
// structure families.

#include <optional>
#include <string>
#include <vector>

#include "tcs/errors.hpp"
#include "tcs/slope.hpp"

namespace tcs {

enum class KnotType { TrefoilRH_tb1, Unknot_tb_minus1 };

struct SurgeryInstruction {
    KnotType knot = KnotType::Unknot_tb_minus1;
    Slope coefficient; // contact-framing coefficient, nonzero
};

enum class SurgerySign { PlusOne, MinusOne };

struct LinkComponent {
    SurgerySign sign = SurgerySign::MinusOne;
    int64 stab_budget = 0;
    int64 base_rot = 0;

    friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

struct ConvertedLink {
    std::vector<LinkComponent> components;
};

struct RotChoice {
    int64 pos = 0;
    int64 neg = 0;
    int64 rot = 0;

    friend bool operator==(const RotChoice&, const RotChoice&) = default;
};

struct RotAssignment {
    std::vector<RotChoice> choices;

    friend bool operator==(const RotAssignment&, const RotAssignment&) = default;
};

// Reason the surgery is overtwisted from the start, if any: coefficient 0 on
// any knot, or an unknot coefficient strictly between 0 and 1.
std::optional<std::string> overtwisted_guard(const SurgeryInstruction& instr);

// The conversion into a +-1-surgery link: a negative coefficient becomes a
// chain of (-1)-components with stabilization budgets read off the
// expansion; a positive coefficient emits k (+1)-components and recurses on
// the remainder coefficient p/(q - kp). Throws Overtwisted when the guard
// fires.
ConvertedLink convert_contact_surgery(const SurgeryInstruction& instr);

// All splittings of each component's budget into positive/negative
// stabilizations, in lexicographic order of the per-component positive
// counts; size is the product of (budget + 1).
std::vector<RotAssignment> enumerate_stab_choices(const ConvertedLink& link);

struct H1Group {
    int64 n = 1;
    int64 p = 1;            // |numerator of r|; 0 marks a non-torsion factor
    bool non_torsion = false;
    std::optional<int64> order; // n * p when torsion
};

H1Group h1(int64 n, const Slope& r);

// Coefficients c_0..c_k of mu_0 after eliminating the chain meridians
// last-to-first: c_0 = 1, c_1 = 2, c_2 = (r_1 + 1)*2 - 1, and
// c_i = r_{i-1}*c_{i-1} - c_{i-2} beyond that.
std::vector<int64> chain_reduction_coeffs(const std::vector<int64>& tail_terms);

struct H1Element {
    int64 n_part = 0;  // residue mod n
    int64 p_part = 0;  // residue mod p
    int64 n_mod = 1;
    int64 p_mod = 1;

    friend bool operator==(const H1Element&, const H1Element&) = default;
};

enum class Family { PsiFamily, PhiFamily };

struct ChernData {
    std::vector<int64> rot_tuple;        // chosen rot per link component
    std::optional<H1Element> element;    // reduced dual class, one-parameter family
    std::optional<int64> mu_coeff;       // two-parameter family: +-(n-2) mod n
    bool nu_unreduced = false;           // two-parameter family: nu part left symbolic
    bool reduced = true;                 // false when no printed reduction applies
    std::string note;
};

// The two-parameter family's surgery link: the trefoil with coefficient
// n - 1, plus an unknot with coefficient -1/(r - 1) when r > 1.
ConvertedLink phi_family_link(int64 n, const Slope& r);

// Poincare dual of the first Chern class for one stabilization choice.
ChernData chern_data(Family family, int64 n, const Slope& r, const RotAssignment& choice);

// True when the two families' mu-coefficients cannot collide: neither
// +(n-2) nor -(n-2) vanishes mod n.
bool families_distinct(int64 n, const Slope& r);

} // namespace tcs
