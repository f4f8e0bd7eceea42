#pragma once
// Self-check suites exposed by the CLI: each runs a property sweep and
// reports a single summary line.

#include <string>

#include "tcs/slope.hpp"

namespace tcs {

struct SuiteResult {
    bool ok = false;
    std::string summary;
};

// Weeks-point value and the integer census table.
SuiteResult verify_counts(bool parallel = false);

// Thickening monotonicity and the S(r) guard sweep; den_bound caps the
// denominator of the base slopes r.
SuiteResult verify_farey(int64 den_bound = 30, bool parallel = false);

// Monodromy factorization, triangle certificates, and the witness word.
SuiteResult verify_monodromy(bool parallel = false);

// Count-formula versus enumeration, and the Chern-coefficient separation.
SuiteResult verify_surgery(bool parallel = false);

} // namespace tcs
