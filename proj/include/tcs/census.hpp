#pragma once
// Census rows over a parameter grid, with deterministic ordering, an
// optional parallel evaluator, and JSON/CSV/table serialization that
// round-trips.

#include <optional>
#include <string>
#include <vector>

#include "tcs/counts.hpp"
#include "tcs/slope.hpp"

namespace tcs {

struct CensusRow {
    int64 n = 0;
    Slope r;
    Status status = Status::Unclassified;
    int64 psi_family = 0;
    int64 phi_family = 0;
    std::optional<int64> total;
    bool stein_fillable = false;
    int64 vot_lower = 0;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow census_row(int64 n, const Slope& r);

// Rows for the full grid, ordered by n ascending then r ascending; the r
// list is deduplicated. Parallel evaluation produces identical output.
std::vector<CensusRow> run_census(std::vector<int64> ns, std::vector<Slope> rs,
                                  bool parallel = false);

std::string render_table(const std::vector<CensusRow>& rows);
std::string render_csv(const std::vector<CensusRow>& rows);
std::string render_json(const std::vector<CensusRow>& rows);

// Single row as one JSON object (used by the count command).
std::string render_json(const CensusRow& row);

std::vector<CensusRow> parse_csv_rows(const std::string& text);
std::vector<CensusRow> parse_json_rows(const std::string& text);

} // namespace tcs
