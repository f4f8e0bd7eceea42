#include "tcs/census.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tcs {

CensusRow census_row(int64 n, const Slope& r) {
    CountBreakdown b = main_count(n, r);
    CensusRow row;
    row.n = n;
    row.r = r;
    row.status = b.status;
    row.psi_family = b.psi_family;
    row.phi_family = b.phi_family;
    row.total = b.total;
    row.stein_fillable = b.stein_fillable;
    row.vot_lower = b.vot_lower;
    return row;
}

std::vector<CensusRow> run_census(std::vector<int64> ns, std::vector<Slope> rs,
                                  bool parallel) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    const std::size_t total = ns.size() * rs.size();
    std::vector<CensusRow> rows(total);
    std::exception_ptr failure;
#pragma omp parallel for collapse(2) if (parallel)
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            try {
                rows[i * rs.size() + j] = census_row(ns[i], rs[j]);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

namespace {

std::string total_text(const std::optional<int64>& total) {
    return total ? std::to_string(*total) : "inf";
}

} // namespace

std::string render_table(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    const char* header[8] = {"n", "r", "status", "psi", "phi", "total", "stein", "vot>="};
    std::vector<std::vector<std::string>> cells;
    cells.emplace_back(header, header + 8);
    for (const CensusRow& row : rows) {
        cells.push_back({std::to_string(row.n), to_string(row.r),
                         status_name(row.status), std::to_string(row.psi_family),
                         std::to_string(row.phi_family), total_text(row.total),
                         row.stein_fillable ? "yes" : "no",
                         std::to_string(row.vot_lower)});
    }
    std::size_t width[8] = {0};
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 8; ++c) {
            width[c] = std::max(width[c], line[c].size());
        }
    }
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 8; ++c) {
            out << line[c] << std::string(width[c] - line[c].size(), ' ');
            out << (c + 1 < 8 ? "  " : "\n");
        }
    }
    return out.str();
}

std::string render_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "n,r,status,psi_family,phi_family,total,stein_fillable,vot_lower\n";
    for (const CensusRow& row : rows) {
        out << row.n << ',' << to_string(row.r) << ',' << status_name(row.status)
            << ',' << row.psi_family << ',' << row.phi_family << ','
            << total_text(row.total) << ',' << (row.stein_fillable ? "true" : "false")
            << ',' << row.vot_lower << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json row_to_json(const CensusRow& row) {
    nlohmann::json obj;
    obj["n"] = row.n;
    obj["r"] = to_string(row.r);
    obj["status"] = status_name(row.status);
    obj["psi_family"] = row.psi_family;
    obj["phi_family"] = row.phi_family;
    if (row.total) {
        obj["total"] = *row.total;
    } else {
        obj["total"] = "inf";
    }
    obj["stein_fillable"] = row.stein_fillable;
    obj["vot_lower"] = row.vot_lower;
    return obj;
}

} // namespace

std::string render_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CensusRow& row : rows) {
        arr.push_back(row_to_json(row));
    }
    return arr.dump(2) + "\n";
}

std::string render_json(const CensusRow& row) {
    return row_to_json(row).dump(2) + "\n";
}

std::vector<CensusRow> parse_csv_rows(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<CensusRow> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 8) {
            throw ParseError("csv row needs 8 fields: " + line);
        }
        CensusRow row;
        row.n = std::stoll(fields[0]);
        row.r = parse_slope(fields[1]);
        row.status = status_from_name(fields[2]);
        row.psi_family = std::stoll(fields[3]);
        row.phi_family = std::stoll(fields[4]);
        if (fields[5] != "inf") {
            row.total = std::stoll(fields[5]);
        }
        if (fields[6] == "true") {
            row.stein_fillable = true;
        } else if (fields[6] == "false") {
            row.stein_fillable = false;
        } else {
            throw ParseError("bad boolean in csv: " + fields[6]);
        }
        row.vot_lower = std::stoll(fields[7]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CensusRow> parse_json_rows(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    if (!arr.is_array()) {
        throw ParseError("expected a json array of rows");
    }
    std::vector<CensusRow> rows;
    for (const auto& obj : arr) {
        CensusRow row;
        row.n = obj.at("n").get<int64>();
        row.r = parse_slope(obj.at("r").get<std::string>());
        row.status = status_from_name(obj.at("status").get<std::string>());
        row.psi_family = obj.at("psi_family").get<int64>();
        row.phi_family = obj.at("phi_family").get<int64>();
        const auto& total = obj.at("total");
        if (total.is_string()) {
            if (total.get<std::string>() != "inf") {
                throw ParseError("total must be a number or \"inf\"");
            }
        } else {
            row.total = total.get<int64>();
        }
        row.stein_fillable = obj.at("stein_fillable").get<bool>();
        row.vot_lower = obj.at("vot_lower").get<int64>();
        rows.push_back(row);
    }
    return rows;
}

} // namespace tcs
