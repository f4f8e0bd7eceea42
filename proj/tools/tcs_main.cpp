// Command-line front end for the census kernel.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcs/census.hpp"
#include "tcs/contfrac.hpp"
#include "tcs/counts.hpp"
#include "tcs/farey.hpp"
#include "tcs/slope.hpp"
#include "tcs/surgery.hpp"
#include "tcs/verify.hpp"

namespace {

using tcs::int64;
using tcs::Slope;

std::vector<int64> parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    std::vector<int64> out;
    try {
        if (dots == std::string::npos) {
            out.push_back(std::stoll(text));
            return out;
        }
        int64 lo = std::stoll(text.substr(0, dots));
        int64 hi = std::stoll(text.substr(dots + 2));
        if (lo > hi) {
            throw tcs::ParseError("empty range: " + text);
        }
        for (int64 n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
    } catch (const std::logic_error&) {
        throw tcs::ParseError("bad integer range: " + text);
    }
    return out;
}

std::vector<Slope> parse_r_list(const std::string& text) {
    std::vector<Slope> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(tcs::parse_slope(item));
    }
    if (out.empty()) {
        throw tcs::ParseError("empty slope list");
    }
    return out;
}

std::string render_rows(const std::vector<tcs::CensusRow>& rows, const std::string& format) {
    if (format == "json") return tcs::render_json(rows);
    if (format == "csv") return tcs::render_csv(rows);
    return tcs::render_table(rows);
}

std::string join_path(const std::vector<Slope>& path) {
    std::string out;
    for (const Slope& s : path) {
        if (!out.empty()) out += " -> ";
        out += tcs::to_string(s);
    }
    return out;
}

std::string trace_thicken(const Slope& s) {
    tcs::ThickeningResult res =
        (!s.is_infinite() && s < Slope(0)) ? tcs::thicken_negative(s) : tcs::thicken_positive(s);
    if (res.stalled()) {
        return "stalled at " + tcs::to_string(res.stalled_at) + "\n";
    }
    std::string out = join_path(res.path);
    if (res.reached_one()) {
        out += " (tail: " + join_path(res.structural_tail) + ")";
    }
    return out + "\n";
}

std::string trace_convert(const std::string& knot_name, const Slope& coeff) {
    tcs::KnotType knot;
    if (knot_name == "trefoil") {
        knot = tcs::KnotType::TrefoilRH_tb1;
    } else if (knot_name == "unknot") {
        knot = tcs::KnotType::Unknot_tb_minus1;
    } else {
        throw tcs::ParseError("unknown knot: " + knot_name);
    }
    tcs::ConvertedLink link = tcs::convert_contact_surgery({knot, coeff});
    std::string out;
    for (const tcs::LinkComponent& comp : link.components) {
        if (!out.empty()) out += "; ";
        if (comp.sign == tcs::SurgerySign::PlusOne) {
            out += "+1";
        } else {
            out += "-1 (" + std::to_string(comp.stab_budget) +
                   (comp.stab_budget == 1 ? " stab)" : " stabs)");
        }
    }
    return out + "\n";
}

int run_verify(const std::string& suite, int64 den_bound, bool parallel, std::string& text) {
    std::vector<std::pair<std::string, tcs::SuiteResult>> results;
    if (suite == "all" || suite == "counts") {
        results.emplace_back("counts", tcs::verify_counts(parallel));
    }
    if (suite == "all" || suite == "farey") {
        results.emplace_back("farey", tcs::verify_farey(den_bound, parallel));
    }
    if (suite == "all" || suite == "monodromy") {
        results.emplace_back("monodromy", tcs::verify_monodromy(parallel));
    }
    if (suite == "all" || suite == "surgery") {
        results.emplace_back("surgery", tcs::verify_surgery(parallel));
    }
    bool ok = true;
    std::ostringstream out;
    for (const auto& [name, res] : results) {
        if (suite == "all") {
            out << name << ": ";
        }
        out << res.summary << "\n";
        ok = ok && res.ok;
    }
    text = out.str();
    return ok ? 0 : 1;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_file);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact census kernel for surgery slope counts"};
    app.require_subcommand(1);

    std::string r_text, format = "table", out_file;
    std::string n_range_text, r_list_text;
    std::string s_text, flips_r_text, knot_name, coeff_text, suite = "all";
    int64 n_value = 0, flips = 1, den_bound = 30;
    bool parallel = false;

    auto format_check = CLI::IsMember({"table", "json", "csv"});

    CLI::App* count = app.add_subcommand("count", "one census entry");
    count->add_option("--n", n_value)->required();
    count->add_option("--r", r_text)->required();
    count->add_option("--format", format)->check(format_check);
    count->add_option("--out", out_file);

    CLI::App* census = app.add_subcommand("census", "a grid of census entries");
    census->add_option("--n-range", n_range_text)->required();
    census->add_option("--r-list", r_list_text)->required();
    census->add_option("--format", format)->check(format_check);
    census->add_flag("--parallel", parallel);
    census->add_option("--out", out_file);

    CLI::App* phi_cmd = app.add_subcommand("phi", "counting function phi(r)");
    phi_cmd->add_option("--r", r_text)->required();
    phi_cmd->add_option("--out", out_file);

    CLI::App* psi_cmd = app.add_subcommand("psi", "counting function psi(r)");
    psi_cmd->add_option("--r", r_text)->required();
    psi_cmd->add_option("--out", out_file);

    CLI::App* contfrac_cmd =
        app.add_subcommand("contfrac", "negative continued fraction of x <= -1");
    contfrac_cmd->add_option("--r", r_text)->required();
    contfrac_cmd->add_option("--out", out_file);

    CLI::App* trace = app.add_subcommand("trace", "step-by-step traces");
    trace->require_subcommand(1);
    CLI::App* thicken = trace->add_subcommand("thicken", "thickening path");
    thicken->add_option("--s", s_text)->required();
    thicken->add_option("--out", out_file);
    CLI::App* bypass = trace->add_subcommand("bypass", "one bypass attachment");
    bypass->add_option("--s", s_text)->required();
    bypass->add_option("--r", flips_r_text)->required();
    bypass->add_option("--flips", flips);
    bypass->add_option("--out", out_file);
    CLI::App* convert = trace->add_subcommand("convert", "surgery conversion");
    convert->add_option("--knot", knot_name)->required()->check(CLI::IsMember({"trefoil", "unknot"}));
    convert->add_option("--coeff", coeff_text)->required();
    convert->add_option("--out", out_file);

    CLI::App* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("suite", suite)
        ->check(CLI::IsMember({"all", "counts", "farey", "monodromy", "surgery"}));
    verify->add_option("--den-bound", den_bound)->check(CLI::PositiveNumber);
    verify->add_flag("--parallel", parallel);
    verify->add_option("--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string text;
        int code = 0;
        if (app.got_subcommand(count)) {
            tcs::CensusRow row = tcs::census_row(n_value, tcs::parse_slope(r_text));
            text = (format == "json") ? tcs::render_json(row)
                                      : render_rows({row}, format);
        } else if (app.got_subcommand(census)) {
            std::vector<tcs::CensusRow> rows = tcs::run_census(
                parse_n_range(n_range_text), parse_r_list(r_list_text), parallel);
            text = render_rows(rows, format);
        } else if (app.got_subcommand(phi_cmd)) {
            text = std::to_string(tcs::phi(tcs::parse_slope(r_text))) + "\n";
        } else if (app.got_subcommand(psi_cmd)) {
            text = std::to_string(tcs::psi(tcs::parse_slope(r_text))) + "\n";
        } else if (app.got_subcommand(contfrac_cmd)) {
            std::vector<int64> terms = tcs::nf_expand(tcs::parse_slope(r_text));
            std::string body;
            for (int64 t : terms) {
                if (!body.empty()) body += ", ";
                body += std::to_string(t);
            }
            text = "[" + body + "]\n";
        } else if (app.got_subcommand(trace)) {
            if (trace->got_subcommand(thicken)) {
                text = trace_thicken(tcs::parse_slope(s_text));
            } else if (trace->got_subcommand(bypass)) {
                Slope s = tcs::parse_slope(s_text);
                Slope r = tcs::parse_slope(flips_r_text);
                text = tcs::to_string(s) + " -> " +
                       tcs::to_string(tcs::bypass_slope(s, r, flips)) + "\n";
            } else {
                text = trace_convert(knot_name, tcs::parse_slope(coeff_text));
            }
        } else if (app.got_subcommand(verify)) {
            code = run_verify(suite, den_bound, parallel, text);
        }
        emit(text, out_file);
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tcs::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
