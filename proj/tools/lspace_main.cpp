// lspace: command-line front end for the L-space knot Alexander polynomial
// filters, invariants, homology oracle and realization tables.
//
// Exit codes: 0 success / all checks pass, 1 a filter or oracle check fails,
// 2 usage or parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lspace/admissibility.hpp"
#include "lspace/enumerate.hpp"
#include "lspace/invariants.hpp"
#include "lspace/knot_zoo.hpp"
#include "lspace/laurent.hpp"
#include "lspace/records.hpp"
#include "lspace/staircase.hpp"

namespace {

using namespace lspace;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Seq>
std::string join(const Seq& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out.empty() ? "-" : out;
}

GapVector gaps_argument(const std::string& text) {
    try {
        return parse_gaps(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--gaps: ") + e.what());
    }
}

std::string outcome_text(bool pass, const std::optional<std::int64_t>& witness, const char* label) {
    if (pass) return "pass";
    return witness ? "fail\t" + std::string(label) + "=" + std::to_string(*witness) : "fail";
}

// ---------------------------------------------------------------------------

struct CheckOptions {
    std::string poly;
    std::string gaps;
    bool use_poly = false;
    std::string format = "tsv";
};

int run_check(const CheckOptions& opt) {
    LaurentPolynomial p;
    if (opt.use_poly) {
        try {
            p = parse_poly(opt.poly);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--poly: ") + e.what());
        }
    } else {
        p = polynomial_of(gaps_argument(opt.gaps));
    }

    const auto report = classify(p);
    std::optional<GapVector> gaps;
    std::optional<TorsionSequence> a;
    FilterOutcome torsion;
    SweepOutcome sweep;
    if (report.os_pass) {
        gaps = gaps_from_exponents(os_parse(p));
        a = tilde_delta(p);
        torsion = new_check_torsion(*a);
        sweep = rasmussen_sweep(*a);
    }

    if (opt.format == "json-lines") {
        nlohmann::json j = {{"schema", records::schema},
                            {"type", "check"},
                            {"polynomial", format_poly(p)},
                            {"os", report.os_pass},
                            {"hw", report.hw_pass},
                            {"new", report.new_pass},
                            {"witness", report.witness_text()}};
        if (gaps) {
            j["gaps"] = gaps->values();
            j["genus"] = gaps->genus();
            j["a_sequence"] = a->entries();
            j["torsion"] = torsion.pass;
            j["rasmussen"] = sweep.pass;
            if (torsion.witness) j["torsion_witness"] = *torsion.witness;
            if (sweep.witness_m) j["rasmussen_witness"] = *sweep.witness_m;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "polynomial\t" << format_poly(p) << '\n';
        if (gaps) {
            std::cout << "genus\t" << gaps->genus() << '\n'
                      << "exponents\t" << join(exponents_from_gaps(*gaps).values()) << '\n'
                      << "gaps\t" << join(gaps->values()) << '\n'
                      << "a_sequence\t" << join(a->entries()) << '\n';
        }
        std::cout << "os\t" << (report.os_pass ? "pass" : "fail\t" + report.witness_text()) << '\n';
        if (report.os_pass) {
            std::cout << "hw\t" << (report.hw_pass ? "pass" : "fail") << '\n'
                      << "new\t" << outcome_text(report.new_pass, report.failing_j, "j") << '\n'
                      << "torsion\t" << outcome_text(torsion.pass, torsion.witness, "i") << '\n'
                      << "rasmussen\t" << outcome_text(sweep.pass, sweep.witness_m, "m") << '\n';
        }
    }
    return report.all_pass() ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------------------

struct EnumerateOptions {
    std::int64_t genus = 0;
    std::string format = "tsv";
    bool all = false;
    bool match = false;
    std::int64_t cable_depth = 2;
};

void print_rows(const std::vector<ClassificationRow>& rows, const std::string& format, bool with_status) {
    if (format == "tsv") {
        std::cout << records::classification_tsv_header() << (with_status ? "\tstatus" : "") << '\n';
    }
    for (const auto& row : rows) {
        if (format == "tsv") {
            std::cout << records::to_tsv(row);
            if (with_status) std::cout << '\t' << to_string(row_status(row));
            std::cout << '\n';
        } else if (with_status) {
            auto j = nlohmann::json::parse(records::to_json_line(row));
            j["status"] = to_string(row_status(row));
            std::cout << j.dump() << '\n';
        } else {
            std::cout << records::to_json_line(row) << '\n';
        }
    }
}

int run_enumerate(const EnumerateOptions& opt) {
    const auto known = opt.match ? zoo(opt.genus, opt.cable_depth) : std::vector<ZooEntry>{};
    print_rows(classify_vectors(opt.genus, !opt.all, known), opt.format, false);
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct InvariantsOptions {
    std::string gaps;
    std::string m_range;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--m-range must look like lo..hi");
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const auto lo_text = text.substr(0, dots);
        const auto hi_text = text.substr(dots + 2);
        const auto lo = std::stoll(lo_text, &used_lo);
        const auto hi = std::stoll(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("--m-range must look like lo..hi with lo <= hi");
    }
}

int run_invariants(const InvariantsOptions& opt) {
    const auto r = gaps_argument(opt.gaps);
    const auto a = tilde_delta(polynomial_of(r));
    const auto g = a.genus();
    const auto [lo, hi] = opt.m_range.empty() ? std::make_pair(-g, g) : parse_range(opt.m_range);
    const auto jumps = jump_values(r);

    bool violated = false;
    std::cout << "m\tdtilde_knot\tdtilde_unknot\thbar\tbound\tjump\tstatus\n";
    for (auto m = lo; m <= hi; ++m) {
        std::string jump = "-";
        for (std::size_t j = 0; j < jumps.size(); ++j) {
            if (jumps[j].m == m) jump = "j=" + std::to_string(j + 1);
        }
        std::cout << m << '\t' << dtilde_knot(a, m) << '\t' << dtilde_unknot(m) << '\t';
        if (m < -g || m > g) {
            std::cout << "0\t-\t" << jump << "\toutside\n";
            continue;
        }
        const auto h = hbar(a, m);
        const auto bound = hbar_bound(g, m);
        const bool ok = h <= bound;
        violated = violated || !ok;
        std::cout << h << '\t' << bound << '\t' << jump << '\t' << (ok ? "ok" : "violation") << '\n';
    }
    return violated ? exit_failure : exit_ok;
}

// ---------------------------------------------------------------------------

struct OracleOptions {
    std::string gaps;
    std::int64_t m = 0;
    std::optional<std::int64_t> truncation;
    std::int64_t genus_limit = 8;
};

int run_oracle(const OracleOptions& opt) {
    const auto r = gaps_argument(opt.gaps);
    if (r.genus() > opt.genus_limit) {
        throw UsageError("genus " + std::to_string(r.genus()) + " exceeds the oracle limit " +
                         std::to_string(opt.genus_limit) + " (raise --genus-limit)");
    }
    const auto n = exponents_from_gaps(r);
    const auto complex = build_staircase(n);
    const auto truncation = opt.truncation.value_or(default_truncation(r.genus()));
    std::int64_t from_homology = 0;
    try {
        from_homology = homology_dtilde(complex, opt.m, truncation);
    } catch (const TruncationError& e) {
        throw UsageError(e.what());
    }
    const auto from_formula = dtilde_knot(tilde_delta(n.polynomial()), opt.m);
    const bool agree = from_homology == from_formula;
    std::cout << "gaps\t" << join(r.values()) << '\n'
              << "m\t" << opt.m << '\n'
              << "truncation\t" << truncation << '\n'
              << "homology\t" << from_homology << '\n'
              << "formula\t" << from_formula << '\n'
              << "status\t" << (agree ? "agree" : "disagree") << '\n';
    return agree ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------------------

struct TableOptions {
    std::int64_t max_genus = 1;
    std::string format = "tsv";
    std::int64_t cable_depth = 2;
};

int run_table(const TableOptions& opt) {
    print_rows(realization_table(opt.max_genus, opt.cable_depth), opt.format, true);
    return exit_ok;
}

struct KnotsOptions {
    std::int64_t max_genus = 5;
    std::string format = "tsv";
    std::int64_t cable_depth = 2;
};

int run_knots(const KnotsOptions& opt) {
    const auto entries = zoo(opt.max_genus, opt.cable_depth);
    if (opt.format == "tsv") std::cout << "name\tgenus\tgaps\tpolynomial\n";
    for (const auto& e : entries) {
        if (opt.format == "tsv") {
            std::cout << e.knot.name() << '\t' << e.gaps.genus() << '\t' << join(e.gaps.values()) << '\t'
                      << format_poly(e.delta) << '\n';
        } else {
            nlohmann::json j = {{"schema", records::schema},   {"type", "knot"},
                                {"name", e.knot.name()},       {"genus", e.gaps.genus()},
                                {"gaps", e.gaps.values()},     {"polynomial", format_poly(e.delta)}};
            std::cout << j.dump() << '\n';
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomial obstructions for L-space knots"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"tsv", "json-lines"};

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Run the OS, HW and gap-inequality filters on one input");
    auto* poly_opt = check_cmd->add_option("--poly", check.poly, "Polynomial text, e.g. \"T - 1 + T^-1\"");
    auto* gaps_opt = check_cmd->add_option("--gaps", check.gaps, "Gap vector, e.g. 1,2,1");
    poly_opt->excludes(gaps_opt);
    check_cmd->add_option("--format", check.format)->check(CLI::IsMember(formats));

    EnumerateOptions enumerate;
    auto* enum_cmd = app.add_subcommand("enumerate", "Classify every candidate gap vector of one genus");
    enum_cmd->add_option("--genus", enumerate.genus)->required()->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--format", enumerate.format)->check(CLI::IsMember(formats));
    auto* all_flag = enum_cmd->add_flag("--all", enumerate.all, "Include vectors with r_1 != 1");
    auto* hw_flag = enum_cmd->add_flag("--hw-only", "Only vectors with r_1 = 1 (default)");
    all_flag->excludes(hw_flag);
    enum_cmd->add_flag("--match", enumerate.match, "Attach known-knot matches");
    enum_cmd->add_option("--cable-depth", enumerate.cable_depth)->check(CLI::NonNegativeNumber);

    InvariantsOptions invariants;
    auto* inv_cmd = app.add_subcommand("invariants", "Tabulate dtilde, hbar and the Rasmussen bound");
    inv_cmd->add_option("--gaps", invariants.gaps)->required();
    inv_cmd->add_option("--m-range", invariants.m_range, "lo..hi (default -g..g)");

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare homology and closed-form dtilde at one m");
    oracle_cmd->add_option("--gaps", oracle.gaps)->required();
    oracle_cmd->add_option("--m", oracle.m)->required();
    oracle_cmd->add_option("--truncation", oracle.truncation, "U-power truncation degree (default 4g+4)");
    oracle_cmd->add_option("--genus-limit", oracle.genus_limit);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Realization table for genus 1..G");
    table_cmd->add_option("--max-genus", table.max_genus)->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", table.format)->check(CLI::IsMember(formats));
    table_cmd->add_option("--cable-depth", table.cable_depth)->check(CLI::NonNegativeNumber);

    KnotsOptions knots;
    auto* knots_cmd = app.add_subcommand("knots", "Dump known L-space knots up to a genus");
    knots_cmd->add_option("--max-genus", knots.max_genus)->check(CLI::NonNegativeNumber);
    knots_cmd->add_option("--format", knots.format)->check(CLI::IsMember(formats));
    knots_cmd->add_option("--cable-depth", knots.cable_depth)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check_cmd->parsed()) {
            if (poly_opt->count() + gaps_opt->count() != 1) {
                throw UsageError("check needs exactly one of --poly or --gaps");
            }
            check.use_poly = poly_opt->count() == 1;
            return run_check(check);
        }
        if (enum_cmd->parsed()) return run_enumerate(enumerate);
        if (inv_cmd->parsed()) return run_invariants(invariants);
        if (oracle_cmd->parsed()) return run_oracle(oracle);
        if (table_cmd->parsed()) return run_table(table);
        if (knots_cmd->parsed()) return run_knots(knots);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
