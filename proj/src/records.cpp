#include "lspace/records.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lspace::records {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

bool parse_verdict(const std::string& s) {
    if (s == "pass") return true;
    if (s == "fail") return false;
    throw std::invalid_argument("bad verdict '" + s + "'");
}

std::string gaps_field(const GapVector& r) { return r.empty() ? "-" : to_string(r); }
GapVector parse_gaps_field(const std::string& s) { return s == "-" ? GapVector{} : parse_gaps(s); }

json check_schema(const std::string& line, const char* type) {
    auto j = json::parse(line);
    if (j.at("schema") != schema) throw std::invalid_argument("unsupported schema");
    if (j.at("type") != type) throw std::invalid_argument(std::string("expected record type ") + type);
    return j;
}

json report_fields(const FilterReport& report) {
    return {{"os", report.os_pass}, {"hw", report.hw_pass}, {"new", report.new_pass},
            {"witness", report.witness_text()}};
}

FilterReport report_from(const json& j) {
    FilterReport report;
    report.os_pass = j.at("os").get<bool>();
    report.hw_pass = j.at("hw").get<bool>();
    report.new_pass = j.at("new").get<bool>();
    apply_witness(report, j.at("witness").get<std::string>());
    return report;
}

}  // namespace

void apply_witness(FilterReport& report, const std::string& text) {
    report.os_defect.reset();
    report.failing_j.reset();
    if (text == "-") return;
    if (text.rfind("j=", 0) == 0) {
        report.failing_j = std::stoll(text.substr(2));
        return;
    }
    for (auto d : {OsDefect::even_term_count, OsDefect::coefficient_not_unit, OsDefect::non_alternating_signs,
                   OsDefect::asymmetric_exponents}) {
        if (text == to_string(d)) {
            report.os_defect = d;
            return;
        }
    }
    throw std::invalid_argument("bad witness '" + text + "'");
}

std::string classification_tsv_header() { return "gaps\tgenus\tos\thw\tnew\twitness\tmatches"; }

std::string to_tsv(const ClassificationRow& row) {
    std::string matches;
    for (const auto& m : row.matches) {
        if (!matches.empty()) matches += ';';
        matches += m;
    }
    std::ostringstream out;
    out << gaps_field(row.gaps) << '\t' << row.gaps.genus() << '\t' << verdict(row.report.os_pass) << '\t'
        << verdict(row.report.hw_pass) << '\t' << verdict(row.report.new_pass) << '\t' << row.report.witness_text()
        << '\t' << (matches.empty() ? "-" : matches);
    return out.str();
}

ClassificationRow classification_from_tsv(const std::string& line) {
    const auto f = split(line, '\t');
    if (f.size() != 7) throw std::invalid_argument("classification row needs 7 columns");
    ClassificationRow row;
    row.gaps = parse_gaps_field(f[0]);
    if (std::stoll(f[1]) != row.gaps.genus()) throw std::invalid_argument("genus column disagrees with gaps");
    row.polynomial = polynomial_of(row.gaps);
    row.report.os_pass = parse_verdict(f[2]);
    row.report.hw_pass = parse_verdict(f[3]);
    row.report.new_pass = parse_verdict(f[4]);
    apply_witness(row.report, f[5]);
    if (f[6] != "-") row.matches = split(f[6], ';');
    return row;
}

std::string to_json_line(const ClassificationRow& row) {
    json j = {{"schema", schema},
              {"type", "classification"},
              {"gaps", row.gaps.values()},
              {"genus", row.gaps.genus()},
              {"polynomial", format_poly(row.polynomial)},
              {"matches", row.matches}};
    j.update(report_fields(row.report));
    return j.dump();
}

ClassificationRow classification_from_json_line(const std::string& line) {
    const auto j = check_schema(line, "classification");
    ClassificationRow row;
    row.gaps = GapVector(j.at("gaps").get<std::vector<std::int64_t>>());
    row.polynomial = parse_poly(j.at("polynomial").get<std::string>());
    row.report = report_from(j);
    row.matches = j.at("matches").get<std::vector<std::string>>();
    return row;
}

std::string to_json_line(const FilterReport& report) {
    json j = {{"schema", schema}, {"type", "filter_report"}};
    j.update(report_fields(report));
    return j.dump();
}

FilterReport filter_report_from_json_line(const std::string& line) {
    return report_from(check_schema(line, "filter_report"));
}

std::string to_json_line(const InvariantProfile& profile) {
    json jumps = json::array();
    for (const auto& jump : profile.jumps) jumps.push_back({jump.m, jump.dtilde});
    json j = {{"schema", schema},          {"type", "invariant_profile"}, {"genus", profile.genus},
              {"dtilde", profile.dtilde}, {"hbar", profile.hbar},         {"jumps", jumps}};
    return j.dump();
}

InvariantProfile profile_from_json_line(const std::string& line) {
    const auto j = check_schema(line, "invariant_profile");
    InvariantProfile profile;
    profile.genus = j.at("genus").get<std::int64_t>();
    profile.dtilde = j.at("dtilde").get<std::vector<std::int64_t>>();
    profile.hbar = j.at("hbar").get<std::vector<std::int64_t>>();
    for (const auto& jump : j.at("jumps")) {
        profile.jumps.push_back({jump.at(0).get<std::int64_t>(), jump.at(1).get<std::int64_t>()});
    }
    if (profile.dtilde.size() != static_cast<std::size_t>(2 * profile.genus + 3) ||
        profile.hbar.size() != static_cast<std::size_t>(2 * profile.genus + 1)) {
        throw std::invalid_argument("profile tables do not match genus");
    }
    return profile;
}

}  // namespace lspace::records
