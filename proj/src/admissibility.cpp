#include "lspace/admissibility.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace lspace {

std::string to_string(OsDefect d) {
    switch (d) {
        case OsDefect::even_term_count: return "even_term_count";
        case OsDefect::coefficient_not_unit: return "coefficient_not_unit";
        case OsDefect::non_alternating_signs: return "non_alternating_signs";
        case OsDefect::asymmetric_exponents: return "asymmetric_exponents";
    }
    return "unknown";
}

OsFormError::OsFormError(OsDefect defect, const std::string& detail)
    : NotAdmissibleError(to_string(defect) + ": " + detail), defect_(defect) {}

ExponentSequence::ExponentSequence(std::vector<Exponent> increasing) : n_(std::move(increasing)) {
    if (n_.size() % 2 != 1) throw std::invalid_argument("exponent sequence must have odd length");
    for (std::size_t i = 1; i < n_.size(); ++i) {
        if (n_[i] <= n_[i - 1]) throw std::invalid_argument("exponent sequence must be strictly increasing");
    }
    for (std::size_t i = 0; i < n_.size(); ++i) {
        if (n_[i] != -n_[n_.size() - 1 - i]) throw std::invalid_argument("exponent sequence must be symmetric");
    }
}

Exponent ExponentSequence::operator()(std::int64_t i) const {
    if (i < -k() || i > k()) throw std::out_of_range("exponent index out of range");
    return n_[static_cast<std::size_t>(i + k())];
}

LaurentPolynomial ExponentSequence::polynomial() const {
    LaurentPolynomial::TermMap terms;
    for (std::int64_t i = -k(); i <= k(); ++i) {
        terms.emplace((*this)(i), ((k() + i) % 2 == 0) ? 1 : -1);
    }
    return LaurentPolynomial(std::move(terms));
}

GapVector::GapVector(std::vector<std::int64_t> r) : r_(std::move(r)) {
    for (auto x : r_) {
        if (x < 1) throw std::invalid_argument("gap entries must be positive");
        genus_ += x;
    }
}

std::string to_string(const GapVector& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.values()[i]);
    }
    return out;
}

GapVector parse_gaps(const std::string& text) {
    std::vector<std::int64_t> r;
    if (text.empty()) return GapVector{};
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view item(text.data() + start, (comma == std::string::npos ? text.size() : comma) - start);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
            throw std::invalid_argument("bad gap entry '" + std::string(item) + "' at offset " +
                                        std::to_string(start));
        }
        r.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return GapVector(std::move(r));
}

ExponentSequence os_parse(const LaurentPolynomial& p) {
    const auto& terms = p.terms();
    if (terms.size() % 2 == 0) {
        throw OsFormError(OsDefect::even_term_count, std::to_string(terms.size()) + " nonzero terms");
    }
    for (const auto& [e, c] : terms) {
        if (c != 1 && c != -1) {
            throw OsFormError(OsDefect::coefficient_not_unit, "exponent " + std::to_string(e));
        }
    }
    int expected = 1;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it->second != expected) {
            throw OsFormError(OsDefect::non_alternating_signs, "exponent " + std::to_string(it->first));
        }
        expected = -expected;
    }
    std::vector<Exponent> n;
    n.reserve(terms.size());
    for (const auto& [e, c] : terms) n.push_back(e);
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] != -n[n.size() - 1 - i]) {
            throw OsFormError(OsDefect::asymmetric_exponents, "exponent " + std::to_string(n[i]));
        }
    }
    return ExponentSequence(std::move(n));
}

GapVector gaps_from_exponents(const ExponentSequence& n) {
    const auto k = n.k();
    std::vector<std::int64_t> r;
    r.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 1; i <= k; ++i) r.push_back(n(k + 2 - 2 * i) - n(k + 1 - 2 * i));
    return GapVector(std::move(r));
}

ExponentSequence exponents_from_gaps(const GapVector& r) {
    // Reading down from the top, gap 2i-1 is r_i and gap 2i is r_{k+1-i}.
    const auto k = static_cast<std::int64_t>(r.size());
    std::vector<Exponent> descending;
    descending.reserve(static_cast<std::size_t>(2 * k + 1));
    Exponent current = r.genus();
    descending.push_back(current);
    for (std::int64_t i = 1; i <= k; ++i) {
        current -= r.r(static_cast<std::size_t>(i));
        descending.push_back(current);
        current -= r.r(static_cast<std::size_t>(k + 1 - i));
        descending.push_back(current);
    }
    return ExponentSequence(std::vector<Exponent>(descending.rbegin(), descending.rend()));
}

bool hw_check(const GapVector& r) { return r.empty() || r.r(1) == 1; }

FilterOutcome new_check_gaps(const GapVector& r) {
    const auto k = r.size();
    if (k == 0) return {};
    if (r.r(1) != 1) return {false, 1};
    std::int64_t left = 0;   // r_2 + ... + r_j
    std::int64_t right = 0;  // r_{k-j+2} + ... + r_k
    for (std::size_t j = 2; j <= k; ++j) {
        left += r.r(j);
        right += r.r(k - j + 2);
        if (left > right) return {false, static_cast<std::int64_t>(j)};
    }
    return {};
}

FilterOutcome new_check_torsion(const TorsionSequence& a) {
    const auto g = a.genus();
    for (std::int64_t i = 0; i <= g; ++i) {
        if (a.at(i) > g - 2 * i) return {false, i};
    }
    return {};
}

std::string FilterReport::witness_text() const {
    if (os_defect) return to_string(*os_defect);
    if (failing_j) return "j=" + std::to_string(*failing_j);
    return "-";
}

FilterReport classify(const GapVector& r) {
    FilterReport report;
    report.os_pass = true;
    report.hw_pass = hw_check(r);
    auto outcome = new_check_gaps(r);
    report.new_pass = report.hw_pass && outcome.pass;
    report.failing_j = outcome.witness;
    return report;
}

FilterReport classify(const LaurentPolynomial& p) {
    try {
        return classify(gaps_from_exponents(os_parse(p)));
    } catch (const OsFormError& e) {
        FilterReport report;
        report.os_defect = e.defect();
        return report;
    }
}

}  // namespace lspace
