#pragma once

// Polynomial <-> exponent sequence <-> gap vector conversions and the three
// nested filters on candidate L-space knot Alexander polynomials:
//   os  - alternating +-1 symmetric form,
//   hw  - top gap equals one,
//   new - partial-sum inequality on the gap vector (equivalently
//         a_i <= g - 2i on the torsion sequence).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspace/laurent.hpp"

namespace lspace {

enum class OsDefect {
    even_term_count,
    coefficient_not_unit,
    non_alternating_signs,
    asymmetric_exponents,
};

std::string to_string(OsDefect d);

class OsFormError : public NotAdmissibleError {
public:
    OsFormError(OsDefect defect, const std::string& detail);
    OsDefect defect() const noexcept { return defect_; }

private:
    OsDefect defect_;
};

/// Symmetric strictly increasing exponents n_{-k} < ... < n_k, stored as a
/// vector of length 2k+1 and addressed by the signed index -k..k.
class ExponentSequence {
public:
    explicit ExponentSequence(std::vector<Exponent> increasing);

    std::int64_t k() const noexcept { return static_cast<std::int64_t>(n_.size() / 2); }
    Exponent operator()(std::int64_t i) const;
    Exponent genus() const noexcept { return n_.back(); }
    const std::vector<Exponent>& values() const noexcept { return n_; }

    /// sum_i (-1)^{k+i} T^{n_i}
    LaurentPolynomial polynomial() const;

    friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;

private:
    std::vector<Exponent> n_;
};

/// Positive step lengths r_1..r_k of the staircase, left to right.
class GapVector {
public:
    GapVector() = default;
    explicit GapVector(std::vector<std::int64_t> r);

    const std::vector<std::int64_t>& values() const noexcept { return r_; }
    std::size_t size() const noexcept { return r_.size(); }
    bool empty() const noexcept { return r_.empty(); }
    std::int64_t genus() const noexcept { return genus_; }

    /// 1-based access, matching the conventional r_1..r_k numbering.
    std::int64_t r(std::size_t i) const { return r_.at(i - 1); }

    friend bool operator==(const GapVector& a, const GapVector& b) { return a.r_ == b.r_; }
    friend bool operator<(const GapVector& a, const GapVector& b) { return a.r_ < b.r_; }

private:
    std::vector<std::int64_t> r_;
    std::int64_t genus_ = 0;
};

/// "1,2,1" style; empty vector prints as "".
std::string to_string(const GapVector& r);
/// Inverse of to_string. Accepts "" for the empty vector; throws
/// std::invalid_argument on anything else that is not a comma list of
/// positive integers.
GapVector parse_gaps(const std::string& text);

ExponentSequence os_parse(const LaurentPolynomial& p);
GapVector gaps_from_exponents(const ExponentSequence& n);
ExponentSequence exponents_from_gaps(const GapVector& r);

inline LaurentPolynomial polynomial_of(const GapVector& r) { return exponents_from_gaps(r).polynomial(); }

bool hw_check(const GapVector& r);

struct FilterOutcome {
    bool pass = true;
    /// Least failing index: j for the gap form, i for the torsion form.
    std::optional<std::int64_t> witness;
};

FilterOutcome new_check_gaps(const GapVector& r);
FilterOutcome new_check_torsion(const TorsionSequence& a);

struct FilterReport {
    bool os_pass = false;
    bool hw_pass = false;
    bool new_pass = false;
    std::optional<OsDefect> os_defect;
    /// Least failing j of the gap inequality; j = 1 means the top gap is not 1.
    std::optional<std::int64_t> failing_j;

    bool all_pass() const noexcept { return os_pass && hw_pass && new_pass; }
    /// "-", "j=2", or the os defect name.
    std::string witness_text() const;

    friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

FilterReport classify(const LaurentPolynomial& p);
FilterReport classify(const GapVector& r);

}  // namespace lspace
