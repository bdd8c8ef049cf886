#pragma once

// Exact one-variable Laurent polynomials over the integers, the text grammar
// used for polynomial input, and the torsion sequence of Delta / (1 - T^-1).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lspace {

using Exponent = std::int64_t;
using Coefficient = boost::multiprecision::cpp_int;

/// Raised by parse_poly. offset() is the byte position of the offending
/// character in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Raised when a polynomial is not of the alternating +-1 symmetric form the
/// torsion-sequence machinery requires.
class NotAdmissibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sparse Laurent polynomial in T with integer coefficients. Zero
/// coefficients are never stored, so equal polynomials have identical term
/// maps.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Coefficient>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(TermMap terms);

    static LaurentPolynomial monomial(Coefficient c, Exponent e);
    static LaurentPolynomial constant(Coefficient c) { return monomial(std::move(c), 0); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient of T^e (zero when absent).
    Coefficient coefficient(Exponent e) const;

    /// Highest / lowest exponent with a nonzero coefficient. Throws on zero.
    Exponent top_exponent() const;
    Exponent bottom_exponent() const;

    /// Value at T = 1.
    Coefficient evaluate_at_one() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        return lhs += rhs;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        return lhs -= rhs;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ < b.terms_;
    }

    /// Multiplies every exponent by -1.
    LaurentPolynomial mirrored() const;

    /// Multiplies by T^shift.
    LaurentPolynomial shifted(Exponent shift) const;

private:
    void add_term(Exponent e, const Coefficient& c);

    TermMap terms_;
};

LaurentPolynomial parse_poly(std::string_view text);
std::string format_poly(const LaurentPolynomial& p);

LaurentPolynomial multiply(const LaurentPolynomial& p, const LaurentPolynomial& q);
inline LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return multiply(p, q);
}

/// p(T^m) for m >= 1.
LaurentPolynomial substitute_power(const LaurentPolynomial& p, std::int64_t m);

/// Exact division. Throws std::domain_error if den does not divide num or if
/// the leading coefficient of den is not a unit.
LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Strictly decreasing exponents a_0 > a_1 > ... > a_g of
/// Delta / (1 - T^-1) = sum_i T^{a_i}. Only a_0..a_g are stored; for i >= g
/// the tail is a_i = -i.
class TorsionSequence {
public:
    /// Validates a_0 = g, strict decrease and a_g = -g where g = size - 1.
    explicit TorsionSequence(std::vector<Exponent> entries);

    const std::vector<Exponent>& entries() const noexcept { return entries_; }
    std::int64_t genus() const noexcept { return static_cast<std::int64_t>(entries_.size()) - 1; }

    /// a_i for any i >= 0, applying the tail rule past the stored prefix.
    Exponent at(std::int64_t i) const;

    friend bool operator==(const TorsionSequence&, const TorsionSequence&) = default;

private:
    std::vector<Exponent> entries_;
};

/// Torsion sequence of an admissible Delta: the exponents where the running
/// coefficient sum, taken from the top exponent downward, equals 1.
TorsionSequence tilde_delta(const LaurentPolynomial& p);

/// sum_{a_i >= low} T^{a_i}. Requires low <= -g.
LaurentPolynomial expand_tilde(const TorsionSequence& a, Exponent low);

}  // namespace lspace
