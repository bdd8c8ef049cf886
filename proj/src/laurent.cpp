#include "lspace/laurent.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace lspace {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

LaurentPolynomial::LaurentPolynomial(TermMap terms) {
    for (auto& [e, c] : terms) {
        if (c != 0) terms_.emplace(e, std::move(c));
    }
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, Exponent e) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

Coefficient LaurentPolynomial::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

Exponent LaurentPolynomial::top_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no top exponent");
    return terms_.rbegin()->first;
}

Exponent LaurentPolynomial::bottom_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no bottom exponent");
    return terms_.begin()->first;
}

Coefficient LaurentPolynomial::evaluate_at_one() const {
    Coefficient sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

void LaurentPolynomial::add_term(Exponent e, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
    TermMap out;
    for (const auto& [e, c] : terms_) out.emplace(-e, c);
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent shift) const {
    TermMap out;
    for (const auto& [e, c] : terms_) out.emplace(e + shift, c);
    return LaurentPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    LaurentPolynomial parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        term(sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            ++pos_;
            term(op == '-' ? -1 : 1);
        }
        return LaurentPolynomial(std::move(terms_));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (at_end()) fail(std::string("expected '") + c + "', found end of input");
        if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
        ++pos_;
    }

    void emit(Exponent e, Coefficient c, std::size_t where) {
        if (!terms_.try_emplace(e, std::move(c)).second) {
            throw ParseError("duplicate exponent " + std::to_string(e), where);
        }
    }

    Coefficient unsigned_int() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Coefficient(std::string(text_.substr(start, pos_ - start)));
    }

    Exponent signed_int() {
        skip_ws();
        std::size_t start = pos_;
        if (!at_end() && peek() == '-') ++pos_;
        std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits == pos_) fail("expected exponent digits");
        Exponent value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw ParseError("exponent out of range", start);
        return value;
    }

    // 'T' ['^' SINT]
    Exponent variable_power() {
        expect('T');
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            return signed_int();
        }
        return 1;
    }

    void term(int sign) {
        skip_ws();
        if (at_end()) fail("expected a term, found end of input");
        std::size_t where = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            std::size_t first_at = pos_;
            expect('T');
            expect('^');
            Exponent e1 = signed_int();
            expect('+');
            skip_ws();
            std::size_t second_at = pos_;
            expect('T');
            expect('^');
            Exponent e2 = signed_int();
            expect(')');
            if (e1 == std::numeric_limits<Exponent>::min() || e2 != -e1) {
                throw ParseError("paired exponents must be negatives of each other", second_at);
            }
            emit(e1, Coefficient(sign), first_at);
            emit(e2, Coefficient(sign), second_at);
        } else if (c == 'T') {
            emit(variable_power(), Coefficient(sign), where);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Coefficient value = unsigned_int();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                emit(variable_power(), sign * value, where);
            } else {
                emit(0, sign * value, where);
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    LaurentPolynomial::TermMap terms_;
};

}  // namespace

LaurentPolynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c < 0;
        Coefficient magnitude = negative ? Coefficient(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << magnitude;
        } else {
            if (magnitude != 1) out << magnitude << '*';
            out << "T^" << e;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

LaurentPolynomial multiply(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    LaurentPolynomial::TermMap out;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            out[ep + eq] += cp * cq;
        }
    }
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial substitute_power(const LaurentPolynomial& p, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
    LaurentPolynomial::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        Exponent scaled = 0;
        if (__builtin_mul_overflow(e, m, &scaled)) throw std::overflow_error("exponent overflow");
        out.emplace(scaled, c);
    }
    return LaurentPolynomial(std::move(out));
}

LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    const Exponent den_top = den.top_exponent();
    const Coefficient lead = den.coefficient(den_top);
    if (lead != 1 && lead != -1) throw std::domain_error("divisor leading coefficient is not a unit");

    LaurentPolynomial remainder = num;
    LaurentPolynomial quotient;
    while (!remainder.is_zero() && remainder.top_exponent() - den_top >= num.bottom_exponent() - den.bottom_exponent()) {
        const Exponent rt = remainder.top_exponent();
        auto step = LaurentPolynomial::monomial(remainder.coefficient(rt) * lead, rt - den_top);
        quotient += step;
        remainder -= multiply(step, den);
    }
    if (!remainder.is_zero()) throw std::domain_error("division is not exact");
    return quotient;
}

// ---------------------------------------------------------------------------
// Torsion sequence

TorsionSequence::TorsionSequence(std::vector<Exponent> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("torsion sequence must contain a_0");
    const auto g = genus();
    if (entries_.front() != g) throw std::invalid_argument("torsion sequence must start at a_0 = g");
    if (entries_.back() != -g) throw std::invalid_argument("torsion sequence must end at a_g = -g");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] >= entries_[i - 1]) {
            throw std::invalid_argument("torsion sequence must be strictly decreasing");
        }
    }
}

Exponent TorsionSequence::at(std::int64_t i) const {
    if (i < 0) throw std::out_of_range("negative torsion index");
    if (i < static_cast<std::int64_t>(entries_.size())) return entries_[static_cast<std::size_t>(i)];
    return -i;
}

TorsionSequence tilde_delta(const LaurentPolynomial& p) {
    if (p.is_zero()) throw NotAdmissibleError("zero polynomial");
    const Exponent g = p.top_exponent();
    if (g < 0 || p.bottom_exponent() < -g) throw NotAdmissibleError("exponents are not centred");
    std::vector<Exponent> a;
    Coefficient partial = 0;
    for (Exponent e = g; e >= -g; --e) {
        partial += p.coefficient(e);
        if (partial == 1) {
            a.push_back(e);
        } else if (partial != 0) {
            throw NotAdmissibleError("running coefficient sum leaves {0,1} at exponent " +
                                     std::to_string(e));
        }
    }
    if (partial != 1) throw NotAdmissibleError("coefficients do not sum to 1");
    if (static_cast<Exponent>(a.size()) != g + 1) {
        throw NotAdmissibleError("torsion prefix has the wrong length for genus " + std::to_string(g));
    }
    return TorsionSequence(std::move(a));
}

LaurentPolynomial expand_tilde(const TorsionSequence& a, Exponent low) {
    const auto g = a.genus();
    if (low > -g) throw std::invalid_argument("expand_tilde requires low <= -g");
    LaurentPolynomial::TermMap out;
    for (Exponent e : a.entries()) out.emplace(e, 1);
    for (Exponent i = g + 1; -i >= low; ++i) out.emplace(-i, 1);
    return LaurentPolynomial(std::move(out));
}

}  // namespace lspace
