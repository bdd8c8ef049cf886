#include "lspace/knot_zoo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lspace/invariants.hpp"

namespace lspace {

namespace {

LaurentPolynomial one_minus_power(std::int64_t e) {
    return LaurentPolynomial::constant(1) - LaurentPolynomial::monomial(1, e);
}

KnotDescriptor torus(std::int64_t p, std::int64_t q) { return {TorusKnot{p, q}}; }

KnotDescriptor cable(std::int64_t strands, std::int64_t winding, const KnotDescriptor& companion) {
    return {CableKnot{strands, winding, std::make_shared<const KnotDescriptor>(companion)}};
}

}  // namespace

std::string KnotDescriptor::name() const {
    struct Namer {
        std::string operator()(const TorusKnot& t) const {
            return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
        }
        std::string operator()(const CableKnot& c) const {
            return "(" + std::to_string(c.strands) + "," + std::to_string(c.winding) + ")-cable of " +
                   c.companion->name();
        }
        std::string operator()(const SporadicKnot& s) const { return s.name; }
    };
    return std::visit(Namer{}, kind);
}

LaurentPolynomial KnotDescriptor::delta() const {
    struct Evaluator {
        LaurentPolynomial operator()(const TorusKnot& t) const { return torus_delta(t.p, t.q); }
        LaurentPolynomial operator()(const CableKnot& c) const {
            return cable_delta(c.companion->delta(), c.strands, c.winding);
        }
        LaurentPolynomial operator()(const SporadicKnot& s) const { return s.delta; }
    };
    return std::visit(Evaluator{}, kind);
}

std::int64_t KnotDescriptor::genus() const { return delta().top_exponent(); }

LaurentPolynomial torus_delta(std::int64_t p, std::int64_t q) {
    if (p < 2 || q <= p) throw std::invalid_argument("torus knot requires 2 <= p < q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
    const auto numerator = one_minus_power(1) * one_minus_power(p * q);
    const auto denominator = one_minus_power(p) * one_minus_power(q);
    const auto genus = (p - 1) * (q - 1) / 2;
    return divide_exact(numerator, denominator).shifted(-genus);
}

LaurentPolynomial cable_delta(const LaurentPolynomial& companion, std::int64_t strands, std::int64_t winding) {
    if (strands < 2) throw std::invalid_argument("cable needs at least two strands");
    if (std::gcd(strands, winding) != 1) throw std::invalid_argument("cable parameters must be coprime");
    const auto g = companion.top_exponent();
    if (g < 1) throw std::invalid_argument("cable companion must be nontrivial");
    if (winding < strands * (2 * g - 1)) {
        throw std::invalid_argument("cable fails the L-space condition winding >= strands (2g - 1)");
    }
    return substitute_power(companion, strands) * torus_delta(strands, winding);
}

KnotDescriptor pretzel_minus2_3_7() {
    // Lehmer's polynomial evaluated at -T, symmetrized.
    return {SporadicKnot{"P(-2,3,7)", parse_poly("T^5 - T^4 + T^2 - T + 1 - T^-1 + T^-2 - T^-4 + T^-5")}};
}

std::vector<ZooEntry> zoo(std::int64_t max_genus, std::int64_t max_cable_depth) {
    if (max_genus < 0) throw std::invalid_argument("max_genus must be nonnegative");
    std::vector<KnotDescriptor> knots;

    for (std::int64_t p = 2; (p - 1) * p / 2 <= max_genus; ++p) {
        for (std::int64_t q = p + 1; (p - 1) * (q - 1) / 2 <= max_genus; ++q) {
            if (std::gcd(p, q) == 1) knots.push_back(torus(p, q));
        }
    }
    for (auto sporadic : {pretzel_minus2_3_7()}) {
        if (sporadic.genus() <= max_genus) knots.push_back(std::move(sporadic));
    }

    std::size_t level_begin = 0;
    for (std::int64_t depth = 1; depth <= max_cable_depth; ++depth) {
        const std::size_t level_end = knots.size();
        for (std::size_t c = level_begin; c < level_end; ++c) {
            const auto companion = knots[c];
            const auto gc = companion.genus();
            for (std::int64_t m = 2; m * gc <= max_genus; ++m) {
                for (std::int64_t n = std::max(m + 1, m * (2 * gc - 1));
                     m * gc + (m - 1) * (n - 1) / 2 <= max_genus; ++n) {
                    if (std::gcd(m, n) == 1) knots.push_back(cable(m, n, companion));
                }
            }
        }
        level_begin = level_end;
    }

    std::vector<ZooEntry> entries;
    entries.reserve(knots.size());
    for (auto& knot : knots) {
        auto delta = knot.delta();
        auto report = classify(delta);
        if (!report.all_pass() || !rasmussen_sweep(tilde_delta(delta)).pass) {
            throw std::logic_error("zoo knot " + knot.name() + " fails an admissibility filter");
        }
        auto gaps = gaps_from_exponents(os_parse(delta));
        entries.push_back({std::move(knot), std::move(delta), std::move(gaps)});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ZooEntry& a, const ZooEntry& b) { return a.gaps.genus() < b.gaps.genus(); });
    return entries;
}

}  // namespace lspace
