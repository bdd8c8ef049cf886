#pragma once

// Alexander polynomials of known L-space knots: positive torus knots, their
// L-space cables (iterated), and a short list of sporadic examples.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lspace/admissibility.hpp"
#include "lspace/laurent.hpp"

namespace lspace {

struct KnotDescriptor;

struct TorusKnot {
    std::int64_t p;
    std::int64_t q;
};

/// (strands, winding)-cable of a companion knot.
struct CableKnot {
    std::int64_t strands;
    std::int64_t winding;
    std::shared_ptr<const KnotDescriptor> companion;
};

/// A knot outside the torus/cable families, carried with its Alexander
/// polynomial.
struct SporadicKnot {
    std::string name;
    LaurentPolynomial delta;
};

struct KnotDescriptor {
    std::variant<TorusKnot, CableKnot, SporadicKnot> kind;

    std::string name() const;
    LaurentPolynomial delta() const;
    /// Top exponent of delta().
    std::int64_t genus() const;
};

/// Symmetrized Alexander polynomial of T(p,q): (1-T)(1-T^{pq}) / ((1-T^p)(1-T^q)),
/// centred so the top exponent is (p-1)(q-1)/2. Requires 2 <= p < q coprime.
LaurentPolynomial torus_delta(std::int64_t p, std::int64_t q);

/// Delta_K(T^strands) * Delta_{T(strands, winding)}(T). Enforces strands >= 2,
/// coprimality and the L-space cabling condition winding >= strands (2g(K) - 1).
LaurentPolynomial cable_delta(const LaurentPolynomial& companion, std::int64_t strands, std::int64_t winding);

/// The (-2,3,7)-pretzel knot.
KnotDescriptor pretzel_minus2_3_7();

struct ZooEntry {
    KnotDescriptor knot;
    LaurentPolynomial delta;
    GapVector gaps;
};

/// All torus knots, sporadic knots and iterated L-space cables (up to
/// max_cable_depth levels) of genus <= max_genus, ordered by genus and then by
/// generation order. Throws std::logic_error if any entry fails a filter.
std::vector<ZooEntry> zoo(std::int64_t max_genus, std::int64_t max_cable_depth = 2);

}  // namespace lspace
