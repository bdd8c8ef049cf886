#pragma once

// Explicit staircase model of CFK^- for an L-space knot over F_2[U], its
// Alexander-filtered subcomplexes A_m, and a brute-force homology computation
// of the shifted d-invariant. The homology path shares nothing with the
// closed form in invariants.hpp and serves as its oracle.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lspace/admissibility.hpp"
#include "lspace/laurent.hpp"

namespace lspace {

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Bigrading {
    std::int64_t alexander = 0;
    std::int64_t maslov = 0;
    friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// U^u_power * x_target, with target a signed index in -k..k.
struct DifferentialTerm {
    std::int64_t target = 0;
    std::int64_t u_power = 0;
    friend bool operator==(const DifferentialTerm&, const DifferentialTerm&) = default;
};

class StaircaseComplex {
public:
    StaircaseComplex(std::int64_t k, std::vector<Bigrading> gradings,
                     std::vector<std::vector<DifferentialTerm>> differential);

    std::int64_t k() const noexcept { return k_; }
    std::int64_t genus() const { return grading(k_).alexander; }
    std::size_t size() const noexcept { return gradings_.size(); }

    const Bigrading& grading(std::int64_t i) const { return gradings_.at(slot(i)); }
    const std::vector<DifferentialTerm>& boundary(std::int64_t i) const { return differential_.at(slot(i)); }

private:
    std::size_t slot(std::int64_t i) const;

    std::int64_t k_;
    std::vector<Bigrading> gradings_;
    std::vector<std::vector<DifferentialTerm>> differential_;
};

/// Builds the staircase with M(x_k) = 0, propagating Maslov gradings downward.
/// Throws std::logic_error if the propagation is inconsistent.
StaircaseComplex build_staircase(const ExponentSequence& n);

/// Formal d^2 over F_2[U] is zero.
bool squares_to_zero(const StaircaseComplex& c);

/// Every boundary term lowers Maslov grading by exactly one and does not
/// raise Alexander grading.
bool respects_gradings(const StaircaseComplex& c);

/// sum over generators of (-1)^M T^A.
LaurentPolynomial euler_characteristic(const StaircaseComplex& c);

/// Ranks of the U = 0 (hat) homology, keyed by Maslov grading; zero ranks omitted.
std::map<std::int64_t, std::size_t> hat_homology_ranks(const StaircaseComplex& c);

/// Finite F_2 model of A_m: basis U^j x_i with n_i - j <= m and 0 <= j <= D.
/// Boundary terms that would leave the window j <= D are dropped.
class TruncatedModule {
public:
    struct Element {
        std::int64_t generator;
        std::int64_t u_power;
        std::int64_t maslov;
    };

    TruncatedModule(const StaircaseComplex& c, std::int64_t m, std::int64_t degree);

    std::int64_t degree() const noexcept { return degree_; }
    const std::vector<Element>& basis() const noexcept { return basis_; }

    /// Indices of basis elements of the given Maslov grading.
    const std::vector<std::size_t>& in_grading(std::int64_t maslov) const;

    /// Index of U^j x_i, or -1 if it is not in the module.
    std::ptrdiff_t index_of(std::int64_t generator, std::int64_t u_power) const;

    /// Boundary of a basis element as basis indices (coefficients in F_2).
    std::vector<std::size_t> boundary(std::size_t element) const;

    std::int64_t max_maslov() const;
    std::int64_t min_maslov() const;

private:
    const StaircaseComplex* complex_;
    std::int64_t m_;
    std::int64_t degree_;
    std::vector<Element> basis_;
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index_;
    std::map<std::int64_t, std::vector<std::size_t>> by_grading_;
};

/// Default truncation degree 4g + 4.
std::int64_t default_truncation(std::int64_t genus);

/// Top Maslov grading of the non-torsion part of H_*(A_m), computed by
/// Gaussian elimination over F_2. A class counts as non-torsion when
/// U^(2g+2) times it is still nonzero in homology. Requires D >= 4g + 4 and
/// m >= -g - 1; throws TruncationError otherwise.
std::int64_t homology_dtilde(const StaircaseComplex& c, std::int64_t m, std::int64_t truncation);

inline std::int64_t homology_dtilde(const StaircaseComplex& c, std::int64_t m) {
    return homology_dtilde(c, m, default_truncation(c.genus()));
}

}  // namespace lspace
