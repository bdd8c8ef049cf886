#pragma once

// Closed-form shifted d-invariants of L-space knot complexes and the
// Rasmussen-type bound h_m <= ceil((g - |m|) / 2).

#include <cstdint>
#include <optional>
#include <vector>

#include "lspace/admissibility.hpp"
#include "lspace/laurent.hpp"

namespace lspace {

/// -2 * min { i >= 0 : a_i <= m }, with the tail a_i = -i.
std::int64_t dtilde_knot(const TorsionSequence& a, std::int64_t m);

/// m - |m|; the unknot's complex is a single F[U] tower at (A, M) = (0, 0).
constexpr std::int64_t dtilde_unknot(std::int64_t m) { return m - (m < 0 ? -m : m); }

/// (dtilde_unknot(m) - dtilde_knot(a, m)) / 2. Throws std::out_of_range for |m| > g.
std::int64_t hbar(const TorsionSequence& a, std::int64_t m);

/// ceil((g - |m|) / 2) for |m| <= g.
std::int64_t hbar_bound(std::int64_t genus, std::int64_t m);

/// ceil(x / 2) for any integer x.
constexpr std::int64_t ceil_half(std::int64_t x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

struct Jump {
    std::int64_t m;
    std::int64_t dtilde;
    friend bool operator==(const Jump&, const Jump&) = default;
};

/// m_j = g - (r_1 + ... + r_j + r_{k-j+2} + ... + r_k), dtilde_j = -2 (r_1 + ... + r_j).
std::vector<Jump> jump_values(const GapVector& r);

struct SweepOutcome {
    bool pass = true;
    std::optional<std::int64_t> witness_m;
};

/// Checks hbar_m <= ceil((g - |m|) / 2) for every |m| <= g; reports the least violating m.
SweepOutcome rasmussen_sweep(const TorsionSequence& a);

struct InvariantProfile {
    std::int64_t genus = 0;
    /// dtilde[m + genus + 1] for m in [-g-1, g+1].
    std::vector<std::int64_t> dtilde;
    /// hbar[m + genus] for m in [-g, g].
    std::vector<std::int64_t> hbar;
    std::vector<Jump> jumps;

    std::int64_t dtilde_at(std::int64_t m) const {
        return dtilde.at(static_cast<std::size_t>(m + genus + 1));
    }
    std::int64_t hbar_at(std::int64_t m) const { return hbar.at(static_cast<std::size_t>(m + genus)); }

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const GapVector& r);

}  // namespace lspace
