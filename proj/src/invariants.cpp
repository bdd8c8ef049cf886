#include "lspace/invariants.hpp"

#include <stdexcept>

namespace lspace {

std::int64_t dtilde_knot(const TorsionSequence& a, std::int64_t m) {
    // a is strictly decreasing, so the first index with a_i <= m is found by
    // a scan of the stored prefix or, past it, by the tail a_i = -i.
    const auto& entries = a.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] <= m) return -2 * static_cast<std::int64_t>(i);
    }
    return -2 * (-m);
}

std::int64_t hbar(const TorsionSequence& a, std::int64_t m) {
    const auto g = a.genus();
    if (m < -g || m > g) throw std::out_of_range("hbar is only defined here for |m| <= g");
    const auto diff = dtilde_unknot(m) - dtilde_knot(a, m);
    return diff / 2;
}

std::int64_t hbar_bound(std::int64_t genus, std::int64_t m) {
    const auto abs_m = m < 0 ? -m : m;
    if (abs_m > genus) throw std::out_of_range("bound is only defined for |m| <= g");
    return ceil_half(genus - abs_m);
}

std::vector<Jump> jump_values(const GapVector& r) {
    const auto k = r.size();
    const auto g = r.genus();
    std::vector<Jump> out;
    out.reserve(k);
    std::int64_t head = 0;
    std::int64_t tail = 0;  // r_{k-j+2} + ... + r_k
    for (std::size_t j = 1; j <= k; ++j) {
        head += r.r(j);
        if (j >= 2) tail += r.r(k - j + 2);
        out.push_back({g - (head + tail), -2 * head});
    }
    return out;
}

SweepOutcome rasmussen_sweep(const TorsionSequence& a) {
    const auto g = a.genus();
    for (std::int64_t m = -g; m <= g; ++m) {
        if (hbar(a, m) > hbar_bound(g, m)) return {false, m};
    }
    return {};
}

InvariantProfile invariant_profile(const GapVector& r) {
    const auto a = tilde_delta(polynomial_of(r));
    InvariantProfile profile;
    profile.genus = a.genus();
    for (std::int64_t m = -profile.genus - 1; m <= profile.genus + 1; ++m) {
        profile.dtilde.push_back(dtilde_knot(a, m));
    }
    for (std::int64_t m = -profile.genus; m <= profile.genus; ++m) profile.hbar.push_back(hbar(a, m));
    profile.jumps = jump_values(r);
    return profile;
}

}  // namespace lspace
