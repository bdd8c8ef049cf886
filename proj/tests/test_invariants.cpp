#include "doctest.h"
#include "lspace/invariants.hpp"
#include "oracles.hpp"

using namespace lspace;

namespace {

TorsionSequence torsion_of(std::vector<std::int64_t> r) { return tilde_delta(polynomial_of(GapVector(std::move(r)))); }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("dtilde_knot examples") {
    const TorsionSequence t34({3, 0, -1, -3});
    CHECK(dtilde_knot(t34, -1) == -4);
    CHECK(dtilde_knot(t34, 3) == 0);
    CHECK(dtilde_knot(t34, 10) == 0);
    CHECK(dtilde_knot(t34, -4) == -8);
    const TorsionSequence unknot({0});
    for (std::int64_t m = 0; m <= 5; ++m) CHECK(dtilde_knot(unknot, m) == 0);
    CHECK(dtilde_knot(unknot, -3) == dtilde_unknot(-3));
    CHECK(dtilde_knot(torsion_of({1, 2, 3}), 0) == -6);
}

TEST_CASE("dtilde_unknot") {
    CHECK(dtilde_unknot(3) == 0);
    CHECK(dtilde_unknot(0) == 0);
    CHECK(dtilde_unknot(-2) == -4);
}

TEST_CASE("hbar examples") {
    // T(3,4), m = 0: (0 - (-2)) / 2
    CHECK(hbar(TorsionSequence({3, 0, -1, -3}), 0) == 1);
    CHECK(hbar(TorsionSequence({0}), 0) == 0);
    // r = (1,2,1): a = (4,2,1,-2,-4), first a_i <= 0 is i = 3
    CHECK(torsion_of({1, 2, 1}).entries() == std::vector<Exponent>{4, 2, 1, -2, -4});
    CHECK(hbar(torsion_of({1, 2, 1}), 0) == 3);
    CHECK_THROWS_AS(hbar(TorsionSequence({0}), 1), std::out_of_range);
    CHECK_THROWS_AS(hbar(TorsionSequence({3, 0, -1, -3}), -4), std::out_of_range);
}

TEST_CASE("jump_values examples") {
    CHECK(jump_values(GapVector({1, 2, 3})) == std::vector<Jump>{{5, -2}, {0, -6}, {-5, -12}});
    CHECK(jump_values(GapVector({1})) == std::vector<Jump>{{0, -2}});
    CHECK(jump_values(GapVector({1, 2, 1})) == std::vector<Jump>{{3, -2}, {0, -6}, {-3, -8}});
    CHECK(jump_values(GapVector{}).empty());
}

TEST_CASE("rasmussen_sweep examples") {
    const auto bad = torsion_of({1, 2, 1});
    // brute oracle on the series expansion
    CHECK(oracle::first_sweep_violation(polynomial_of(GapVector({1, 2, 1}))) == 0);
    auto out = rasmussen_sweep(bad);
    CHECK_FALSE(out.pass);
    CHECK(out.witness_m == 0);
    CHECK(hbar_bound(4, 0) == 2);
    CHECK(rasmussen_sweep(torsion_of({1, 2, 3})).pass);
    CHECK(rasmussen_sweep(TorsionSequence({0})).pass);
}

TEST_CASE("ceil_half") {
    CHECK(ceil_half(0) == 0);
    CHECK(ceil_half(3) == 2);
    CHECK(ceil_half(4) == 2);
    CHECK(ceil_half(-3) == -1);
    CHECK(ceil_half(-4) == -2);
}

TEST_CASE("bound in the unknot-shifted form: ceil((g-|m|)/2) - (m-|m|)/2 = ceil((g-m)/2)") {
    for (std::int64_t g = 0; g <= 30; ++g) {
        for (std::int64_t m = -g; m <= g; ++m) {
            CHECK(hbar_bound(g, m) - dtilde_unknot(m) / 2 == ceil_half(g - m));
        }
    }
}

TEST_CASE("both forms of the bound give the same verdict, genus <= 10") {
    // hbar_m <= ceil((g-|m|)/2)  <=>  -dtilde(K,m)/2 <= ceil((g-m)/2)
    for (std::int64_t g = 0; g <= 10; ++g) {
        for (const auto& parts : oracle::compositions(g)) {
            const auto a = tilde_delta(polynomial_of(GapVector(parts)));
            for (std::int64_t m = -g; m <= g; ++m) {
                CHECK((hbar(a, m) <= hbar_bound(g, m)) == (-dtilde_knot(a, m) / 2 <= ceil_half(g - m)));
            }
        }
    }
}

TEST_CASE("sweep agrees with the series oracle and with hw + gap inequality, genus <= 12") {
    for (std::int64_t g = 0; g <= 12; ++g) {
        for (const auto& parts : oracle::compositions(g)) {
            const GapVector r(parts);
            const auto p = polynomial_of(r);
            const auto a = tilde_delta(p);
            const auto sweep = rasmussen_sweep(a);
            const auto brute = oracle::first_sweep_violation(p);
            CHECK(sweep.pass == (brute > g));
            if (!sweep.pass) CHECK(sweep.witness_m == brute);
            CHECK(sweep.pass == (hw_check(r) && new_check_gaps(r).pass));
        }
    }
}

TEST_CASE("profile structure for genus <= 10") {
    for (std::int64_t g = 0; g <= 10; ++g) {
        for (const auto& parts : oracle::compositions(g)) {
            const GapVector r(parts);
            const auto a = tilde_delta(polynomial_of(r));
            const auto profile = invariant_profile(r);
            CHECK(profile.genus == g);
            CHECK(profile.dtilde_at(g) == 0);
            for (std::int64_t m = -g - 1; m <= g + 1; ++m) {
                const auto d = profile.dtilde_at(m);
                CHECK(d % 2 == 0);
                CHECK(d == oracle::dtilde_by_series(polynomial_of(r), m));
                if (m > -g - 1) {
                    CHECK(profile.dtilde_at(m - 1) <= d);
                    CHECK(d <= profile.dtilde_at(m - 1) + 2);
                }
            }
            for (const auto& jump : profile.jumps) CHECK(dtilde_knot(a, jump.m) == jump.dtilde);
            std::int64_t partial = 0;
            for (std::size_t j = 0; j < profile.jumps.size(); ++j) {
                partial += r.values()[j];
                CHECK(profile.jumps[j].dtilde == -2 * partial);
            }
            if (rasmussen_sweep(a).pass) {
                CHECK(profile.hbar_at(g) == 0);
                for (auto h : profile.hbar) CHECK(h >= 0);
            }
        }
    }
}

}  // TEST_SUITE
