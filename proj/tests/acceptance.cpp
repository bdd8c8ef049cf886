// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lspace/admissibility.hpp"
#include "lspace/enumerate.hpp"
#include "lspace/invariants.hpp"
#include "lspace/knot_zoo.hpp"
#include "lspace/laurent.hpp"
#include "lspace/staircase.hpp"
#include "oracles.hpp"

using namespace lspace;

namespace {

struct Failure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
}

std::vector<std::string> gap_list(const std::vector<ClassificationRow>& rows,
                                  const std::function<bool(const ClassificationRow&)>& keep) {
    std::vector<std::string> out;
    for (const auto& row : rows) {
        if (keep(row)) out.push_back("{" + to_string(row.gaps) + "}");
    }
    return out;
}

std::string joined(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
    return out;
}

// 1. Genus <= 4 realization table.
std::string genus_four_table() {
    const auto rows = realization_table(4);
    const std::vector<std::string> expected{"{1}",       "{1,1}",   "{1,1,1}", "{1,2}",
                                            "{1,1,1,1}", "{1,1,2}", "{1,2,1}", "{1,3}"};
    const auto listed = gap_list(rows, [](const auto&) { return true; });
    require(listed == expected, "rows were " + joined(listed));
    const auto excluded = gap_list(rows, [](const auto& r) { return !r.report.new_pass; });
    require(excluded == std::vector<std::string>{"{1,2,1}"}, "excluded rows were " + joined(excluded));
    for (const auto& row : rows) {
        if (row.report.new_pass) require(!row.matches.empty(), "row {" + to_string(row.gaps) + "} has no zoo match");
        if (row.gaps == GapVector({1, 2})) {
            require(std::set<std::string>(row.matches.begin(), row.matches.end()).size() == 2,
                    "{1,2} should match two distinct knots");
        }
    }
    return "8 rows, {1,2,1} excluded, {1,2} matched by two knots";
}

// 2. Genus 5.
std::string genus_five() {
    const auto rows = classify_genus(5, zoo(5));
    const auto excluded = gap_list(rows, [](const auto& r) { return !r.report.new_pass; });
    require(excluded == std::vector<std::string>{"{1,2,1,1}", "{1,3,1}"}, "excluded rows were " + joined(excluded));
    const auto unmatched = gap_list(rows, [](const auto& r) { return r.report.new_pass && r.matches.empty(); });
    require(unmatched == std::vector<std::string>{"{1,1,2,1}", "{1,2,2}", "{1,4}"},
            "unmatched rows were " + joined(unmatched));
    return "excluded " + joined(excluded) + "; unmatched " + joined(unmatched);
}

// 3. Worked counterexample r = (1,2,1).
std::string counterexample() {
    const auto a = tilde_delta(polynomial_of(GapVector({1, 2, 1})));
    require(a.entries() == std::vector<Exponent>{4, 2, 1, -2, -4}, "a-sequence mismatch");
    const auto torsion = new_check_torsion(a);
    require(!torsion.pass && torsion.witness == 2, "torsion check should fail at i=2");
    require(a.at(2) == 1 && a.genus() - 2 * 2 == 0, "a_2 should be 1 against bound 0");
    require(hbar(a, 0) == 3 && hbar_bound(4, 0) == 2, "hbar_0 should be 3 against bound 2");
    const auto sweep = rasmussen_sweep(a);
    require(!sweep.pass && sweep.witness_m == 0, "sweep should fail at m=0");
    return "a=(4,2,1,-2,-4), a_2=1>0, hbar_0=3>2";
}

// 4. Three formulations of the new filter agree.
std::string filter_equivalence() {
    std::size_t hw_vectors = 0;
    std::size_t all_vectors = 0;
    for (std::int64_t g = 0; g <= 12; ++g) {
        GapVectorStream stream(g, false);
        while (auto r = stream.next()) {
            ++all_vectors;
            const auto a = tilde_delta(polynomial_of(*r));
            const bool by_gaps = new_check_gaps(*r).pass;
            const bool by_torsion = new_check_torsion(a).pass;
            const bool by_sweep = rasmussen_sweep(a).pass;
            if (hw_check(*r)) {
                ++hw_vectors;
                require(by_gaps == by_torsion && by_torsion == by_sweep, "disagreement at {" + to_string(*r) + "}");
            } else {
                require(!by_gaps && !by_torsion && !by_sweep, "non-hw vector {" + to_string(*r) + "} passed");
            }
        }
    }
    // compositions of g <= 12 with r_1 = 1, plus the unknot
    require(hw_vectors == 2049, "expected 2049 vectors with r_1 = 1, got " + std::to_string(hw_vectors));
    return std::to_string(hw_vectors) + " vectors with r_1=1 agree (" + std::to_string(all_vectors) +
           " checked in total)";
}

// 5. Homology oracle equals the closed form.
std::string oracle_equivalence() {
    std::size_t queries = 0;
    for (std::int64_t g = 0; g <= 6; ++g) {
        GapVectorStream stream(g, false);
        while (auto r = stream.next()) {
            const auto n = exponents_from_gaps(*r);
            const auto c = build_staircase(n);
            const auto a = tilde_delta(n.polynomial());
            for (std::int64_t m = -g - 1; m <= g + 1; ++m, ++queries) {
                const auto h = homology_dtilde(c, m);
                const auto f = dtilde_knot(a, m);
                require(h == f, "{" + to_string(*r) + "} m=" + std::to_string(m) + ": homology " + std::to_string(h) +
                                    " vs formula " + std::to_string(f));
            }
        }
    }
    return std::to_string(queries) + " (r, m) queries agree";
}

// 6. Torus knots.
std::string torus_soundness() {
    std::size_t count = 0;
    for (std::int64_t p = 2; p * (p + 1) <= 60; ++p) {
        for (std::int64_t q = p + 1; p * q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto delta = torus_delta(p, q);
            require(classify(delta).all_pass() && rasmussen_sweep(tilde_delta(delta)).pass,
                    "T(" + std::to_string(p) + "," + std::to_string(q) + ") fails a filter");
            ++count;
        }
    }
    const auto t34 = torus_delta(3, 4);
    require(t34 == parse_poly("1 -(T^2+T^-2) + (T^3+T^-3)"), "T(3,4) polynomial");
    require(expand_tilde(tilde_delta(t34), -4) == parse_poly("T^3 + 1 + T^-1 + T^-3 + T^-4"), "T(3,4) tilde series");
    const auto t45 = torus_delta(4, 5);
    require(t45 == parse_poly("-1 + (T^2+T^-2) - (T^5+T^-5) + (T^6+T^-6)"), "T(4,5) polynomial");
    const auto r45 = gaps_from_exponents(os_parse(t45));
    require(r45 == GapVector({1, 2, 3}), "T(4,5) gaps");
    const std::vector<Jump> expected{{5, -2}, {0, -6}, {-5, -12}};
    require(jump_values(r45) == expected, "T(4,5) jumps");
    const auto a = tilde_delta(t45);
    const auto c = build_staircase(os_parse(t45));
    for (const auto& j : expected) {
        require(dtilde_knot(a, j.m) == j.dtilde && homology_dtilde(c, j.m) == j.dtilde, "T(4,5) jump dtilde");
    }
    return std::to_string(count) + " torus knots pass; T(3,4), T(4,5) data reproduced";
}

// 7. Structural properties.
std::string structural() {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto r = oracle::random_gaps(rng, 10);
        const auto n = exponents_from_gaps(r);
        const auto p = n.polynomial();
        const auto c = build_staircase(n);
        const auto where = " at {" + to_string(r) + "}";
        require(squares_to_zero(c), "d^2 != 0" + where);
        require(respects_gradings(c), "grading rule" + where);
        require(euler_characteristic(c) == p, "Euler characteristic" + where);
        require(gaps_from_exponents(n) == r, "gaps round trip" + where);
        require(os_parse(p) == n, "exponent round trip" + where);
        require(parse_poly(format_poly(p)) == p, "text round trip" + where);
    }
    return "1000 random vectors";
}

// 8. Closed-form counts.
std::string counts() {
    for (std::int64_t g = 2; g <= 15; ++g) {
        GapVectorStream stream(g, true);
        std::uint64_t count = 0;
        while (stream.next()) ++count;
        require(count == (std::uint64_t{1} << (g - 2)), "genus " + std::to_string(g) + " count " + std::to_string(count));
    }
    return "2^(g-2) for g = 2..15";
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double budget_seconds;  // 0: no time limit
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "genus <= 4 realization table", 1.0, genus_four_table},
        {"AC2", "genus 5 exclusions and unmatched survivors", 1.0, genus_five},
        {"AC3", "worked counterexample r=(1,2,1)", 0.0, counterexample},
        {"AC4", "filter equivalence, genus <= 12", 30.0, filter_equivalence},
        {"AC5", "homology oracle equivalence, genus <= 6", 300.0, oracle_equivalence},
        {"AC6", "torus knot soundness, pq <= 60", 0.0, torus_soundness},
        {"AC7", "structural properties on random staircases", 0.0, structural},
        {"AC8", "closed-form gap vector counts", 0.0, counts},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            detail += " (over time budget)";
        }
        failures += !ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << seconds << " s";
        if (c.budget_seconds > 0) line << " / " << c.budget_seconds << " s";
        line << ")  " << detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : std::string("acceptance: OK"))
              << std::endl;
    return failures ? 1 : 0;
}
