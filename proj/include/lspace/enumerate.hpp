#pragma once

// Exhaustive candidate generation per genus and classification against the
// filters and the knot zoo.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lspace/admissibility.hpp"
#include "lspace/knot_zoo.hpp"

namespace lspace {

/// Compositions of g in lexicographic order, optionally restricted to those
/// whose first part is 1. Genus 0 yields the single empty vector.
class GapVectorStream {
public:
    GapVectorStream(std::int64_t genus, bool hw_only);

    std::optional<GapVector> next();

private:
    std::int64_t genus_;
    bool hw_only_;
    bool done_ = false;
    std::vector<std::int64_t> current_;
};

/// 2^(g-1) compositions, or 2^(g-2) with first part 1 (g >= 2).
std::uint64_t gap_vector_count(std::int64_t genus, bool hw_only);

struct ClassificationRow {
    GapVector gaps;
    LaurentPolynomial polynomial;
    FilterReport report;
    std::vector<std::string> matches;

    friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

enum class RowStatus { realized, excluded, unmatched };
std::string to_string(RowStatus s);
RowStatus row_status(const ClassificationRow& row);

/// Worker threads for classification; LSPACE_WORKERS overrides the hardware default.
std::size_t worker_count();

/// One row per generated vector, in stream order.
std::vector<ClassificationRow> classify_vectors(std::int64_t genus, bool hw_only, const std::vector<ZooEntry>& zoo_rows,
                                                std::size_t workers = worker_count());

inline std::vector<ClassificationRow> classify_genus(std::int64_t genus, const std::vector<ZooEntry>& zoo_rows) {
    return classify_vectors(genus, true, zoo_rows);
}

/// classify_genus for g = 1..max_genus against zoo(max_genus), concatenated.
std::vector<ClassificationRow> realization_table(std::int64_t max_genus, std::int64_t max_cable_depth = 2);

}  // namespace lspace
