#include "lspace/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

namespace lspace {

GapVectorStream::GapVectorStream(std::int64_t genus, bool hw_only) : genus_(genus), hw_only_(hw_only) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    current_.assign(static_cast<std::size_t>(genus), 1);
}

std::optional<GapVector> GapVectorStream::next() {
    if (done_) return std::nullopt;
    GapVector out(current_);

    // Lexicographic successor: drop the last part L, bump the new last part,
    // then append L - 1 ones.
    if (current_.size() < 2) {
        done_ = true;
    } else {
        const auto last = current_.back();
        current_.pop_back();
        ++current_.back();
        current_.insert(current_.end(), static_cast<std::size_t>(last - 1), 1);
        if (hw_only_ && current_.front() != 1) done_ = true;
    }
    return out;
}

std::uint64_t gap_vector_count(std::int64_t genus, bool hw_only) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (genus == 0) return 1;
    if (hw_only) return genus == 1 ? 1 : std::uint64_t{1} << (genus - 2);
    return std::uint64_t{1} << (genus - 1);
}

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::realized: return "realized";
        case RowStatus::excluded: return "excluded";
        case RowStatus::unmatched: return "unmatched";
    }
    return "unknown";
}

RowStatus row_status(const ClassificationRow& row) {
    if (!row.report.all_pass()) return RowStatus::excluded;
    return row.matches.empty() ? RowStatus::unmatched : RowStatus::realized;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("LSPACE_WORKERS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<std::size_t>(n);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<ClassificationRow> classify_vectors(std::int64_t genus, bool hw_only, const std::vector<ZooEntry>& zoo_rows,
                                                std::size_t workers) {
    std::map<LaurentPolynomial, std::vector<std::string>> known;
    for (const auto& entry : zoo_rows) known[entry.delta].push_back(entry.knot.name());

    auto classify_one = [&known](GapVector r) {
        ClassificationRow row;
        row.polynomial = polynomial_of(r);
        row.report = classify(r);
        if (auto it = known.find(row.polynomial); it != known.end()) row.matches = it->second;
        row.gaps = std::move(r);
        return row;
    };

    constexpr std::size_t batch_size = 4096;
    workers = std::max<std::size_t>(1, workers);
    std::vector<ClassificationRow> rows;
    GapVectorStream stream(genus, hw_only);
    std::vector<GapVector> batch;
    for (bool more = true; more;) {
        batch.clear();
        while (batch.size() < batch_size) {
            auto r = stream.next();
            if (!r) {
                more = false;
                break;
            }
            batch.push_back(std::move(*r));
        }
        const std::size_t offset = rows.size();
        rows.resize(offset + batch.size());
        const std::size_t used = std::min(workers, std::max<std::size_t>(1, batch.size() / 256));
        if (used <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) rows[offset + i] = classify_one(batch[i]);
            continue;
        }
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < used; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < batch.size(); i += used) rows[offset + i] = classify_one(batch[i]);
            });
        }
    }
    return rows;
}

std::vector<ClassificationRow> realization_table(std::int64_t max_genus, std::int64_t max_cable_depth) {
    const auto known = zoo(max_genus, max_cable_depth);
    std::vector<ClassificationRow> table;
    for (std::int64_t g = 1; g <= max_genus; ++g) {
        auto rows = classify_genus(g, known);
        table.insert(table.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    return table;
}

}  // namespace lspace
