#include "lspace/staircase.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lspace {

namespace {

bool is_odd(std::int64_t x) { return x % 2 != 0; }

// Dense F_2 vector of fixed width.
class BitVector {
public:
    explicit BitVector(std::size_t width) : words_((width + 63) / 64, 0) {}

    void flip(std::size_t bit) { words_[bit / 64] ^= std::uint64_t{1} << (bit % 64); }
    bool test(std::size_t bit) const { return (words_[bit / 64] >> (bit % 64)) & 1U; }

    BitVector& operator^=(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    /// Highest set bit, or -1 when zero.
    std::ptrdiff_t highest() const {
        for (std::size_t w = words_.size(); w-- > 0;) {
            if (words_[w]) return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words_[w]));
        }
        return -1;
    }

private:
    std::vector<std::uint64_t> words_;
};

// Row echelon form keyed by highest set bit.
class Echelon {
public:
    /// Reduces v against the stored rows; keeps it and returns true if it is independent.
    bool insert(BitVector v) {
        for (auto p = v.highest(); p >= 0; p = v.highest()) {
            auto it = rows_.find(p);
            if (it == rows_.end()) {
                rows_.emplace(p, std::move(v));
                return true;
            }
            v ^= it->second;
        }
        return false;
    }

private:
    std::map<std::ptrdiff_t, BitVector> rows_;
};

// Local coordinates for one Maslov grading of a TruncatedModule.
struct GradedBlock {
    const std::vector<std::size_t>* elements = nullptr;
    std::map<std::size_t, std::size_t> position;

    GradedBlock(const TruncatedModule& module, std::int64_t maslov) : elements(&module.in_grading(maslov)) {
        for (std::size_t p = 0; p < elements->size(); ++p) position.emplace((*elements)[p], p);
    }
    std::size_t size() const { return elements->size(); }
};

// Basis of ker(d : C_M -> C_{M-1}), as subsets of the grading-M basis.
std::vector<std::vector<std::size_t>> kernel_basis(const TruncatedModule& module, std::int64_t maslov) {
    GradedBlock source(module, maslov);
    GradedBlock target(module, maslov - 1);
    const std::size_t width = target.size() + source.size();

    // Rows are [boundary | combination]; the boundary part sits in the high
    // bits so pivots are taken there first.
    std::map<std::ptrdiff_t, BitVector> pivots;
    std::vector<std::vector<std::size_t>> kernel;
    for (std::size_t p = 0; p < source.size(); ++p) {
        BitVector row(width);
        row.flip(p);
        for (auto b : module.boundary((*source.elements)[p])) row.flip(source.size() + target.position.at(b));
        for (;;) {
            auto h = row.highest();
            if (h < static_cast<std::ptrdiff_t>(source.size())) break;
            auto it = pivots.find(h);
            if (it == pivots.end()) {
                pivots.emplace(h, row);
                break;
            }
            row ^= it->second;
        }
        if (row.highest() >= 0 && row.highest() < static_cast<std::ptrdiff_t>(source.size())) {
            std::vector<std::size_t> z;
            for (std::size_t q = 0; q < source.size(); ++q) {
                if (row.test(q)) z.push_back((*source.elements)[q]);
            }
            kernel.push_back(std::move(z));
        }
    }
    return kernel;
}

}  // namespace

StaircaseComplex::StaircaseComplex(std::int64_t k, std::vector<Bigrading> gradings,
                                   std::vector<std::vector<DifferentialTerm>> differential)
    : k_(k), gradings_(std::move(gradings)), differential_(std::move(differential)) {
    if (k_ < 0 || gradings_.size() != static_cast<std::size_t>(2 * k_ + 1) ||
        differential_.size() != gradings_.size()) {
        throw std::invalid_argument("staircase must have 2k+1 generators");
    }
}

std::size_t StaircaseComplex::slot(std::int64_t i) const {
    if (i < -k_ || i > k_) throw std::out_of_range("generator index out of range");
    return static_cast<std::size_t>(i + k_);
}

StaircaseComplex build_staircase(const ExponentSequence& n) {
    const auto k = n.k();
    const auto size = static_cast<std::size_t>(2 * k + 1);
    std::vector<Bigrading> gradings(size);
    std::vector<std::vector<DifferentialTerm>> differential(size);
    auto at = [k](std::int64_t i) { return static_cast<std::size_t>(i + k); };

    for (std::int64_t i = -k; i <= k; ++i) {
        gradings[at(i)].alexander = n(i);
        if (is_odd(i - k)) {
            differential[at(i)] = {{i - 1, 0}, {i + 1, n(i + 1) - n(i)}};
        }
    }

    // Walk down from M(x_k) = 0. Each odd-type x_i fixes M(x_i) from M(x_{i+1})
    // and then M(x_{i-1}).
    gradings[at(k)].maslov = 0;
    for (std::int64_t i = k - 1; i > -k; i -= 2) {
        const auto step = n(i + 1) - n(i);
        gradings[at(i)].maslov = gradings[at(i + 1)].maslov + 1 - 2 * step;
        gradings[at(i - 1)].maslov = gradings[at(i)].maslov - 1;
    }

    StaircaseComplex c(k, std::move(gradings), std::move(differential));
    if (!respects_gradings(c)) throw std::logic_error("inconsistent Maslov grading propagation");
    return c;
}

bool squares_to_zero(const StaircaseComplex& c) {
    for (std::int64_t i = -c.k(); i <= c.k(); ++i) {
        std::map<std::pair<std::int64_t, std::int64_t>, int> total;
        for (const auto& t : c.boundary(i)) {
            for (const auto& s : c.boundary(t.target)) total[{s.target, t.u_power + s.u_power}] ^= 1;
        }
        for (const auto& [key, parity] : total) {
            if (parity) return false;
        }
    }
    return true;
}

bool respects_gradings(const StaircaseComplex& c) {
    for (std::int64_t i = -c.k(); i <= c.k(); ++i) {
        const auto& src = c.grading(i);
        for (const auto& t : c.boundary(i)) {
            if (t.u_power < 0) return false;
            const auto& dst = c.grading(t.target);
            if (dst.maslov - 2 * t.u_power != src.maslov - 1) return false;
            if (dst.alexander - t.u_power > src.alexander) return false;
        }
    }
    return true;
}

LaurentPolynomial euler_characteristic(const StaircaseComplex& c) {
    LaurentPolynomial chi;
    for (std::int64_t i = -c.k(); i <= c.k(); ++i) {
        const auto& g = c.grading(i);
        chi += LaurentPolynomial::monomial(is_odd(g.maslov) ? -1 : 1, g.alexander);
    }
    return chi;
}

std::map<std::int64_t, std::size_t> hat_homology_ranks(const StaircaseComplex& c) {
    // With U = 0 only the u_power == 0 terms survive. Rank of d out of each
    // grading, then H_M = dim C_M - rank d_M - rank d_{M+1}.
    std::map<std::int64_t, std::vector<std::int64_t>> by_grading;
    for (std::int64_t i = -c.k(); i <= c.k(); ++i) by_grading[c.grading(i).maslov].push_back(i);

    std::map<std::int64_t, std::size_t> rank_out;
    for (const auto& [maslov, gens] : by_grading) {
        std::map<std::int64_t, std::size_t> pos;
        if (auto it = by_grading.find(maslov - 1); it != by_grading.end()) {
            for (std::size_t p = 0; p < it->second.size(); ++p) pos.emplace(it->second[p], p);
        }
        Echelon echelon;
        std::size_t rank = 0;
        for (auto i : gens) {
            BitVector v(pos.size());
            for (const auto& t : c.boundary(i)) {
                if (t.u_power == 0) v.flip(pos.at(t.target));
            }
            if (echelon.insert(std::move(v))) ++rank;
        }
        rank_out[maslov] = rank;
    }

    std::map<std::int64_t, std::size_t> ranks;
    for (const auto& [maslov, gens] : by_grading) {
        std::size_t incoming = 0;
        if (auto it = rank_out.find(maslov + 1); it != rank_out.end()) incoming = it->second;
        const auto h = gens.size() - rank_out[maslov] - incoming;
        if (h) ranks[maslov] = h;
    }
    return ranks;
}

TruncatedModule::TruncatedModule(const StaircaseComplex& c, std::int64_t m, std::int64_t degree)
    : complex_(&c), m_(m), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
    for (std::int64_t i = -c.k(); i <= c.k(); ++i) {
        const auto& g = c.grading(i);
        for (std::int64_t j = std::max<std::int64_t>(0, g.alexander - m); j <= degree; ++j) {
            const std::size_t idx = basis_.size();
            basis_.push_back({i, j, g.maslov - 2 * j});
            index_.emplace(std::make_pair(i, j), idx);
            by_grading_[g.maslov - 2 * j].push_back(idx);
        }
    }
}

const std::vector<std::size_t>& TruncatedModule::in_grading(std::int64_t maslov) const {
    static const std::vector<std::size_t> empty;
    auto it = by_grading_.find(maslov);
    return it == by_grading_.end() ? empty : it->second;
}

std::ptrdiff_t TruncatedModule::index_of(std::int64_t generator, std::int64_t u_power) const {
    auto it = index_.find({generator, u_power});
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::vector<std::size_t> TruncatedModule::boundary(std::size_t element) const {
    const auto& e = basis_.at(element);
    std::vector<std::size_t> out;
    for (const auto& t : complex_->boundary(e.generator)) {
        const auto j = e.u_power + t.u_power;
        if (j > degree_) continue;
        auto idx = index_of(t.target, j);
        // A_m is a subcomplex, so every in-window term is present.
        if (idx < 0) throw std::logic_error("boundary left the subcomplex A_m");
        out.push_back(static_cast<std::size_t>(idx));
    }
    return out;
}

std::int64_t TruncatedModule::max_maslov() const {
    if (by_grading_.empty()) throw std::logic_error("empty module");
    return by_grading_.rbegin()->first;
}

std::int64_t TruncatedModule::min_maslov() const {
    if (by_grading_.empty()) throw std::logic_error("empty module");
    return by_grading_.begin()->first;
}

std::int64_t default_truncation(std::int64_t genus) { return 4 * genus + 4; }

std::int64_t homology_dtilde(const StaircaseComplex& c, std::int64_t m, std::int64_t truncation) {
    const auto g = c.genus();
    if (m < -g - 1) {
        throw TruncationError("filtration level " + std::to_string(m) + " is below -g-1 = " +
                              std::to_string(-g - 1));
    }
    if (truncation < default_truncation(g)) {
        throw TruncationError("truncation degree " + std::to_string(truncation) +
                              " is too small; need at least 4g+4 = " + std::to_string(default_truncation(g)));
    }
    const std::int64_t survival = 2 * g + 2;
    TruncatedModule module(c, m, truncation);

    for (auto maslov = module.max_maslov(); maslov >= module.min_maslov(); --maslov) {
        const auto kernel = kernel_basis(module, maslov);
        if (kernel.empty()) continue;

        const auto low = maslov - 2 * survival;
        GradedBlock target(module, low);
        Echelon images;
        for (auto e : module.in_grading(low + 1)) {
            BitVector v(target.size());
            for (auto b : module.boundary(e)) v.flip(target.position.at(b));
            images.insert(std::move(v));
        }
        for (const auto& z : kernel) {
            BitVector v(target.size());
            for (auto e : z) {
                const auto& el = module.basis()[e];
                auto idx = module.index_of(el.generator, el.u_power + survival);
                if (idx < 0) {
                    throw TruncationError("tower detection at Maslov grading " + std::to_string(maslov) +
                                          " needs U-powers beyond the truncation degree");
                }
                v.flip(target.position.at(static_cast<std::size_t>(idx)));
            }
            if (images.insert(std::move(v))) return maslov;
        }
    }
    throw TruncationError("no non-torsion class found within the truncation window");
}

}  // namespace lspace
