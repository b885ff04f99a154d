#include "f2.hpp"

#include <bit>

namespace dwind::f2 {

bool BitVec::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::optional<std::size_t> BitVec::lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
}

std::optional<std::size_t> BitVec::lowest_below(std::size_t limit) const {
    auto low = lowest();
    if (low && *low < limit) return low;
    return std::nullopt;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

void Echelon::reduce(BitVec& v) const {
    auto p = v.lowest();
    while (p && pivot_row_[*p] != npos) {
        v ^= rows_[pivot_row_[*p]];
        p = v.lowest();
    }
}

bool Echelon::insert(BitVec v) {
    reduce(v);
    auto p = v.lowest();
    if (!p) return false;
    pivot_row_[*p] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

std::vector<BitVec> kernel(const std::vector<BitVec>& images, std::size_t target_dim) {
    // Eliminate on the graph {(d e_j, e_j)}; rows whose image part vanishes span the kernel.
    const std::size_t source_dim = images.size();
    const std::size_t width = target_dim + source_dim;
    Echelon graph(width);
    for (std::size_t j = 0; j < source_dim; ++j) {
        BitVec row(width);
        for (std::size_t i = 0; i < target_dim; ++i)
            if (images[j].test(i)) row.set(i);
        row.set(target_dim + j);
        graph.insert(std::move(row));
    }
    std::vector<BitVec> out;
    for (const auto& row : graph.rows()) {
        if (row.lowest_below(target_dim)) continue;
        BitVec k(source_dim);
        for (std::size_t j = 0; j < source_dim; ++j)
            if (row.test(target_dim + j)) k.set(j);
        out.push_back(std::move(k));
    }
    return out;
}

}  // namespace dwind::f2
