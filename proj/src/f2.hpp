#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dwind::f2 {

/// Fixed-length vector over F_2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool none() const;
    /// Lowest set bit, if any.
    std::optional<std::size_t> lowest() const;
    /// Lowest set bit strictly below `limit`, if any.
    std::optional<std::size_t> lowest_below(std::size_t limit) const;
    BitVec& operator^=(const BitVec& other);

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental row echelon form: every stored row's pivot is its lowest set bit.
class Echelon {
public:
    explicit Echelon(std::size_t bits) : pivot_row_(bits, npos) {}

    /// Reduces `v` in place against the stored rows.
    void reduce(BitVec& v) const;
    /// Adds `v` if it is independent of the stored rows; returns whether it was.
    bool insert(BitVec v);
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivot_row_;
};

/// Kernel of the linear map sending basis vector j of the source to images[j].
/// Each returned vector lives in the source space (length images.size()).
std::vector<BitVec> kernel(const std::vector<BitVec>& images, std::size_t target_dim);

}  // namespace dwind::f2
