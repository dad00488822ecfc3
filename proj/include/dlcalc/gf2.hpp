#pragma once

// Dense linear algebra over F2 with 64-bit packed rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dlcalc::gf2 {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

class BitVector
{
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    static BitVector unit(std::size_t size, std::size_t i)
    {
        BitVector v(size);
        v.set(i);
        return v;
    }

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true)
    {
        Word mask = Word(1) << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    BitVector& operator^=(const BitVector& rhs);
    // XOR restricted to words at index >= first_word; used by elimination.
    void xor_from(const BitVector& rhs, std::size_t first_word);

    bool any() const;
    std::size_t popcount() const;
    // Index of the lowest set bit, or size() if zero.
    std::size_t leading() const;
    std::vector<std::size_t> support() const;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool operator==(const BitVector& rhs) const { return size_ == rhs.size_ && words_ == rhs.words_; }
    bool operator<(const BitVector& rhs) const;

    std::string str() const;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

class F2Matrix
{
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(std::size_t cols, std::vector<BitVector> rows);
    static F2Matrix from_dense(const std::vector<std::vector<int>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    void append_row(BitVector row);

    BitVector apply(const BitVector& v) const;  // M v, v has length cols()
    F2Matrix transpose() const;
    F2Matrix operator*(const F2Matrix& rhs) const;

    // In-place reduced row echelon form; returns pivot columns in row order.
    std::vector<std::size_t> reduce();

    bool operator==(const F2Matrix& rhs) const { return cols_ == rhs.cols_ && rows_ == rhs.rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// A subspace of F2^ambient_dim, stored as a basis in canonical reduced echelon form:
// rows sorted by pivot (lowest set bit), each pivot column zero in every other row.
class F2Subspace
{
public:
    F2Subspace() = default;
    explicit F2Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    static F2Subspace full(std::size_t ambient_dim);
    static F2Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduce v modulo the subspace; the result is zero iff v is a member.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return !reduce(v).any(); }
    // Returns true if v enlarged the subspace.
    bool insert(BitVector v);

    // Coordinates of a member v with respect to basis(); nullopt if v is not a member.
    std::optional<BitVector> coordinates(const BitVector& v) const;

    F2Subspace intersect(const F2Subspace& other) const;
    F2Subspace sum(const F2Subspace& other) const;

    bool operator==(const F2Subspace& rhs) const { return ambient_ == rhs.ambient_ && basis_ == rhs.basis_; }

private:
    std::size_t ambient_ = 0;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const F2Matrix& m);
// Right null space {v : m v = 0}.
F2Subspace kernel_basis(const F2Matrix& m);
// Column space, as a subspace of F2^rows.
F2Subspace image_basis(const F2Matrix& m);
// dim(ambient) - dim(sub); throws Error(NotASubspace) unless sub is contained in ambient.
std::size_t quotient_dim(const F2Subspace& sub, const F2Subspace& ambient);
// Some x with m x = b, or nullopt.
std::optional<BitVector> solve(const F2Matrix& m, const BitVector& b);

}  // namespace dlcalc::gf2
