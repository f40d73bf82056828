#pragma once
// Exact linear algebra over GF(2) with bit-packed rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophom/kernels.hpp"

namespace loophom::gf2 {

using kernels::Word;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// A dense bit vector of fixed length.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v)
    {
        const Word bit = Word{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) { words_[i / 64] ^= Word{1} << (i % 64); }
    bool is_zero() const { return kernels::is_zero(words_); }
    std::size_t count() const { return kernels::popcount(words_); }
    BitVector& operator^=(const BitVector& other);
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    // Indices of set bits, ascending.
    std::vector<std::size_t> support() const;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// rows x cols matrix over GF(2); immutable once built.
class Matrix {
public:
    class Builder;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    bool is_zero() const { return kernels::is_zero(data_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    friend class Builder;
    friend class Elimination;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

class Matrix::Builder {
public:
    Builder(std::size_t rows, std::size_t cols) : m_(rows, cols) {}
    Builder& set(std::size_t r, std::size_t c, bool v = true)
    {
        const Word bit = Word{1} << (c % 64);
        Word& w = m_.data_[r * m_.stride_ + c / 64];
        w = v ? (w | bit) : (w & ~bit);
        return *this;
    }
    Builder& flip(std::size_t r, std::size_t c)
    {
        m_.data_[r * m_.stride_ + c / 64] ^= Word{1} << (c % 64);
        return *this;
    }
    Builder& set_column(std::size_t c, const BitVector& v);
    std::size_t rows() const { return m_.rows_; }
    std::size_t cols() const { return m_.cols_; }
    Matrix build() && { return std::move(m_); }

private:
    Matrix m_;
};

class CompositionNotZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::size_t rank(const Matrix& m);

// Basis of { v : m v = 0 }; size is cols - rank.
std::vector<BitVector> kernel_basis(const Matrix& m);

// Returns some x with m x = b, or nothing when b is outside the column space.
std::optional<BitVector> solve(const Matrix& m, const BitVector& b);

Matrix multiply(const Matrix& a, const Matrix& b);
BitVector apply(const Matrix& m, const BitVector& v);

/// dim ker(d_out) - rank(d_in) for C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.
/// Throws CompositionNotZero when d_out * d_in != 0.
std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in);

}  // namespace loophom::gf2
