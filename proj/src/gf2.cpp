#include "loophom/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace loophom::gf2 {

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw DimensionMismatch("bit vector sizes differ");
    kernels::xor_into(words_, other.words_);
    return *this;
}

std::vector<std::size_t> BitVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

Matrix Matrix::identity(std::size_t n)
{
    Builder b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        b.set(i, i);
    return std::move(b).build();
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Builder b(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] & 1)
                b.set(i, j);
    }
    return std::move(b).build();
}

Matrix::Builder& Matrix::Builder::set_column(std::size_t c, const BitVector& v)
{
    if (v.size() != m_.rows_)
        throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < m_.rows_; ++r)
        set(r, c, v.get(r));
    return *this;
}

// Reduced row echelon form on a private copy.
class Elimination {
public:
    explicit Elimination(const Matrix& m) : work_(m) { reduce(); }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    const Matrix& reduced() const { return work_; }

private:
    std::span<Word> row(std::size_t r) { return {work_.data_.data() + r * work_.stride_, work_.stride_}; }

    void reduce()
    {
        std::size_t next = 0;
        for (std::size_t c = 0; c < work_.cols_ && next < work_.rows_; ++c) {
            std::size_t p = next;
            while (p < work_.rows_ && !work_.get(p, c))
                ++p;
            if (p == work_.rows_)
                continue;
            if (p != next) {
                auto a = row(p), b = row(next);
                for (std::size_t w = 0; w < work_.stride_; ++w)
                    std::swap(a[w], b[w]);
            }
            const auto pivot_row = row(next);
            for (std::size_t r = 0; r < work_.rows_; ++r)
                if (r != next && work_.get(r, c))
                    kernels::xor_into(row(r), pivot_row);
            pivots_.push_back(c);
            ++next;
        }
    }

    Matrix work_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return Elimination(m).rank();
}

std::vector<BitVector> kernel_basis(const Matrix& m)
{
    const Elimination e(m);
    const auto& pivots = e.pivot_columns();
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (e.reduced().get(i, free))
                v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const Matrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side length differs from row count");
    Matrix::Builder aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c);
        if (b.get(r))
            aug.set(r, m.cols());
    }
    const Matrix augmented = std::move(aug).build();
    const Elimination e(augmented);
    BitVector x(m.cols());
    const auto& pivots = e.pivot_columns();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols())
            return std::nullopt;
        if (e.reduced().get(i, m.cols()))
            x.set(pivots[i], true);
    }
    return x;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    const std::size_t stride = words_for(b.cols());
    std::vector<Word> acc(stride);
    Matrix::Builder builder(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j))
                kernels::xor_into(acc, b.row(j));
        for (std::size_t w = 0; w < stride; ++w) {
            Word bits = acc[w];
            while (bits) {
                builder.set(i, w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }
    return std::move(builder).build();
}

BitVector apply(const Matrix& m, const BitVector& v)
{
    if (v.size() != m.cols())
        throw DimensionMismatch("vector length differs from column count");
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        std::size_t parity = 0;
        for (std::size_t w = 0; w < row.size(); ++w)
            parity += static_cast<std::size_t>(std::popcount(row[w] & v.words()[w]));
        if (parity & 1U)
            out.set(r, true);
    }
    return out;
}

std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in)
{
    if (d_out.cols() != d_in.rows())
        throw DimensionMismatch("differentials do not compose");
    if (d_out.rows() > 0 && d_in.cols() > 0 && !multiply(d_out, d_in).is_zero())
        throw CompositionNotZero("d_out * d_in is nonzero");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

}  // namespace loophom::gf2
