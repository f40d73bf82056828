#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "loophom/graded_dims.hpp"
#include "support.hpp"

using namespace loophom;
using gf2::Matrix;

namespace {

// Product of row-addition matrices, together with its inverse.
std::pair<Matrix, Matrix> random_invertible(support::Rng& rng, std::size_t n)
{
    Matrix p = Matrix::identity(n), p_inv = Matrix::identity(n);
    if (n < 2)
        return {p, p_inv};
    for (std::size_t step = 0; step < 3 * n; ++step) {
        const std::size_t i = support::below(rng, n);
        std::size_t j = support::below(rng, n - 1);
        j += j >= i;
        Matrix::Builder e(n, n);
        for (std::size_t k = 0; k < n; ++k)
            e.set(k, k);
        e.set(i, j);
        const Matrix em = std::move(e).build();
        p = gf2::multiply(p, em);
        p_inv = gf2::multiply(em, p_inv);
    }
    return {p, p_inv};
}

// Block form: C2 -(rank r1)-> C1 -(rank r2)-> C0 with the two images disjoint.
Matrix block(std::size_t rows, std::size_t cols, std::size_t row0, std::size_t col0, std::size_t r)
{
    Matrix::Builder b(rows, cols);
    for (std::size_t k = 0; k < r; ++k)
        b.set(row0 + k, col0 + k);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("rank examples")
{
    CHECK(gf2::rank(Matrix::identity(3)) == 3);
    CHECK(gf2::rank(Matrix(2, 2)) == 0);
    CHECK(gf2::rank(Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(gf2::rank(Matrix(0, 5)) == 0);
}

TEST_CASE("kernel examples")
{
    const auto k = gf2::kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
    CHECK(gf2::kernel_basis(Matrix::identity(4)).empty());
    const auto z = gf2::kernel_basis(Matrix(2, 2));
    REQUIRE(z.size() == 2);
    CHECK(z[0] != z[1]);
}

TEST_CASE("homology_dim examples")
{
    CHECK(gf2::homology_dim(Matrix(1, 4), Matrix(4, 2)) == 4);
    // exact: C1 = F2 --id--> F2 --0--> 0
    CHECK(gf2::homology_dim(Matrix(0, 1), Matrix::identity(1)) == 0);
    CHECK_THROWS_AS(gf2::homology_dim(Matrix::identity(2), Matrix::identity(2)), gf2::CompositionNotZero);
    CHECK_THROWS_AS(gf2::homology_dim(Matrix(2, 3), Matrix(2, 2)), gf2::DimensionMismatch);
}

TEST_CASE("property: rank plus nullity is the column count")
{
    support::Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = support::random_matrix(rng, support::below(rng, 40) + 1, support::below(rng, 130) + 1,
                                              trial % 2 ? 0.1 : 0.5);
        const auto kernel = gf2::kernel_basis(m);
        CHECK(gf2::rank(m) + kernel.size() == m.cols());
        CHECK(gf2::rank(m) == support::naive_rank(support::to_rows(m)));
        Matrix::Builder kb(m.cols(), kernel.size());
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            CHECK(gf2::apply(m, kernel[i]).is_zero());
            kb.set_column(i, kernel[i]);
        }
        CHECK(gf2::rank(std::move(kb).build()) == kernel.size());
    }
}

TEST_CASE("property: rank is invariant under row permutation and row addition")
{
    support::Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto rows = support::to_rows(support::random_matrix(rng, 2 + support::below(rng, 20), 1 + support::below(rng, 70)));
        const auto r = gf2::rank(Matrix::from_rows(rows));
        std::shuffle(rows.begin(), rows.end(), rng);
        CHECK(gf2::rank(Matrix::from_rows(rows)) == r);
        const std::size_t i = support::below(rng, rows.size());
        std::size_t j = support::below(rng, rows.size() - 1);
        j += j >= i;
        for (std::size_t c = 0; c < rows[i].size(); ++c)
            rows[i][c] ^= rows[j][c];
        CHECK(gf2::rank(Matrix::from_rows(rows)) == r);
    }
}

TEST_CASE("property: homology of random conjugated three-term complexes")
{
    support::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + support::below(rng, 30);
        const std::size_t r1 = support::below(rng, n + 1);
        const std::size_t r2 = support::below(rng, n - r1 + 1);
        const std::size_t a = r1 + support::below(rng, 5), b = r2 + support::below(rng, 5);
        const auto [p, p_inv] = random_invertible(rng, n);
        const auto [q, q_inv] = random_invertible(rng, a);
        const auto [s, s_inv] = random_invertible(rng, b);
        (void)q_inv;
        (void)s_inv;
        const Matrix d_in = gf2::multiply(gf2::multiply(p, block(n, a, 0, 0, r1)), q);
        const Matrix d_out = gf2::multiply(gf2::multiply(s, block(b, n, 0, r1, r2)), p_inv);
        CHECK(gf2::rank(d_in) == r1);
        CHECK(gf2::rank(d_out) == r2);
        CHECK(gf2::homology_dim(d_out, d_in) == n - r1 - r2);
    }
}

TEST_CASE("property: solve returns a preimage exactly when one exists")
{
    support::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = support::random_matrix(rng, 1 + support::below(rng, 30), 1 + support::below(rng, 30), 0.3);
        gf2::BitVector x(m.cols());
        for (std::size_t i = 0; i < x.size(); ++i)
            x.set(i, support::coin(rng));
        const auto b = gf2::apply(m, x);
        const auto y = gf2::solve(m, b);
        REQUIRE(y.has_value());
        CHECK(gf2::apply(m, *y) == b);

        gf2::BitVector c(m.rows());
        for (std::size_t i = 0; i < c.size(); ++i)
            c.set(i, support::coin(rng));
        Matrix::Builder aug(m.rows(), m.cols() + 1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t k = 0; k < m.cols(); ++k)
                aug.set(r, k, m.get(r, k));
            aug.set(r, m.cols(), c.get(r));
        }
        const bool solvable = gf2::rank(std::move(aug).build()) == gf2::rank(m);
        CHECK(gf2::solve(m, c).has_value() == solvable);
    }
}

TEST_CASE("bit vectors")
{
    gf2::BitVector v(130);
    v.set(0, true);
    v.set(129, true);
    v.flip(64);
    CHECK(v.count() == 3);
    CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
    gf2::BitVector w(130);
    w.set(64, true);
    v ^= w;
    CHECK(v.count() == 2);
    CHECK_THROWS_AS(v ^= gf2::BitVector(3), gf2::DimensionMismatch);
}

TEST_CASE("graded dims")
{
    const auto p = GradedDims::polynomial(2, 8);
    const auto e = GradedDims::exterior(3, 8);
    CHECK((p * e).to_string() == "(1,0,1,1,1,1,1,1,1)");
    CHECK(GradedDims::truncated_polynomial(2, 3, 6).to_string() == "(1,0,1,0,1,0,0)");
    CHECK(GradedDims::unit(3).to_string() == "(1,0,0,0)");
    CHECK(p.first_difference(GradedDims::unit(8)) == 2);
    // only the common range is compared
    CHECK(GradedDims::unit(1).agrees_with(p.truncated(1)));
    CHECK((p * GradedDims::unit(4)).cap() == 4);
}
