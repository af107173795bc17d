#include <doctest.h>

#include "causalcoh/generators.hpp"
#include "causalcoh/matrix.hpp"

using namespace causalcoh;

namespace {

// Plain rational Gaussian elimination, kept independent of the
// fraction-free path under test.
std::size_t naive_rank(MatrixQ m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank of small worked examples") {
    CHECK(rank(MatrixQ::identity(2)) == 2);
    CHECK(rank(MatrixQ::zero(3, 5)) == 0);
    CHECK(rank(MatrixQ{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rank of matrices with fractional entries") {
    MatrixQ m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    m(0, 0) = Rational(1, 3);
    m(1, 2) = Rational(-7, 2);
    CHECK(rank(m) == naive_rank(m));
}

TEST_CASE("kernel basis") {
    SUBCASE("identity has trivial kernel") { CHECK(kernel_basis(MatrixQ::identity(3)).cols() == 0); }
    SUBCASE("zero 2x3 has a 3-dimensional kernel") {
        const auto k = kernel_basis(MatrixQ::zero(2, 3));
        CHECK(k.cols() == 3);
        CHECK(rank(k) == 3);
    }
    SUBCASE("[1 1 0] is spanned by (1,-1,0) and (0,0,1)") {
        const MatrixQ m{{1, 1, 0}};
        const auto k = kernel_basis(m);
        REQUIRE(k.cols() == 2);
        CHECK((m * k).is_zero());
        // Same span as the hand solution.
        const MatrixQ hand{{1, 0}, {-1, 0}, {0, 1}};
        CHECK(rank(k.hstack(hand)) == 2);
    }
}

TEST_CASE("solve and inverse") {
    const MatrixQ a{{2, 1}, {1, 1}};
    const auto x = solve(a, MatrixQ{{3}, {2}});
    REQUIRE(x);
    CHECK(*x == MatrixQ{{1}, {1}});
    CHECK(!solve(MatrixQ{{1, 1}, {1, 1}}, MatrixQ{{1}, {2}}));
    CHECK(inverse(a) * a == MatrixQ::identity(2));
    CHECK_THROWS_AS(inverse(MatrixQ{{1, 2}, {2, 4}}), ShapeError);
    CHECK_THROWS_AS(MatrixQ::identity(2) * MatrixQ::identity(3), ShapeError);
}

TEST_CASE("property: fraction-free rank matches rational elimination; rank-nullity") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(0, 7));
        const auto cols = static_cast<std::size_t>(rng.uniform(0, 7));
        // Low-rank products exercise skipped pivot columns.
        const auto inner = static_cast<std::size_t>(rng.uniform(0, 4));
        MatrixQ m = hom::random_matrix(rows, inner, rng) * hom::random_matrix(inner, cols, rng);
        if (rows && cols && rng.coin()) m(0, 0) += Rational(1, 1 + rng.uniform(1, 5));
        const auto r = rank(m);
        CHECK(r == naive_rank(m));
        const auto k = kernel_basis(m);
        CHECK(k.cols() == cols - r);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("deterministic reduction") {
    Rng a(11), b(11);
    const auto m1 = hom::random_matrix(5, 6, a);
    const auto m2 = hom::random_matrix(5, 6, b);
    CHECK(row_reduce(m1).reduced == row_reduce(m2).reduced);
    CHECK(kernel_basis(m1) == kernel_basis(m2));
}
