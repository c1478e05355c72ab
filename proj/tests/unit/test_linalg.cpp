#include <catch_amalgamated.hpp>

#include <random>

#include "riesz/linalg.hpp"

using namespace riesz;

namespace {

Vec rnd(std::mt19937& g, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Vec v(n);
    for (auto& x : v)
        x = d(g);
    return v;
}

double maxdiff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double maxabs(const Vec& a) {
    double m = 0.0;
    for (double x : a)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace

TEST_CASE("toeplitz_matvec", "[linalg]") {
    const SymToeplitzMatrix I{{1.0, 0.0, 0.0, 0.0}};
    const Vec v = {3.0, -1.0, 2.0, 5.0};
    CHECK(toeplitz_matvec(I, v) == v);
    const SymToeplitzMatrix L{{2.0, -1.0, 0.0}};
    CHECK(toeplitz_matvec(L, {1.0, 1.0, 1.0}) == Vec{1.0, 0.0, 1.0});
    CHECK_THROWS_AS(toeplitz_matvec(L, {1.0, 1.0}), dimension_error);

    std::mt19937 g(3);
    for (std::size_t n = 1; n <= 64; ++n) {
        const SymToeplitzMatrix t{rnd(g, n)};
        const Vec x = rnd(g, n);
        CHECK(maxdiff(toeplitz_matvec(t, x), t.dense() * x) <= 1e-14);
    }
}

TEST_CASE("dense LU solve", "[linalg]") {
    const Vec rhs = {1.0, 2.0, 3.0};
    CHECK(DenseFactorization(DenseMatrix::identity(3)).solve(rhs) == rhs);

    DenseMatrix A(2);
    A(0, 0) = 2;
    A(0, 1) = 1;
    A(1, 0) = 1;
    A(1, 1) = 2;
    const Vec x = lu_solve(DenseFactorization(A), {3.0, 3.0});
    CHECK(std::abs(x[0] - 1.0) < 1e-15);
    CHECK(std::abs(x[1] - 1.0) < 1e-15);

    std::mt19937 g(5);
    DenseMatrix B(20);
    for (std::size_t i = 0; i < 20; ++i) {
        const Vec r = rnd(g, 20);
        for (std::size_t j = 0; j < 20; ++j)
            B(i, j) = r[j] + (i == j ? 4.0 : 0.0);
    }
    const Vec xs = rnd(g, 20);
    const Vec b = B * xs;
    const Vec got = DenseFactorization(B).solve(b);
    CHECK(maxdiff(got, xs) <= 1e-11);
    const Vec res = B * got;
    CHECK(maxdiff(res, b) <= 1e-12 * B.norm1() * maxabs(got));

    DenseMatrix S(2);
    S(0, 0) = 1;
    S(0, 1) = 2;
    S(1, 0) = 2;
    S(1, 1) = 4;
    CHECK_THROWS_AS(DenseFactorization(S), singular_matrix);
}

TEST_CASE("banded solve", "[linalg]") {
    const double a = 1.5;
    BandedMatrix D(9, 1);
    for (std::size_t i = 0; i < 9; ++i) {
        D.set(i, i, 1.0 - a / 12.0);
        if (i + 1 < 9) {
            D.set(i, i + 1, a / 24.0);
            D.set(i + 1, i, a / 24.0);
        }
    }
    const Vec ones(9, 1.0);
    CHECK(maxdiff(banded_solve(D, D * ones), ones) <= 1e-13);

    BandedMatrix diag(4, 0);
    for (std::size_t i = 0; i < 4; ++i)
        diag.set(i, i, 2.0 + static_cast<double>(i));
    CHECK(banded_solve(diag, {2.0, 3.0, 4.0, 5.0}) == Vec{1.0, 1.0, 1.0, 1.0});

    std::mt19937 g(9);
    BandedMatrix P(12, 2);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = (i < 2 ? 0 : i - 2); j <= std::min<std::size_t>(11, i + 2); ++j)
            P.set(i, j, i == j ? 6.0 : rnd(g, 1)[0]);
    const Vec r = rnd(g, 12);
    CHECK(maxdiff(banded_solve(P, r), DenseFactorization(P.dense()).solve(r)) <= 1e-12);

    // zero leading pivot: band elimination breaks down, dense fallback handles it
    BandedMatrix Z(3, 1);
    Z.set(0, 1, 1.0);
    Z.set(1, 0, 1.0);
    Z.set(1, 1, 1.0);
    Z.set(1, 2, 1.0);
    Z.set(2, 1, 1.0);
    Z.set(2, 2, 3.0);
    const Vec want = {1.0, 2.0, 3.0};
    CHECK(maxdiff(banded_solve(Z, Z * want), want) <= 1e-13);
    CHECK_THROWS_AS(Z.set(0, 2, 1.0), dimension_error);
}

TEST_CASE("cholesky positive-definiteness certificate", "[linalg]") {
    CHECK(cholesky_pd_check(DenseMatrix::identity(5)));
    DenseMatrix M(2);
    M(0, 0) = 1;
    M(1, 1) = -1;
    CHECK_FALSE(cholesky_pd_check(M));
    DenseMatrix N(2);
    N(0, 0) = 1;
    N(0, 1) = 0.5;
    N(1, 0) = 0.4;
    N(1, 1) = 1;
    CHECK_THROWS_AS(cholesky_pd_check(N), asymmetry_error);
}

TEST_CASE("gershgorin interval", "[linalg]") {
    const auto e = gershgorin_interval(DenseMatrix::identity(3));
    CHECK(e.lower == 1.0);
    CHECK(e.upper == 1.0);
    const SymToeplitzMatrix L{{2.0, -1.0, 0.0}};
    const auto f = gershgorin_interval(L.dense());
    CHECK(f.lower == 0.0);
    CHECK(f.upper == 4.0);
    const auto t = gershgorin_interval(L);
    CHECK(t.lower == 0.0);
    CHECK(t.upper == 4.0);
}
