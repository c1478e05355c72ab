#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "riesz/riesz_ops.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace riesz;

namespace {

GridFn bump(int M, int m) {
    return GridFn::sample(Grid1D(0.0, 1.0, M), [m](double x) { return std::pow(x * (1.0 - x), m); });
}

double maxdiff(const Vec& a, const Vec& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

} // namespace

TEST_CASE("Grid1D", "[riesz_ops]") {
    const Grid1D g(-1.0, 2.0, 30);
    CHECK_THAT(g.h(), WithinRel(0.1, 1e-15));
    CHECK(g.x(30) == 2.0);
    CHECK_THAT(g.h() * g.M(), WithinRel(3.0, 1e-15));
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 3), grid_error);
    CHECK_THROWS_AS(Grid1D(1.0, 1.0, 8), grid_error);
}

TEST_CASE("centred difference", "[riesz_ops]") {
    const RieszOrder o(1.5);
    const Grid1D g(0.0, 1.0, 4);
    const auto c = g_coeffs(o, 4);
    const GridFn zero{g, Vec(5, 0.0)};
    CHECK(centred_diff_apply(o, zero) == Vec(3, 0.0));
    const GridFn imp{g, {0.0, 0.0, 1.0, 0.0, 0.0}};
    const Vec w = centred_diff_apply(o, imp);
    CHECK(w == Vec{c.g[1], c.g[0], c.g[1]});
    const GridFn bad{g, {1.0, 0.0, 1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(centred_diff_apply(o, bad), boundary_error);

    std::mt19937 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const Grid1D g16(0.0, 1.0, 16);
    GridFn u{g16, Vec(17, 0.0)};
    for (int j = 1; j < 16; ++j)
        u.values[static_cast<std::size_t>(j)] = d(rng);
    CHECK(maxdiff(centred_diff_apply(o, u), toeplitz_matvec(build_A(o, 16), u.interior())) <= 1e-14);
}

TEST_CASE("A and D matrices", "[riesz_ops]") {
    const auto A2 = build_A(RieszOrder::relaxed(2.0), 4);
    CHECK(A2.first_row == Vec{2.0, -1.0, 0.0});
    const auto A = build_A(RieszOrder(1.5), 16);
    CHECK(A.size() == 15);
    CHECK(A(0, 14) == g_coeffs(RieszOrder(1.5), 14).g[14]);
    CHECK(cholesky_pd_check(A.dense()));

    const auto D = build_D(RieszOrder(1.2), 8);
    CHECK_THAT(D(3, 3), WithinRel(0.9, 1e-15));
    CHECK_THAT(D(3, 4), WithinRel(0.05, 1e-15));
    CHECK_THAT(D(3, 2), WithinRel(0.05, 1e-15));
    CHECK(D(3, 5) == 0.0);
    const Vec row = D * Vec(7, 1.0);
    for (std::size_t i = 1; i + 1 < row.size(); ++i)
        CHECK_THAT(row[i], WithinAbs(1.0, 1e-15));

    // D v against the pointwise stencil v + (a/24) delta^2 v with zero extension
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> dd(-1.0, 1.0);
    Vec v(7);
    for (auto& x : v)
        x = dd(rng);
    const Vec Dv = D * v;
    for (std::size_t j = 0; j < 7; ++j) {
        const double l = j > 0 ? v[j - 1] : 0.0;
        const double r = j + 1 < 7 ? v[j + 1] : 0.0;
        CHECK_THAT(Dv[j], WithinAbs(v[j] + 1.2 / 24.0 * (l - 2.0 * v[j] + r), 1e-15));
    }
}

TEST_CASE("even difference stencils", "[riesz_ops]") {
    CHECK(even_difference_stencil(1) == Vec{1.0, -2.0, 1.0});
    CHECK(even_difference_stencil(2) == Vec{1.0, -4.0, 6.0, -4.0, 1.0});
    CHECK(even_difference_stencil(4) == Vec{1.0, -8.0, 28.0, -56.0, 70.0, -56.0, 28.0, -8.0, 1.0});
}

// closed-form exact values were checked against term-by-term Riemann-Liouville
// derivatives of the expanded polynomial at 40 digits
TEST_CASE("exact Riesz derivative of x^m(1-x)^m", "[riesz_ops]") {
    CHECK_THAT(exact_riesz_symmetric_poly(2, RieszOrder(1.5), 0.5), WithinRel(-0.45135166683820502956, 1e-13));
    CHECK_THAT(exact_riesz_symmetric_poly(6, RieszOrder(1.5), 0.5), WithinRel(-0.0038901242563085975398, 1e-12));
    CHECK_THAT(exact_riesz_symmetric_poly(10, RieszOrder(1.3), 0.37), WithinRel(-3.5772112777252038671e-7, 1e-9));
    CHECK_THAT(exact_riesz_symmetric_poly(4, RieszOrder(1.9), 0.5), WithinRel(-0.10209328374658105932, 1e-13));
    CHECK_THAT(exact_riesz_symmetric_poly(1, RieszOrder(1.5), 0.3), WithinRel(-1.0039621326949568606, 1e-13));
    for (int m = 1; m <= 10; ++m)
        for (double x : {0.0625, 0.25, 0.40625})
            CHECK_THAT(exact_riesz_symmetric_poly(m, RieszOrder(1.7), x),
                       WithinRel(exact_riesz_symmetric_poly(m, RieszOrder(1.7), 1.0 - x), 1e-12));
    CHECK_THROWS_AS(exact_riesz_symmetric_poly(1, RieszOrder(1.5), 0.0), domain_error);
    CHECK_NOTHROW(exact_riesz_symmetric_poly(2, RieszOrder(1.5), 0.0));
    CHECK_THROWS_AS(exact_riesz_symmetric_poly(0, RieszOrder(1.5), 0.5), domain_error);
}

TEST_CASE("riesz_derivative basics", "[riesz_ops]") {
    const RieszOrder o(1.5);
    const GridFn zero{Grid1D(0.0, 1.0, 20), Vec(21, 0.0)};
    for (int so : {2, 4, 6, 8, 10})
        CHECK(riesz_derivative(zero, o, so).w == Vec(19, 0.0));
    CHECK_THROWS_AS(riesz_derivative(zero, o, 5), unsupported_order);
    const GridFn tiny{Grid1D(0.0, 1.0, 8), Vec(9, 0.0)};
    CHECK_THROWS_AS(riesz_derivative(tiny, o, 10), grid_error);

    const GridFn u = bump(40, 2);
    Vec r = centred_diff_apply(o, u);
    for (auto& x : r)
        x *= -std::pow(u.grid.h(), -1.5);
    CHECK(riesz_derivative(u, o, 2).w == r);
    const Vec viaD = banded_solve(build_D(o, 40), r);
    CHECK(maxdiff(riesz_derivative(u, o, 4).w, viaD) <= 1e-14);
}

TEST_CASE("classical limit of the fourth-order scheme", "[riesz_ops]") {
    const GridFn u = bump(24, 3);
    const double h = u.grid.h();
    const auto w = riesz_derivative(u, RieszOrder::relaxed(2.0), 4).w;
    const std::size_t n = w.size();
    // (I + delta^2/12) w = delta^2 u / h^2
    for (std::size_t i = 0; i < n; ++i) {
        const double wl = i > 0 ? w[i - 1] : 0.0;
        const double wr = i + 1 < n ? w[i + 1] : 0.0;
        const double lhs = (wl + 10.0 * w[i] + wr) / 12.0;
        const double rhs = (u.values[i] - 2.0 * u.values[i + 1] + u.values[i + 2]) / (h * h);
        CHECK_THAT(lhs, WithinAbs(rhs, 1e-12));
    }
    // near the limit, the result moves continuously
    const auto w2 = riesz_derivative(u, RieszOrder::relaxed(1.9999), 4).w;
    CHECK(maxdiff(w, w2) < 1e-2);
}

TEST_CASE("design orders on x^{2n}(1-x)^{2n}", "[riesz_ops]") {
    struct C {
        int so, M1, M2;
        double lo, hi;
    };
    for (const C c : {C{2, 40, 80, 1.9, 2.1}, C{4, 20, 40, 3.95, 4.05}, C{6, 20, 24, 5.85, 6.1},
                      C{8, 30, 34, 7.8, 8.1}, C{10, 30, 34, 8.8, 10.3}}) {
        const int m = std::max(4, c.so);
        const RieszOrder o(1.5);
        const auto err = [&](int M) {
            const GridFn u = bump(M, m);
            return std::abs(riesz_derivative(u, o, c.so).w[static_cast<std::size_t>(M / 2 - 1)] -
                            exact_riesz_symmetric_poly(m, o, 0.5));
        };
        const double eco = std::log(err(c.M1) / err(c.M2)) / std::log(static_cast<double>(c.M2) / c.M1);
        INFO("scheme " << c.so << " eco " << eco);
        CHECK(eco >= c.lo);
        CHECK(eco <= c.hi);
    }
}
