#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "riesz/coeffs.hpp"
#include "riesz/harness.hpp"
#include "riesz/linalg.hpp"
#include "riesz/riesz_ops.hpp"
#include "riesz/specfun.hpp"
#include "riesz/telegraph.hpp"

namespace riesz {

namespace {

std::string sci(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3e", v);
    return b;
}

const std::vector<double> kSampleAlphas = {1.1, 1.3, 1.5, 1.7, 1.9};

std::vector<double> alpha_grid(double step) {
    std::vector<double> a;
    for (int i = 1; 1.0 + i * step < 2.0 - 1e-12; ++i)
        a.push_back(1.0 + i * step);
    return a;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Vec v(n);
    for (double& x : v)
        x = d(rng);
    return v;
}

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double max_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct Suite {
    std::vector<PropertyResult> out;
    void add(std::string name, std::string tol, bool pass, std::string detail) {
        out.push_back({std::move(name), std::move(tol), pass, std::move(detail)});
    }
};

void specfun_props(Suite& s, std::mt19937& rng) {
    std::uniform_real_distribution<double> ux(0.1, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng);
        const double g1 = gamma(x + 1.0);
        worst = std::max(worst, std::abs(g1 - x * gamma(x)) / std::abs(g1));
    }
    s.add("specfun.recurrence", "rel 1e-12", worst <= 1e-12, "max rel " + sci(worst));

    std::uniform_real_distribution<double> un(-5.0, 0.0);
    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = un(rng);
        if (x == std::floor(x))
            x += 0.5;
        const double v = gamma(x) * gamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
        worst = std::max(worst, std::abs(v - 1.0));
    }
    s.add("specfun.reflection", "rel 1e-11", worst <= 1e-11, "max rel " + sci(worst));

    worst = 0.0;
    std::uniform_real_distribution<double> uc(0.1, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double x = uc(rng);
        worst = std::max(worst, std::abs(std::exp(ln_gamma(x)) / gamma(x) - 1.0));
    }
    s.add("specfun.exp_ln_gamma", "rel 1e-12", worst <= 1e-12, "max rel " + sci(worst));
}

void coeff_props(Suite& s, const PropertyOptions& opts) {
    // sign pattern and ordering
    {
        bool ok = true;
        for (double a : alpha_grid(0.05)) {
            const auto c = g_coeffs(RieszOrder(a), 200);
            ok = ok && c.g[0] > 0.0;
            for (std::size_t k = 1; k <= 200; ++k)
                ok = ok && c.g[k] < 0.0;
            for (std::size_t k = 2; k <= 200; ++k)
                ok = ok && c.g[k] > c.g[k - 1];
        }
        s.add("coeffs.sign_and_ordering", "exact", ok, "g_0>0, g_k<0, g_k>g_{k-1} (k>=2), K=200");
    }
    // single-coefficient bounds, k >= 3
    {
        bool ok = true;
        std::string where;
        for (double a : kSampleAlphas) {
            const auto c = g_coeffs(RieszOrder(a), 200);
            const auto b = coefficient_bounds(RieszOrder(a));
            for (std::size_t k = 3; k <= 200; ++k) {
                const double gk = std::abs(c.g[k]);
                const double kk = static_cast<double>(k);
                if (!(b.gk_lower(kk) < gk && gk < b.gk_upper(kk))) {
                    ok = false;
                    where = "alpha=" + std::to_string(a) + " k=" + std::to_string(k);
                }
            }
        }
        s.add("coeffs.bound_single_coefficient", "strict", ok, ok ? "k=3..200" : where);
    }
    // finite partial sums
    {
        bool ok = true;
        std::string where;
        for (double a : kSampleAlphas) {
            const auto c = g_coeffs(RieszOrder(a), 520);
            const auto b = coefficient_bounds(RieszOrder(a));
            for (int n : {3, 5, 10}) {
                double sum = 0.0;
                for (int m = n; m <= n + 500; ++m) {
                    sum += std::abs(c.g[static_cast<std::size_t>(m)]);
                    if (!(b.finite_sum_lower(m, n) < sum && sum < b.finite_sum_upper(m, n))) {
                        ok = false;
                        where = "alpha=" + std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
                    }
                }
            }
        }
        s.add("coeffs.bound_finite_sum", "strict", ok, ok ? "n in {3,5,10}, m=n..n+500" : where);
    }
    // infinite tails: truncated at 1e6 plus an analytic remainder interval
    {
        const std::size_t Kt = 1000000;
        bool ok = true;
        std::string detail;
        for (double a : kSampleAlphas) {
            const auto c = g_coeffs(RieszOrder(a), Kt);
            const auto b = coefficient_bounds(RieszOrder(a));
            for (int n : {3, 5, 10}) {
                double fin = 0.0;
                for (std::size_t k = Kt; k >= static_cast<std::size_t>(n); --k)
                    fin += std::abs(c.g[k]);
                const double lo = fin + b.tail_lower(Kt + 1.0);
                const double hi = fin + b.tail_upper(Kt + 1.0);
                if (!(b.tail_lower(n) < lo && hi < b.tail_upper(n))) {
                    ok = false;
                    detail = "alpha=" + std::to_string(a) + " n=" + std::to_string(n);
                }
            }
        }
        s.add("coeffs.bound_infinite_sum", "strict, tail beyond 1e6 bracketed analytically", ok,
              ok ? "n in {3,5,10}" : detail);
    }
    // g_0 bounds and the sum identity
    {
        bool ok_b = true;
        bool ok_id = true;
        double worst = 0.0;
        const std::size_t Kt = 1000000;
        for (double a : kSampleAlphas) {
            auto c = g_coeffs(RieszOrder(a), Kt);
            const auto b = coefficient_bounds(RieszOrder(a));
            ok_b = ok_b && b.g0_lower() <= c.g[0] && c.g[0] <= b.g0_upper();
            c.g[1] += opts.g1_perturbation;
            double fin = 0.0;
            for (std::size_t k = Kt; k >= 1; --k)
                fin += std::abs(c.g[k]);
            // g_0 - 2*sum_{1..Kt} |g_k| must equal twice the tail beyond Kt
            const double gap = c.g[0] - 2.0 * fin;
            const double lo = 2.0 * b.tail_lower(Kt + 1.0) - 1e-13;
            const double hi = 2.0 * b.tail_upper(Kt + 1.0) + 1e-13;
            if (!(lo <= gap && gap <= hi))
                ok_id = false;
            worst = std::max(worst, std::abs(gap));
        }
        s.add("coeffs.g0_two_sided_bound", "inclusive", ok_b, "2^{1+a}/((1+a)pi) <= g_0 <= 2^{1+a}/pi");
        s.add("coeffs.sum_identity", "tail interval beyond K=1e6 (+-1e-13)", ok_id,
              "max |g_0 - sum_{k!=0}|g_k|| = " + sci(worst));
    }
    // monotonicity in alpha
    {
        bool ok = true;
        const auto grid = alpha_grid(0.05);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const auto c1 = g_coeffs(RieszOrder(grid[i]), 50);
            const auto c2 = g_coeffs(RieszOrder(grid[i + 1]), 50);
            ok = ok && c1.g[0] < c2.g[0] && c1.g[1] > c2.g[1];
            for (std::size_t k = 2; k <= 50; ++k)
                ok = ok && c1.g[k] < c2.g[k];
        }
        s.add("coeffs.monotone_in_alpha", "strict", ok, "0.05 grid, k in {0} u {2..50}; g_1 reversed");
    }
    // truncated sum decreasing, one-sided tail bounded, closed form -g_K (2K - a)/a
    {
        bool ok = true;
        double last = 0.0;
        double worst_abs = 0.0;
        for (double a : kSampleAlphas) {
            const auto c = g_coeffs(RieszOrder(a), 100000);
            double prev = INFINITY;
            for (std::size_t K : {10, 100, 1000, 10000, 100000}) {
                const double sum = partial_sum(c, K);
                const double v = std::abs(sum);
                const double tail = 0.5 * v;
                const double bound = std::abs(c.g[K]) * (a + 2.0 * K) / (2.0 * a);
                const double closed = -c.g[K] * (2.0 * K - a) / a;
                worst_abs = std::max(worst_abs, std::abs(sum - closed));
                ok = ok && v < prev && tail <= bound;
                prev = v;
            }
            last = prev;
        }
        ok = ok && worst_abs <= 1e-14;
        s.add("coeffs.truncated_sum",
              "strict decrease, |sum|/2 <= |g_K|(a+2K)/(2a), abs 1e-14 to -g_K(2K-a)/a", ok,
              "|sum| at K=1e5, alpha=1.9: " + sci(last) + ", closed-form diff " + sci(worst_abs));
    }
    // series vs generating function
    {
        bool ok = true;
        double worst = 0.0;
        const double z = 0.1;
        for (double a : alpha_grid(0.1)) {
            const auto sc = a_coeffs(RieszOrder(a));
            double ser = 0.0;
            for (int p = 0; p < 4; ++p)
                ser += sc.a[static_cast<std::size_t>(p)] * std::pow(z, 2 * p);
            const double gen = std::pow(std::abs(2.0 * std::sin(z / 2.0) / z), a);
            worst = std::max(worst, std::abs(ser - gen));
        }
        ok = worst <= 5.0 * std::pow(z, 8);
        s.add("coeffs.series_vs_generating_function", "5 z^8 at z=0.1", ok, "max residual " + sci(worst));
    }
}

void linalg_props(Suite& s, std::mt19937& rng) {
    {
        double worst = 0.0;
        for (std::size_t n = 1; n <= 64; ++n) {
            const SymToeplitzMatrix t{random_vec(rng, n)};
            const Vec v = random_vec(rng, n);
            worst = std::max(worst, max_diff(toeplitz_matvec(t, v), t.dense() * v));
        }
        s.add("linalg.toeplitz_vs_dense", "max-norm 1e-14", worst <= 1e-14, "max diff " + sci(worst));
    }
    {
        bool ok = true;
        for (double a : {1.1, 1.5, 1.9}) {
            const DenseMatrix A = build_A(RieszOrder(a), 32).dense();
            if (!cholesky_pd_check(A)) {
                ok = false;
                continue;
            }
            for (int i = 0; i < 100; ++i) {
                const Vec v = random_vec(rng, A.size());
                const Vec Av = A * v;
                double num = 0.0;
                double den = 0.0;
                for (std::size_t j = 0; j < v.size(); ++j) {
                    num += v[j] * Av[j];
                    den += v[j] * v[j];
                }
                ok = ok && num / den > 0.0;
            }
        }
        s.add("linalg.rayleigh_positive", "> 0", ok, "100 random v per PD A_alpha");
    }
    {
        double worst = 0.0;
        for (double a : {1.1, 1.5, 1.9}) {
            const RieszOrder o(a);
            for (int M : {8, 20, 46, 128}) {
                std::vector<BandedMatrix> systems = {build_D(o, M)};
                for (int so : {6, 8, 10}) {
                    const auto bc = b_coeffs(o, so);
                    systems.push_back(compact_lhs(bc.b.back(), bc.n - 1, static_cast<std::size_t>(M - 1)));
                }
                for (const auto& B : systems) {
                    const Vec r = random_vec(rng, B.size());
                    const Vec x1 = banded_solve(B, r);
                    const Vec x2 = DenseFactorization(B.dense()).solve(r);
                    worst = std::max(worst, max_diff(x1, x2));
                }
            }
        }
        s.add("linalg.banded_vs_lu", "max-norm 1e-12", worst <= 1e-12, "max diff " + sci(worst));
    }
}

Vec classical_compact(const GridFn& u) {
    const int M = u.grid.M();
    const double h = u.grid.h();
    Vec r(static_cast<std::size_t>(M - 1));
    for (int j = 1; j < M; ++j)
        r[static_cast<std::size_t>(j - 1)] =
            (u.values[static_cast<std::size_t>(j - 1)] - 2.0 * u.values[static_cast<std::size_t>(j)] +
             u.values[static_cast<std::size_t>(j + 1)]) /
            (h * h);
    BandedMatrix B(r.size(), 1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        B.set(i, i, 10.0 / 12.0);
        if (i + 1 < r.size()) {
            B.set(i, i + 1, 1.0 / 12.0);
            B.set(i + 1, i, 1.0 / 12.0);
        }
    }
    return banded_solve(B, r);
}

void riesz_props(Suite& s, std::mt19937& rng) {
    {
        double worst = 0.0;
        for (int M : {8, 16, 40}) {
            const Grid1D g(0.0, 1.0, M);
            for (int m : {1, 2, 3}) {
                const GridFn u = GridFn::sample(g, [m](double x) { return std::pow(x * (1.0 - x), m); });
                const Vec w = riesz_derivative(u, RieszOrder::relaxed(2.0), 4).w;
                worst = std::max(worst, max_diff(w, classical_compact(u)) / std::max(1.0, max_abs(w)));
            }
        }
        s.add("riesz.classical_limit", "rel 1e-12", worst <= 1e-12, "alpha=2, scheme 4 vs classical compact, " + sci(worst));
    }
    {
        double worst = 0.0;
        double worst_path = 0.0;
        double worst_toep = 0.0;
        for (double a : {1.2, 1.5, 1.8}) {
            const RieszOrder o(a);
            for (int M : {8, 16, 33}) {
                const Grid1D g(0.0, 1.0, M);
                GridFn u{g, Vec(static_cast<std::size_t>(M) + 1, 0.0)};
                const Vec in = random_vec(rng, static_cast<std::size_t>(M - 1));
                std::copy(in.begin(), in.end(), u.values.begin() + 1);
                const Vec cd = centred_diff_apply(o, u);
                const Vec tv = toeplitz_matvec(build_A(o, M), in);
                worst_toep = std::max(worst_toep, max_diff(cd, tv) / std::max(1.0, max_abs(tv)));
                Vec r = cd;
                for (double& v : r)
                    v *= -std::pow(g.h(), -a);
                worst = std::max(worst, max_diff(riesz_derivative(u, o, 2).w, r));
                const Vec via_D = banded_solve(build_D(o, M), r);
                worst_path = std::max(worst_path, max_diff(riesz_derivative(u, o, 4).w, via_D) / std::max(1.0, max_abs(via_D)));
            }
        }
        s.add("riesz.scheme2_is_centred_difference", "exact", worst == 0.0, "max diff " + sci(worst));
        s.add("riesz.centred_vs_toeplitz", "rel 1e-14", worst_toep <= 1e-14, "max diff " + sci(worst_toep));
        s.add("riesz.scheme4_vs_D_solve", "rel 1e-14", worst_path <= 1e-14, "max diff " + sci(worst_path));
    }
    {
        bool ok = true;
        double worst = 0.0;
        for (double a : alpha_grid(0.1))
            for (int m = 1; m <= 10; ++m) {
                const RieszOrder o(a);
                for (double x : {0.125, 0.25, 0.375, 0.4375}) {
                    const double v1 = exact_riesz_symmetric_poly(m, o, x);
                    const double v2 = exact_riesz_symmetric_poly(m, o, 1.0 - x);
                    worst = std::max(worst, std::abs(v1 - v2) / std::max(1e-300, std::abs(v1)));
                }
                ok = ok && exact_riesz_symmetric_poly(m, o, 0.5) < 0.0;
            }
        s.add("riesz.exact_even_and_negative_at_half", "rel 1e-12", ok && worst <= 1e-12, "max asym " + sci(worst));
    }
    {
        // first refinement pair of each convergence grid
        struct Case {
            int so;
            int M1, M2;
            double lo, hi;
        };
        const Case cases[] = {{4, 20, 40, 3.95, 4.05}, {6, 20, 24, 5.85, 6.1}, {8, 30, 34, 7.8, 8.1}, {10, 30, 34, 8.8, 10.3}};
        bool ok = true;
        std::string detail;
        for (const auto& c : cases)
            for (double a : kSampleAlphas) {
                const double e1 = example1_point_error(c.so, a, c.M1, c.so);
                const double e2 = example1_point_error(c.so, a, c.M2, c.so);
                const double r = eco(e1, e2, 1.0 / c.M1, 1.0 / c.M2);
                if (!(c.lo <= r && r <= c.hi)) {
                    ok = false;
                    detail += "scheme " + std::to_string(c.so) + " alpha " + std::to_string(a) + " eco " + std::to_string(r) + "; ";
                }
            }
        s.add("riesz.order_verification", "ECO near the design order", ok, ok ? "schemes 4..10" : detail);
    }
}

void telegraph_props(Suite& s, std::mt19937& rng) {
    {
        bool ok = true;
        for (double a : alpha_grid(0.1))
            for (int M : {8, 16, 32, 64})
                ok = ok && cholesky_pd_check(build_A(RieszOrder(a), M).dense());
        s.add("matrix.A_positive_definite", "Cholesky pivots > 1e-12 max|a|", ok, "M in {8,16,32,64}, alpha on 0.1 grid");
    }
    {
        bool ok = true;
        for (double a : alpha_grid(0.1))
            for (int M : {8, 16, 32, 64, 128}) {
                const auto A = build_A(RieszOrder(a), M);
                const auto e = gershgorin_interval(A);
                ok = ok && e.lower > 0.0 && e.upper < A.first_row[0] + std::pow(2.0, 1.0 + a) / std::numbers::pi;
            }
        s.add("matrix.A_gershgorin", "(0, g_0 + 2^{1+a}/pi)", ok, "M in {8..128}");
    }
    {
        double worst = 0.0;
        bool ok4 = true;
        bool ok9 = true;
        std::uniform_real_distribution<double> ua(1.01, 1.99);
        for (int i = 0; i < 100; ++i) {
            const double a = ua(rng);
            const int M = 8 + static_cast<int>(i % 57);
            const double h = 1.0 / M;
            const auto A = build_A(RieszOrder(a), M);
            const auto D = build_D(RieszOrder(a), M);
            const Vec u = random_vec(rng, static_cast<std::size_t>(M - 1));
            const Vec v = random_vec(rng, static_cast<std::size_t>(M - 1));
            const double l = h_inner(toeplitz_matvec(A, u), v, h);
            const double r = h_inner(u, toeplitz_matvec(A, v), h);
            worst = std::max(worst, std::abs(l - r) / std::max(std::abs(l), 1e-300));
            const double vv = h_inner(v, v, h);
            const Vec Dv = D * v;
            const double dvv = h_inner(Dv, v, h);
            ok4 = ok4 && (1.0 - a / 6.0) * vv <= dvv && dvv <= vv;
            ok9 = ok9 && h_inner(Dv, Dv, h) <= vv;
        }
        s.add("matrix.A_self_adjoint", "rel 1e-12", worst <= 1e-12, "max rel " + sci(worst));
        s.add("matrix.D_energy_bounds", "(1-a/6)|v|^2 <= (Dv,v) <= |v|^2", ok4, "100 random v");
        s.add("matrix.D_contraction", "|Dv| <= |v|", ok9, "100 random v");
    }
    {
        std::uniform_real_distribution<double> ua(1.01, 1.99), unu(0.1, 5.0), uk(0.1, 5.0);
        std::uniform_int_distribution<int> uM(8, 64), uN(4, 256);
        int tested = 0;
        bool ok = true;
        while (tested < 50) {
            TelegraphProblem p;
            p.order = RieszOrder(ua(rng));
            p.nu = unu(rng);
            p.kappa_sq = uk(rng);
            const int M = uM(rng);
            const int N = uN(rng);
            if (!stability_check(p, M, N).satisfied)
                continue;
            ++tested;
            const double tau = p.T / N;
            const double h = 1.0 / M;
            const double k = tau * p.kappa_sq / (6.0 * std::pow(h, p.order.alpha())) /
                             (tau * p.nu * p.nu / 12.0 + 1.0 / tau);
            DenseMatrix G = build_D(p.order, M).dense();
            G.axpby(1.0, -k, build_A(p.order, M).dense());
            ok = ok && cholesky_pd_check(G);
        }
        s.add("matrix.G_positive_definite", "Cholesky", ok, "50 random parameter sets satisfying the stability condition");
    }
    {
        const NoBlowup nb = stability_no_blowup(1.5, 1.0, 1.0, 32, 1024, 7u);
        s.add("telegraph.no_blowup", "ratio <= 100", nb.condition_satisfied && nb.ratio <= 100.0,
              "max/early = " + sci(nb.ratio));
    }
    {
        TelegraphProblem p;
        p.order = RieszOrder(1.5);
        p.phi = [](double) { return 0.0; };
        p.phi_t = [](double) { return 0.0; };
        p.f = [](double, double) { return 0.0; };
        const Solution sol = solve(p, 16, 16);
        bool ok = true;
        for (const auto& row : sol.values)
            for (double v : row)
                ok = ok && v == 0.0;
        s.add("telegraph.zero_data_zero_solution", "exact", ok, "M=N=16");
    }
    {
        bool ok1 = true;
        bool ok2 = true;
        for (int i = 1; i < 100000; ++i) {
            const double x = i / 100000.0;
            ok1 = ok1 && 1.0 - x < std::exp(-x);
            if (x <= 0.7968)
                ok2 = ok2 && 1.0 - x > std::exp(-2.0 * x);
        }
        s.add("scalar.exponential_inequalities", "strict", ok1 && ok2, "1e5 samples");
    }
}

} // namespace

NoBlowup stability_no_blowup(double alpha, double nu, double kappa_sq, int M, int N, unsigned seed) {
    TelegraphProblem p;
    p.order = RieszOrder(alpha);
    p.nu = nu;
    p.kappa_sq = kappa_sq;
    NoBlowup r;
    r.condition_satisfied = stability_check(p, M, N).satisfied;
    const StepMatrices m = StepMatrices::build(p, M, N);
    std::mt19937 rng(seed);
    Vec prev = random_vec(rng, static_cast<std::size_t>(M - 1));
    Vec curr = random_vec(rng, static_cast<std::size_t>(M - 1));
    const Vec zero(static_cast<std::size_t>(M) + 1, 0.0);
    const double h = 1.0 / M;
    for (int s = 1; s < N; ++s) {
        Vec next = step(m, prev, curr, zero, zero, zero);
        Vec d(next.size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = next[j] - curr[j];
        const double n = std::sqrt(h_inner(d, d, h));
        if (s <= 5)
            r.early_max = std::max(r.early_max, n);
        r.overall_max = std::max(r.overall_max, n);
        prev = std::move(curr);
        curr = std::move(next);
    }
    r.ratio = r.overall_max / r.early_max;
    return r;
}

std::vector<PropertyResult> property_suite(const PropertyOptions& opts) {
    Suite s;
    std::mt19937 rng(opts.seed);
    specfun_props(s, rng);
    coeff_props(s, opts);
    linalg_props(s, rng);
    riesz_props(s, rng);
    telegraph_props(s, rng);
    return s.out;
}

} // namespace riesz
