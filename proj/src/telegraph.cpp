#include "riesz/telegraph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "riesz/errors.hpp"

namespace riesz {

TimeGrid::TimeGrid(double T, int N) : T_(T), N_(N) {
    if (!(T > 0.0))
        throw grid_error("TimeGrid requires T > 0");
    if (N < 2)
        throw grid_error("TimeGrid requires N >= 2, got " + std::to_string(N));
    tau_ = T / N;
}

void TelegraphProblem::validate() const {
    if (!(nu > 0.0))
        throw domain_error("telegraph problem requires nu > 0");
    if (!(L > l))
        throw grid_error("telegraph problem requires L > l");
    if (!phi || !phi_t || !f)
        throw domain_error("telegraph problem requires phi, phi_t and f");
    const double scale = std::max({1.0, std::abs(phi(0.5 * (l + L)))});
    if (std::abs(phi(l)) > 1e-12 * scale || std::abs(phi(L)) > 1e-12 * scale)
        throw boundary_error("phi must vanish at both ends of the domain");
}

StabilityReport stability_check(const TelegraphProblem& p, int M, int N) {
    const Grid1D g(p.l, p.L, M);
    const TimeGrid tg(p.T, N);
    const double tau = tg.tau();
    const double ha = std::pow(g.h(), p.order.alpha());
    const double g0 = g_coeffs(p.order, 0).g[0];
    StabilityReport r;
    r.lhs = (tau / ha) / (tau * p.nu * p.nu / 12.0 + 1.0 / tau);
    r.rhs = (6.0 - p.order.alpha()) / (2.0 * p.kappa_sq * g0);
    r.satisfied = r.lhs <= r.rhs;
    r.margin = r.rhs - r.lhs;
    r.proof_lhs = tau * (13.0 / 24.0 + p.nu * tau / 4.0);
    r.proof_timestep_ok = r.proof_lhs <= std::sqrt(3.0) / 9.0;
    return r;
}

namespace {

DenseMatrix combine(double x, const DenseMatrix& D, double y, const DenseMatrix& A) {
    DenseMatrix r = D;
    r.axpby(x, y, A);
    return r;
}

} // namespace

StepMatrices StepMatrices::build(const TelegraphProblem& p, int M, int N) {
    const Grid1D g(p.l, p.L, M);
    const TimeGrid tg(p.T, N);
    StepMatrices m;
    m.alpha = p.order.alpha();
    m.nu = p.nu;
    m.tau = tg.tau();
    const double tau = m.tau;
    m.a = p.nu * p.nu / 12.0 + 1.0 / (tau * tau);
    m.b = p.nu / (2.0 * tau);
    m.c = p.kappa_sq / std::pow(g.h(), m.alpha);
    m.A = build_A(p.order, M);
    m.D = build_D(p.order, M);

    const DenseMatrix Ad = m.A.dense();
    const DenseMatrix Dd = m.D.dense();
    m.lhs = combine(m.a + m.b, Dd, m.c * (1.0 / 12.0 + p.nu * tau / 24.0), Ad);
    m.rhs_curr = combine(2.0 * m.a, Dd, -m.c * (5.0 / 6.0), Ad);
    m.rhs_prev = combine(-(m.a - m.b), Dd, -m.c * (1.0 / 12.0 - p.nu * tau / 24.0), Ad);
    m.lhs_lu = DenseFactorization(m.lhs);
    m.boot = combine(1.0, Dd, m.c * tau * tau / 6.0, Ad);
    m.boot_lu = DenseFactorization(m.boot);
    return m;
}

Vec sample_nodes(const Grid1D& g, const Fn1& fn) {
    Vec v(static_cast<std::size_t>(g.M()) + 1);
    for (int j = 0; j <= g.M(); ++j)
        v[static_cast<std::size_t>(j)] = fn(g.x(j));
    return v;
}

Vec sample_nodes(const Grid1D& g, double t, const Fn2& fn) {
    Vec v(static_cast<std::size_t>(g.M()) + 1);
    for (int j = 0; j <= g.M(); ++j)
        v[static_cast<std::size_t>(j)] = fn(g.x(j), t);
    return v;
}

Fn1 resolve_f_t0(const TelegraphProblem& p, double tau) {
    if (p.f_t0)
        return p.f_t0;
    const double d = std::max(tau / 64.0, 1e-5);
    Fn2 f = p.f;
    return [f, d](double x) {
        return (-f(x, 2.0 * d) + 8.0 * f(x, d) - 8.0 * f(x, -d) + f(x, -2.0 * d)) / (12.0 * d);
    };
}

Vec bootstrap_first_level(const TelegraphProblem& p, const StepMatrices& m, const Grid1D& g,
                          const TimeGrid& tg) {
    const double tau = tg.tau();
    const double nu = p.nu;
    const Fn1 ft0 = resolve_f_t0(p, tau);
    const Vec phi = sample_nodes(g, p.phi);
    const Vec phit = sample_nodes(g, p.phi_t);
    const Vec f0 = sample_nodes(g, 0.0, p.f);
    const Vec ft = sample_nodes(g, ft0);

    const double c1 = tau / 6.0 * (6.0 - 3.0 * nu * tau + nu * nu * tau * tau);
    const double c2 = tau * tau / 6.0 * (3.0 - nu * tau);
    const double c3 = tau * tau * tau / 6.0;
    Vec G(phi.size());
    for (std::size_t j = 0; j < G.size(); ++j)
        G[j] = phi[j] + c1 * phit[j] + c2 * f0[j] + c3 * ft[j];

    Vec rhs = compact_apply_full(m.alpha, G);
    const Vec phi_in(phi.begin() + 1, phi.end() - 1);
    const Vec Aphi = toeplitz_matvec(m.A, phi_in);
    const double k = m.c * tau * tau / 6.0 * (2.0 - nu * tau);
    for (std::size_t j = 0; j < rhs.size(); ++j)
        rhs[j] -= k * Aphi[j];
    return m.boot_lu.solve(rhs);
}

Vec step(const StepMatrices& m, const Vec& u_prev, const Vec& u_curr, const Vec& f_prev,
         const Vec& f_curr, const Vec& f_next) {
    const std::size_t n = m.A.size();
    if (u_prev.size() != n || u_curr.size() != n)
        throw dimension_error("step: interior vectors must have length M-1");
    if (f_prev.size() != n + 2 || f_curr.size() != n + 2 || f_next.size() != n + 2)
        throw dimension_error("step: source samples must have length M+1");
    const double w = m.nu * m.tau / 24.0;
    Vec F(n + 2);
    for (std::size_t j = 0; j < F.size(); ++j)
        F[j] = f_curr[j] + (f_next[j] - 2.0 * f_curr[j] + f_prev[j]) / 12.0 + w * (f_next[j] - f_prev[j]);
    Vec rhs = compact_apply_full(m.alpha, F);
    const Vec r1 = m.rhs_curr * u_curr;
    const Vec r2 = m.rhs_prev * u_prev;
    for (std::size_t j = 0; j < n; ++j)
        rhs[j] += r1[j] + r2[j];
    return m.lhs_lu.solve(rhs);
}

namespace {

Vec pad(const Vec& interior) {
    Vec v(interior.size() + 2, 0.0);
    std::copy(interior.begin(), interior.end(), v.begin() + 1);
    return v;
}

} // namespace

Solution solve(const TelegraphProblem& p, int M, int N, const SolveOptions& opts) {
    p.validate();
    const Grid1D g(p.l, p.L, M);
    const TimeGrid tg(p.T, N);
    const StepMatrices m = StepMatrices::build(p, M, N);

    Solution sol{g, tg, {}, stability_check(p, M, N), opts.first_level};
    sol.values.reserve(static_cast<std::size_t>(N) + 1);

    Vec u0 = sample_nodes(g, p.phi);
    u0.front() = 0.0;
    u0.back() = 0.0;
    sol.values.push_back(u0);

    Vec u1;
    if (opts.first_level == FirstLevel::exact) {
        if (!p.exact)
            throw domain_error("FirstLevel::exact requires an exact solution");
        u1 = sample_nodes(g, tg.t(1), p.exact);
        u1 = Vec(u1.begin() + 1, u1.end() - 1);
    } else {
        u1 = bootstrap_first_level(p, m, g, tg);
    }
    sol.values.push_back(pad(u1));

    Vec prev(u0.begin() + 1, u0.end() - 1);
    Vec curr = u1;
    Vec f_prev = sample_nodes(g, tg.t(0), p.f);
    Vec f_curr = sample_nodes(g, tg.t(1), p.f);
    for (int s = 1; s < N; ++s) {
        Vec f_next = sample_nodes(g, tg.t(s + 1), p.f);
        Vec next = step(m, prev, curr, f_prev, f_curr, f_next);
        sol.values.push_back(pad(next));
        prev = std::move(curr);
        curr = std::move(next);
        f_prev = std::move(f_curr);
        f_curr = std::move(f_next);
    }
    return sol;
}

double max_error(const Solution& sol, const Fn2& exact) {
    double e = 0.0;
    for (int s = 0; s <= sol.time.N(); ++s) {
        const double t = sol.time.t(s);
        const Vec& row = sol.values[static_cast<std::size_t>(s)];
        for (int j = 0; j <= sol.grid.M(); ++j)
            e = std::max(e, std::abs(exact(sol.grid.x(j), t) - row[static_cast<std::size_t>(j)]));
    }
    return e;
}

TimeProfile TimeProfile::exp_t() {
    auto e = [](double t) { return std::exp(t); };
    return {"exp(t)", e, e, e, e};
}

TimeProfile TimeProfile::exp_t2() {
    return {"exp(t^2)",
            [](double t) { return std::exp(t * t); },
            [](double t) { return 2.0 * t * std::exp(t * t); },
            [](double t) { return (2.0 + 4.0 * t * t) * std::exp(t * t); },
            [](double t) { return (12.0 * t + 8.0 * t * t * t) * std::exp(t * t); }};
}

namespace {

double bump(int m, double x) { return std::pow(x * (1.0 - x), m); }

} // namespace

TelegraphProblem manufactured_problem(const RieszOrder& order, double nu, double kappa_sq, int m,
                                      const TimeProfile& profile, double T) {
    if (m < 2)
        throw domain_error("manufactured problem requires m >= 2");
    TelegraphProblem p;
    p.nu = nu;
    p.kappa_sq = kappa_sq;
    p.order = order;
    p.l = 0.0;
    p.L = 1.0;
    p.T = T;
    p.name = "manufactured:m=" + std::to_string(m) + "," + profile.name;
    const TimeProfile pr = profile;
    auto R = [order, m](double x) { return exact_riesz_symmetric_poly(m, order, x); };
    p.phi = [pr, m](double x) { return pr.T(0.0) * bump(m, x); };
    p.phi_t = [pr, m](double x) { return pr.dT(0.0) * bump(m, x); };
    p.f = [pr, m, nu, kappa_sq, R](double x, double t) {
        return (pr.d2T(t) + nu * pr.dT(t)) * bump(m, x) - kappa_sq * pr.T(t) * R(x);
    };
    p.f_t0 = [pr, m, nu, kappa_sq, R](double x) {
        return (pr.d3T(0.0) + nu * pr.d2T(0.0)) * bump(m, x) - kappa_sq * pr.dT(0.0) * R(x);
    };
    p.exact = [pr, m](double x, double t) { return pr.T(t) * bump(m, x); };
    return p;
}

double example3_source(double alpha, double x, double t) {
    const double e = std::exp(t * t);
    const double sec = 1.0 / std::cos(0.5 * std::numbers::pi * alpha);
    const long double xl = x;
    const long double yl = 1.0L - xl;
    auto pair = [&](int p) { return std::pow(xl, p - alpha) + std::pow(yl, p - alpha); };
    // G(k) = Gamma(k)/Gamma(k-alpha), stepped by G(k+1) = G(k) k/(k-alpha)
    long double G[14];
    G[7] = gamma(7.0) / gamma(7.0 - alpha);
    for (int k = 7; k < 13; ++k)
        G[k + 1] = G[k] * k / (k - static_cast<long double>(alpha));
    const double brace = static_cast<double>(G[7] * pair(6) - 6.0L * G[8] * pair(7) + 15.0L * G[9] * pair(8) -
                                             20.0L * G[10] * pair(9) + 15.0L * G[11] * pair(10) -
                                             6.0L * G[12] * pair(11) + G[13] * pair(12));
    return 2.0 * (2.0 * t * t + t + 1.0) * e * bump(6, x) + 0.5 * e * sec * brace;
}

Example3Resolution resolve_example3(const RieszOrder& order) {
    const double a = order.alpha();
    const TimeProfile cands[2] = {TimeProfile::exp_t2(), TimeProfile::exp_t()};
    double res[2] = {0.0, 0.0};
    for (int c = 0; c < 2; ++c) {
        const TimeProfile& pr = cands[c];
        for (int i = 0; i <= 16; ++i)
            for (int k = 0; k <= 16; ++k) {
                const double x = i / 16.0;
                const double t = k / 16.0;
                const double w = bump(6, x);
                const double lhs = pr.d2T(t) * w + pr.dT(t) * w;
                const double rhs = pr.T(t) * exact_riesz_symmetric_poly(6, order, x) +
                                   example3_source(a, x, t);
                res[c] = std::max(res[c], std::abs(lhs - rhs));
            }
    }
    Example3Resolution r;
    r.residual_exp_t2 = res[0];
    r.residual_exp_t = res[1];
    r.chosen = res[0] <= res[1] ? "exp(t^2)" : "exp(t)";
    return r;
}

TelegraphProblem example3_problem(const RieszOrder& order) {
    const Example3Resolution r = resolve_example3(order);
    const TimeProfile pr = r.chosen == "exp(t^2)" ? TimeProfile::exp_t2() : TimeProfile::exp_t();
    TelegraphProblem p;
    p.nu = 1.0;
    p.kappa_sq = 1.0;
    p.order = order;
    p.T = 1.0;
    p.name = "example3[" + r.chosen + "]";
    const double a = order.alpha();
    p.phi = [pr](double x) { return pr.T(0.0) * bump(6, x); };
    p.phi_t = [pr](double x) { return pr.dT(0.0) * bump(6, x); };
    p.f = [a](double x, double t) { return example3_source(a, x, t); };
    // d/dt of the source at t = 0
    p.f_t0 = [](double x) { return 2.0 * bump(6, x); };
    p.exact = [pr](double x, double t) { return pr.T(t) * bump(6, x); };
    return p;
}

} // namespace riesz
