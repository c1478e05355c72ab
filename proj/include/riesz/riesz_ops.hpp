#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "riesz/coeffs.hpp"
#include "riesz/errors.hpp"
#include "riesz/linalg.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

/// Uniform grid x_j = l + j h on [l, L], j = 0..M.
class Grid1D {
public:
    Grid1D(double l, double L, int M) : l_(l), L_(L), M_(M) {
        if (!(L > l))
            throw grid_error("Grid1D requires L > l");
        if (M < 4)
            throw grid_error("Grid1D requires M >= 4, got " + std::to_string(M));
        h_ = (L - l) / M;
    }

    double l() const { return l_; }
    double L() const { return L_; }
    int M() const { return M_; }
    double h() const { return h_; }
    double x(int j) const { return j == M_ ? L_ : l_ + j * h_; }

private:
    double l_;
    double L_;
    int M_;
    double h_;
};

/// Nodal values u_0..u_M on a grid.
struct GridFn {
    Grid1D grid;
    Vec values;

    static GridFn sample(const Grid1D& g, const std::function<double(double)>& f) {
        GridFn u{g, Vec(static_cast<std::size_t>(g.M()) + 1)};
        for (int j = 0; j <= g.M(); ++j)
            u.values[static_cast<std::size_t>(j)] = f(g.x(j));
        return u;
    }

    Vec interior() const { return Vec(values.begin() + 1, values.end() - 1); }
};

struct RieszApproximation {
    Vec w; // interior nodes 1..M-1
    int scheme_order = 2;
    double alpha = 0.0;
};

inline void require_zero_boundary(const GridFn& u) {
    if (u.values.size() != static_cast<std::size_t>(u.grid.M()) + 1)
        throw dimension_error("GridFn length must be M+1");
    double scale = 0.0;
    for (double v : u.values)
        scale = std::max(scale, std::abs(v));
    const double lim = 1e-14 * scale;
    if (std::abs(u.values.front()) > lim || std::abs(u.values.back()) > lim)
        throw boundary_error("operator expects u_0 = u_M = 0");
}

/// w_j = sum_{k=-(M-j)}^{j} g_k u_{j-k}, j = 1..M-1.
inline Vec centred_diff_apply(const CentredCoeffs& g, const GridFn& u) {
    require_zero_boundary(u);
    const int M = u.grid.M();
    if (g.K() < static_cast<std::size_t>(M))
        throw dimension_error("centred_diff_apply: need g_0..g_M");
    Vec w(static_cast<std::size_t>(M - 1), 0.0);
    for (int j = 1; j < M; ++j) {
        double s = 0.0;
        for (int k = -(M - j); k <= j; ++k)
            s += g[k] * u.values[static_cast<std::size_t>(j - k)];
        w[static_cast<std::size_t>(j - 1)] = s;
    }
    return w;
}

inline Vec centred_diff_apply(const RieszOrder& order, const GridFn& u) {
    return centred_diff_apply(g_coeffs(order, static_cast<std::size_t>(u.grid.M())), u);
}

/// A_alpha: (M-1)x(M-1) symmetric Toeplitz with first row g_0..g_{M-2}.
inline SymToeplitzMatrix build_A(const RieszOrder& order, int M) {
    if (M < 3)
        throw grid_error("build_A requires M >= 3");
    auto c = g_coeffs(order, static_cast<std::size_t>(M - 2));
    return SymToeplitzMatrix{std::move(c.g)};
}

/// D_alpha = tridiag(alpha/24, 1 - alpha/12, alpha/24).
inline BandedMatrix build_D(const RieszOrder& order, int M) {
    if (M < 3)
        throw grid_error("build_D requires M >= 3");
    const auto n = static_cast<std::size_t>(M - 1);
    const double a = order.alpha();
    BandedMatrix D(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        D.set(i, i, 1.0 - a / 12.0);
        if (i + 1 < n) {
            D.set(i, i + 1, a / 24.0);
            D.set(i + 1, i, a / 24.0);
        }
    }
    return D;
}

/// Applies the D_alpha stencil at nodes 1..M-1 of a full nodal vector v_0..v_M,
/// reading the boundary samples v_0 and v_M as given.
inline Vec compact_apply_full(double alpha, const Vec& full) {
    if (full.size() < 3)
        throw dimension_error("compact_apply_full: need at least 3 nodes");
    const double off = alpha / 24.0;
    const double diag = 1.0 - alpha / 12.0;
    Vec r(full.size() - 2);
    for (std::size_t j = 1; j + 1 < full.size(); ++j)
        r[j - 1] = off * full[j - 1] + diag * full[j] + off * full[j + 1];
    return r;
}

/// Binomial stencil of the central 2l-th difference, offsets -l..l.
inline Vec even_difference_stencil(int ell) {
    const int n = 2 * ell;
    Vec c(static_cast<std::size_t>(n) + 1);
    double binom = 1.0;
    for (int s = 0; s <= n; ++s) {
        c[static_cast<std::size_t>(s)] = (s % 2 == 0 ? 1.0 : -1.0) * binom;
        binom = binom * (n - s) / (s + 1);
    }
    return c; // symmetric, so the orientation of s does not matter
}

/// delta^{2l} v on an interior vector with zero extension.
inline Vec even_difference_apply(int ell, const Vec& v) {
    if (ell == 0)
        return v;
    const Vec c = even_difference_stencil(ell);
    const auto n = static_cast<std::ptrdiff_t>(v.size());
    Vec r(v.size(), 0.0);
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::ptrdiff_t d = -ell; d <= ell; ++d) {
            const std::ptrdiff_t i = j + d;
            if (i >= 0 && i < n)
                s += c[static_cast<std::size_t>(d + ell)] * v[static_cast<std::size_t>(i)];
        }
        r[static_cast<std::size_t>(j)] = s;
    }
    return r;
}

/// I - b * delta^{2l} on n interior nodes, Dirichlet closure.
inline BandedMatrix compact_lhs(double b, int ell, std::size_t n) {
    const Vec c = even_difference_stencil(ell);
    const auto beta = static_cast<std::size_t>(ell);
    BandedMatrix B(n, beta);
    for (std::size_t i = 0; i < n; ++i)
        for (int d = -ell; d <= ell; ++d) {
            const auto j = static_cast<std::ptrdiff_t>(i) + d;
            if (j < 0 || j >= static_cast<std::ptrdiff_t>(n))
                continue;
            const double v = (d == 0 ? 1.0 : 0.0) - b * c[static_cast<std::size_t>(d + ell)];
            B.set(i, static_cast<std::size_t>(j), v);
        }
    return B;
}

/// Fractional-compact approximation of the Riesz derivative of order scheme_order.
inline RieszApproximation riesz_derivative(const GridFn& u, const RieszOrder& order, int scheme_order) {
    const CompactCoeffs bc = b_coeffs(order, scheme_order);
    const int M = u.grid.M();
    const int n = bc.n;
    if (M - 1 <= 2 * (n - 1))
        throw grid_error("grid too small for scheme order " + std::to_string(scheme_order));

    const double scale = -std::pow(u.grid.h(), -order.alpha());
    Vec r = centred_diff_apply(order, u);
    for (double& v : r)
        v *= scale;

    RieszApproximation out;
    out.scheme_order = scheme_order;
    out.alpha = order.alpha();
    if (n == 1) {
        out.w = std::move(r);
        return out;
    }
    Vec s(r.size(), 0.0);
    for (int ell = 0; ell <= n - 2; ++ell) {
        const Vec d = even_difference_apply(ell, r);
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] += bc.b[static_cast<std::size_t>(ell)] * d[i];
    }
    out.w = banded_solve(compact_lhs(bc.b[static_cast<std::size_t>(n - 1)], n - 1, r.size()), s);
    return out;
}

/// Exact Riesz derivative of the zero-extended x^m (1-x)^m at interior x.
inline double exact_riesz_symmetric_poly(int m, const RieszOrder& order, double x) {
    if (m < 1)
        throw domain_error("exact_riesz_symmetric_poly requires m >= 1");
    const double a = order.alpha();
    if (!(x > 0.0 && x < 1.0)) {
        if (x < 0.0 || x > 1.0 || static_cast<double>(m) - a < 0.0)
            throw domain_error("exact_riesz_symmetric_poly: x must lie in (0,1) here");
    }
    // term_l = C(m,l) Gamma(m+l+1)/Gamma(m+l+1-a); the ratio follows by recursion in l
    const long double lead = gamma(m + 1.0) / gamma(m + 1.0 - a);
    const long double xl = x;
    const long double yl = 1.0L - xl;
    long double ratio = lead;
    long double binom = 1.0L;
    long double sum = 0.0L;
    for (int ell = 0; ell <= m; ++ell) {
        if (ell > 0) {
            ratio *= static_cast<long double>(m + ell) / (static_cast<long double>(m + ell) - a);
            binom = binom * static_cast<long double>(m - ell + 1) / ell;
        }
        const long double e = static_cast<long double>(m + ell) - a;
        const long double term = binom * ratio * (std::pow(xl, e) + std::pow(yl, e));
        sum += (ell % 2 == 0) ? term : -term;
    }
    return -order.kappa_alpha() * static_cast<double>(sum);
}

} // namespace riesz
