#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

using Vec = std::vector<double>;

namespace tol {
inline constexpr double pivot = 1e-14;
inline constexpr double symmetry = 1e-12;
inline constexpr double pd_pivot = 1e-12;
} // namespace tol

/// Row-major square matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_)
            m = std::max(m, std::abs(v));
        return m;
    }

    double norm1() const {
        double m = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n_; ++i)
                s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

    Vec operator*(const Vec& v) const {
        if (v.size() != n_)
            throw dimension_error("DenseMatrix * vector: size mismatch");
        Vec r(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            const double* row = &a_[i * n_];
            for (std::size_t j = 0; j < n_; ++j)
                s += row[j] * v[j];
            r[i] = s;
        }
        return r;
    }

    /// this = x*this + y*other
    DenseMatrix& axpby(double x, double y, const DenseMatrix& other) {
        if (other.n_ != n_)
            throw dimension_error("axpby: size mismatch");
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] = x * a_[k] + y * other.a_[k];
        return *this;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Symmetric Toeplitz matrix given by its first row t_0..t_{n-1}.
struct SymToeplitzMatrix {
    Vec first_row;

    std::size_t size() const { return first_row.size(); }
    double operator()(std::size_t i, std::size_t j) const { return first_row[i > j ? i - j : j - i]; }

    DenseMatrix dense() const {
        const std::size_t n = size();
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = (*this)(i, j);
        return m;
    }
};

inline Vec toeplitz_matvec(const SymToeplitzMatrix& t, const Vec& v) {
    const std::size_t n = t.size();
    if (v.size() != n)
        throw dimension_error("toeplitz_matvec: dimension mismatch (" + std::to_string(n) + " vs " +
                              std::to_string(v.size()) + ")");
    Vec r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += t.first_row[i > j ? i - j : j - i] * v[j];
        r[i] = s;
    }
    return r;
}

/// Banded matrix, diagonals stored by offset -beta..beta.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(std::size_t n, std::size_t beta) : n_(n), beta_(beta), d_((2 * beta + 1) * n, 0.0) {}

    std::size_t size() const { return n_; }
    std::size_t half_bandwidth() const { return beta_; }

    double operator()(std::size_t i, std::size_t j) const {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
        if (off > static_cast<std::ptrdiff_t>(beta_) || -off > static_cast<std::ptrdiff_t>(beta_))
            return 0.0;
        return d_[slot(i, off)];
    }

    void set(std::size_t i, std::size_t j, double v) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(i);
        if (off > static_cast<std::ptrdiff_t>(beta_) || -off > static_cast<std::ptrdiff_t>(beta_))
            throw dimension_error("BandedMatrix::set outside the band");
        d_[slot(i, off)] = v;
    }

    Vec operator*(const Vec& v) const {
        if (v.size() != n_)
            throw dimension_error("BandedMatrix * vector: size mismatch");
        Vec r(n_, 0.0);
        const auto b = static_cast<std::ptrdiff_t>(beta_);
        const auto n = static_cast<std::ptrdiff_t>(n_);
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - b); j <= std::min(n - 1, i + b); ++j)
                s += d_[slot(static_cast<std::size_t>(i), j - i)] * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }

    DenseMatrix dense() const {
        DenseMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m(i, j) = (*this)(i, j);
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : d_)
            m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t slot(std::size_t i, std::ptrdiff_t off) const {
        return static_cast<std::size_t>(off + static_cast<std::ptrdiff_t>(beta_)) * n_ + i;
    }

    std::size_t n_ = 0;
    std::size_t beta_ = 0;
    std::vector<double> d_;
};

/// LU with partial pivoting; immutable once built, solves are const.
class DenseFactorization {
public:
    DenseFactorization() = default;
    explicit DenseFactorization(DenseMatrix a) : lu_(std::move(a)), piv_(lu_.size()) {
        const std::size_t n = lu_.size();
        const double floor = tol::pivot * std::max(lu_.max_abs(), 1e-300);
        for (std::size_t i = 0; i < n; ++i)
            piv_[i] = i;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            double best = std::abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(lu_(i, k)) > best) {
                    best = std::abs(lu_(i, k));
                    p = i;
                }
            if (best <= floor)
                throw singular_matrix("LU: pivot " + std::to_string(best) + " at column " +
                                      std::to_string(k));
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(lu_(k, j), lu_(p, j));
                std::swap(piv_[k], piv_[p]);
            }
            const double inv = 1.0 / lu_(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                const double l = lu_(i, k) * inv;
                lu_(i, k) = l;
                if (l == 0.0)
                    continue;
                for (std::size_t j = k + 1; j < n; ++j)
                    lu_(i, j) -= l * lu_(k, j);
            }
        }
    }

    std::size_t size() const { return lu_.size(); }

    Vec solve(const Vec& rhs) const {
        const std::size_t n = lu_.size();
        if (rhs.size() != n)
            throw dimension_error("lu_solve: dimension mismatch");
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = rhs[piv_[i]];
        for (std::size_t i = 0; i < n; ++i) {
            double s = x[i];
            for (std::size_t j = 0; j < i; ++j)
                s -= lu_(i, j) * x[j];
            x[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = x[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= lu_(i, j) * x[j];
            x[i] = s / lu_(i, i);
        }
        return x;
    }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> piv_;
};

inline Vec lu_solve(const DenseFactorization& f, const Vec& rhs) { return f.solve(rhs); }

namespace detail {

struct band_breakdown {};

// Band LU without pivoting; throws band_breakdown on a tiny pivot.
inline Vec banded_solve_nopivot(const BandedMatrix& B, const Vec& rhs) {
    const auto n = static_cast<std::ptrdiff_t>(B.size());
    const auto b = static_cast<std::ptrdiff_t>(B.half_bandwidth());
    const double floor = tol::pivot * std::max(B.max_abs(), 1e-300);
    // work[i][off + b] holds entry (i, i + off)
    std::vector<double> w(static_cast<std::size_t>(n * (2 * b + 1)), 0.0);
    auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double& {
        return w[static_cast<std::size_t>(i * (2 * b + 1) + (j - i) + b)];
    };
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - b); j <= std::min(n - 1, i + b); ++j)
            at(i, j) = B(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Vec x = rhs;
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const double piv = at(k, k);
        if (std::abs(piv) <= floor)
            throw band_breakdown{};
        for (std::ptrdiff_t i = k + 1; i <= std::min(n - 1, k + b); ++i) {
            const double l = at(i, k) / piv;
            if (l == 0.0)
                continue;
            for (std::ptrdiff_t j = k + 1; j <= std::min(n - 1, k + b); ++j)
                at(i, j) -= l * at(k, j);
            x[static_cast<std::size_t>(i)] -= l * x[static_cast<std::size_t>(k)];
        }
    }
    for (std::ptrdiff_t i = n - 1; i >= 0; --i) {
        double s = x[static_cast<std::size_t>(i)];
        for (std::ptrdiff_t j = i + 1; j <= std::min(n - 1, i + b); ++j)
            s -= at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    return x;
}

} // namespace detail

/// Solves B x = rhs by band elimination; falls back to dense pivoted LU on breakdown.
inline Vec banded_solve(const BandedMatrix& B, const Vec& rhs) {
    if (rhs.size() != B.size())
        throw dimension_error("banded_solve: dimension mismatch");
    try {
        return detail::banded_solve_nopivot(B, rhs);
    } catch (const detail::band_breakdown&) {
        return DenseFactorization(B.dense()).solve(rhs);
    }
}

inline void require_symmetric(const DenseMatrix& A) {
    const double scale = A.max_abs();
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (std::abs(A(i, j) - A(j, i)) > tol::symmetry * scale)
                throw asymmetry_error("matrix is not symmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
}

/// Positive-definiteness certificate: true iff Cholesky runs with strictly positive pivots.
inline bool cholesky_pd_check(const DenseMatrix& A) {
    require_symmetric(A);
    const std::size_t n = A.size();
    const double floor = tol::pd_pivot * A.max_abs();
    DenseMatrix L(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = A(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= L(j, k) * L(j, k);
        if (d <= floor)
            return false;
        const double ljj = std::sqrt(d);
        L(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = A(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= L(i, k) * L(j, k);
            L(i, j) = s / ljj;
        }
    }
    return true;
}

struct EigenInterval {
    double lower = 0.0;
    double upper = 0.0;

    bool contains(double x) const { return x >= lower && x <= upper; }
};

inline EigenInterval gershgorin_interval(const DenseMatrix& A) {
    const std::size_t n = A.size();
    if (n == 0)
        return {};
    EigenInterval e{INFINITY, -INFINITY};
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                r += std::abs(A(i, j));
        e.lower = std::min(e.lower, A(i, i) - r);
        e.upper = std::max(e.upper, A(i, i) + r);
    }
    return e;
}

inline EigenInterval gershgorin_interval(const SymToeplitzMatrix& T) {
    const std::size_t n = T.size();
    if (n == 0)
        return {};
    EigenInterval e{INFINITY, -INFINITY};
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                r += std::abs(T(i, j));
        e.lower = std::min(e.lower, T.first_row[0] - r);
        e.upper = std::max(e.upper, T.first_row[0] + r);
    }
    return e;
}

} // namespace riesz
