#pragma once

#include <functional>
#include <string>
#include <vector>

#include "riesz/coeffs.hpp"
#include "riesz/linalg.hpp"
#include "riesz/riesz_ops.hpp"

namespace riesz {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

/// Uniform time levels t_s = s * tau on [0, T].
class TimeGrid {
public:
    TimeGrid(double T, int N);

    double T() const { return T_; }
    int N() const { return N_; }
    double tau() const { return tau_; }
    double t(int s) const { return s == N_ ? T_ : s * tau_; }

private:
    double T_;
    int N_;
    double tau_;
};

/// u_tt + nu u_t = kappa_sq * R_alpha u + f on (l, L) x (0, T], u = 0 on the boundary,
/// u(x,0) = phi, u_t(x,0) = phi_t.
struct TelegraphProblem {
    double nu = 1.0;
    double kappa_sq = 1.0;
    RieszOrder order{1.5};
    double l = 0.0;
    double L = 1.0;
    double T = 1.0;
    Fn1 phi;
    Fn1 phi_t;
    Fn2 f;
    Fn1 f_t0;  // df/dt at t = 0; empty means a finite-difference substitute is used
    Fn2 exact; // optional
    std::string name;

    void validate() const;
};

struct StabilityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double margin = 0.0;
    double proof_lhs = 0.0;
    bool proof_timestep_ok = false;
};

StabilityReport stability_check(const TelegraphProblem& p, int M, int N);

/// Time-independent operators of the three-level scheme, factored once.
struct StepMatrices {
    double alpha = 0.0;
    double nu = 0.0;
    double tau = 0.0;
    double a = 0.0; // nu^2/12 + 1/tau^2
    double b = 0.0; // nu/(2 tau)
    double c = 0.0; // kappa^2 / h^alpha
    SymToeplitzMatrix A;
    BandedMatrix D;
    DenseMatrix lhs;
    DenseMatrix rhs_curr;
    DenseMatrix rhs_prev;
    DenseFactorization lhs_lu;
    DenseMatrix boot;
    DenseFactorization boot_lu;

    static StepMatrices build(const TelegraphProblem& p, int M, int N);
};

enum class FirstLevel { bootstrap, exact };

struct SolveOptions {
    FirstLevel first_level = FirstLevel::bootstrap;
};

struct Solution {
    Grid1D grid;
    TimeGrid time;
    std::vector<Vec> values; // [s][j], s = 0..N, j = 0..M
    StabilityReport stability;
    FirstLevel first_level = FirstLevel::bootstrap;
};

/// f(., t) on all nodes 0..M.
Vec sample_nodes(const Grid1D& g, const Fn1& fn);
Vec sample_nodes(const Grid1D& g, double t, const Fn2& fn);

/// df/dt(x, 0) either from the supplied callable or a fourth-order central difference.
Fn1 resolve_f_t0(const TelegraphProblem& p, double tau);

Vec bootstrap_first_level(const TelegraphProblem& p, const StepMatrices& m, const Grid1D& g,
                          const TimeGrid& tg);

/// One step of the three-level scheme. u_* are interior vectors (length M-1),
/// f_* are nodal samples including the boundary nodes (length M+1).
Vec step(const StepMatrices& m, const Vec& u_prev, const Vec& u_curr, const Vec& f_prev,
         const Vec& f_curr, const Vec& f_next);

Solution solve(const TelegraphProblem& p, int M, int N, const SolveOptions& opts = {});

double max_error(const Solution& sol, const Fn2& exact);

/// T(t) with its first three derivatives.
struct TimeProfile {
    std::string name;
    Fn1 T;
    Fn1 dT;
    Fn1 d2T;
    Fn1 d3T;

    static TimeProfile exp_t();
    static TimeProfile exp_t2();
};

/// Manufactured problem with exact solution T(t) x^m (1-x)^m on [0, 1], m >= 2.
TelegraphProblem manufactured_problem(const RieszOrder& order, double nu, double kappa_sq, int m,
                                      const TimeProfile& profile, double T = 1.0);

/// Closed-form source term of the example3 problem (nu = kappa^2 = 1).
double example3_source(double alpha, double x, double t);

struct Example3Resolution {
    std::string chosen;            // "exp(t^2)" or "exp(t)"
    double residual_exp_t2 = 0.0;  // max |u_tt + u_t - R u - f| over a sample grid
    double residual_exp_t = 0.0;
};

/// Decides by residual substitution which candidate exact solution example3_source belongs to.
Example3Resolution resolve_example3(const RieszOrder& order);

/// The example3 problem with the exact solution selected by resolve_example3.
TelegraphProblem example3_problem(const RieszOrder& order);

} // namespace riesz
