#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/telegraph.hpp"

namespace riesz {

struct ConvergenceRow {
    double alpha = 0.0;
    double h = 0.0;
    std::optional<double> tau;
    double E = 0.0;
    std::optional<double> eco;
};

using Table = std::vector<ConvergenceRow>;

/// log(E1/E2) / log(h1/h2)
double eco(double E1, double E2, double h1, double h2);

/// Fills the eco column within each alpha block, in row order.
void fill_eco(Table& t);

/// |w(1/2) - exact(1/2)| for the scheme applied to x^m (1-x)^m sampled on M cells of [0,1].
double example1_point_error(int scheme_order, double alpha, int M, int m);

/// Converts h = 1/M to M, rejecting grids where x = 1/2 is not a node.
int cells_for_midpoint(double h);

/// poly_m = 0 selects m = scheme_order (u_n with n = scheme_order/2).
Table example1_sweep(int scheme_order, const std::vector<double>& alphas, const std::vector<double>& hs,
                     int poly_m = 0, int parallel = 1);

Table example2_sweep(const std::vector<double>& alphas, const std::vector<double>& hs, int parallel = 1);

enum class Example3Variant {
    given_source,       // stated source, exact solution from residual check, bootstrap first level
    exp_t_exact_start,  // x^6(1-x)^6 e^t with consistent source, first level from the exact solution
};

std::string to_string(Example3Variant v);

TelegraphProblem example3_variant_problem(const RieszOrder& order, Example3Variant v);
SolveOptions example3_variant_options(Example3Variant v);

/// M = N for each entry of Ms; eco via the log ratio of successive rows.
Table example3_sweep(const std::vector<double>& alphas, const std::vector<int>& Ms,
                     Example3Variant v = Example3Variant::given_source, int parallel = 1);

enum class Format { csv, json, pretty };

Format parse_format(const std::string& s);
std::string emit(const Table& t, Format f);
Table parse_csv(const std::string& csv);
Table parse_json(const std::string& json);

struct PropertyResult {
    std::string name;
    std::string tolerance;
    bool pass = false;
    std::string detail;
};

struct PropertyOptions {
    double g1_perturbation = 0.0; // fault injection into g_1 for the identity check
    unsigned seed = 20240607u;
};

std::vector<PropertyResult> property_suite(const PropertyOptions& opts = {});

/// Homogeneous run from a random perturbation of zero data; level differences
/// ||u^{s+1} - u^s|| over all steps compared with their maximum over the first five.
struct NoBlowup {
    double early_max = 0.0;
    double overall_max = 0.0;
    double ratio = 0.0;
    bool condition_satisfied = false;
};

NoBlowup stability_no_blowup(double alpha, double nu, double kappa_sq, int M, int N, unsigned seed);

/// (u, v) = h * sum u_j v_j
double h_inner(const Vec& u, const Vec& v, double h);

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

} // namespace riesz
