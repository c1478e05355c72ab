#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "riesz/coeffs.hpp"
#include "riesz/errors.hpp"
#include "riesz/harness.hpp"
#include "riesz/riesz_ops.hpp"
#include "riesz/telegraph.hpp"

using namespace riesz;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string format = "csv";
    std::string out;
    int parallel = 1;
};

void add_common(CLI::App* sc, Common& c) {
    sc->add_option("--format", c.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    sc->add_option("--out", c.out, "output path (default stdout)");
    sc->add_option("--parallel", c.parallel, "worker threads")->check(CLI::PositiveNumber);
}

void write_out(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw std::runtime_error("cannot open " + c.out);
    f << text;
}

std::string g17(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string run_coeffs(double alpha, int count, const std::string& format) {
    const RieszOrder o(alpha);
    const auto g = g_coeffs(o, static_cast<std::size_t>(count));
    const auto a = a_coeffs(o);
    if (format == "json") {
        json j;
        j["alpha"] = alpha;
        j["kappa_alpha"] = o.kappa_alpha();
        j["g"] = g.g;
        for (int so : {2, 4, 6, 8, 10})
            j["b"][std::to_string(so)] = b_coeffs(o, so).b;
        j["a"] = std::vector<double>(a.a.begin(), a.a.end());
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "family,scheme_order,index,value\n";
        for (std::size_t k = 0; k < g.g.size(); ++k)
            os << "g,," << k << ',' << g17(g.g[k]) << '\n';
        for (int so : {2, 4, 6, 8, 10}) {
            const auto b = b_coeffs(o, so);
            for (std::size_t l = 0; l < b.b.size(); ++l)
                os << "b," << so << ',' << l << ',' << g17(b.b[l]) << '\n';
        }
        for (std::size_t p = 0; p < 4; ++p)
            os << "a,," << p << ',' << g17(a.a[p]) << '\n';
        return os.str();
    }
    os << "alpha = " << alpha << ", kappa_alpha = " << g17(o.kappa_alpha()) << "\n";
    for (std::size_t k = 0; k < g.g.size(); ++k)
        os << "  g_" << k << " = " << g17(g.g[k]) << "\n";
    for (int so : {4, 6, 8, 10}) {
        os << "  scheme " << so << ": b =";
        for (double b : b_coeffs(o, so).b)
            os << ' ' << g17(b);
        os << "\n";
    }
    os << "  a =";
    for (double v : a.a)
        os << ' ' << g17(v);
    os << "\n";
    return os.str();
}

std::string run_apply(double alpha, int order, int M, int poly, const std::string& format) {
    if (M % 2 != 0)
        throw grid_error("--m must be even so that x = 1/2 is a node");
    const int m = 2 * poly;
    const RieszOrder o(alpha);
    const Grid1D g(0.0, 1.0, M);
    const GridFn u = GridFn::sample(g, [m](double x) { return std::pow(x * (1.0 - x), m); });
    const double approx = riesz_derivative(u, o, order).w[static_cast<std::size_t>(M / 2 - 1)];
    const double exact = exact_riesz_symmetric_poly(m, o, 0.5);
    const double err = std::abs(approx - exact);
    if (format == "json") {
        json j{{"alpha", alpha}, {"order", order}, {"M", M}, {"poly", poly}, {"x", 0.5},
               {"approx", approx}, {"exact", exact}, {"error", err}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv")
        os << "alpha,order,M,poly,x,approx,exact,error\n"
           << alpha << ',' << order << ',' << M << ',' << poly << ",0.5," << g17(approx) << ',' << g17(exact)
           << ',' << g17(err) << '\n';
    else
        os << "alpha=" << alpha << " scheme=" << order << " M=" << M << " u=x^" << m << "(1-x)^" << m
           << "\n  approx = " << g17(approx) << "\n  exact  = " << g17(exact) << "\n  error  = " << g17(err)
           << "\n";
    return os.str();
}

std::vector<double> hs_from_Ms(const std::vector<int>& Ms) {
    std::vector<double> hs;
    for (int M : Ms)
        hs.push_back(1.0 / M);
    return hs;
}

std::vector<int> default_Ms(int example, int scheme) {
    if (example == 2)
        return {10, 20, 40, 80, 160};
    switch (scheme) {
    case 4:
        return {20, 40, 80, 160, 320};
    case 6:
        return {20, 24, 28, 32, 36};
    default:
        return {30, 34, 38, 42, 46};
    }
}

TelegraphProblem parse_problem(const std::string& spec, const RieszOrder& o, double nu, double kappa_sq,
                               const std::string& profile) {
    if (spec == "example3") {
        TelegraphProblem p = example3_problem(o);
        if (nu != 1.0 || kappa_sq != 1.0)
            std::cerr << "note: example3 fixes nu = kappa_sq = 1; --nu/--kappa-sq ignored\n";
        return p;
    }
    const std::string prefix = "manufactured:m=";
    if (spec.rfind(prefix, 0) == 0) {
        const int m = std::stoi(spec.substr(prefix.size()));
        const TimeProfile pr = profile == "exp2" ? TimeProfile::exp_t2() : TimeProfile::exp_t();
        return manufactured_problem(o, nu, kappa_sq, m, pr);
    }
    throw std::invalid_argument("--problem must be example3 or manufactured:m=<int>");
}

json stability_json(const StabilityReport& s) {
    return json{{"lhs", s.lhs},
                {"rhs", s.rhs},
                {"satisfied", s.satisfied},
                {"margin", s.margin},
                {"proof_lhs", s.proof_lhs},
                {"proof_timestep_ok", s.proof_timestep_ok}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riesz-kit: fractional centred differences, compact Riesz schemes, telegraph solver"};
    app.require_subcommand(1);

    Common common;

    double alpha = 1.5;
    int count = 10;
    auto* c_coeffs = app.add_subcommand("coeffs", "dump g_k, b_l and a_p");
    c_coeffs->add_option("--alpha", alpha)->required();
    c_coeffs->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);
    add_common(c_coeffs, common);

    int order = 4;
    int M = 20;
    int poly = 2;
    auto* c_apply = app.add_subcommand("riesz-apply", "compact Riesz derivative of x^{2n}(1-x)^{2n} at x = 1/2");
    c_apply->add_option("--alpha", alpha)->required();
    c_apply->add_option("--order", order)->required()->check(CLI::IsMember({2, 4, 6, 8, 10}));
    c_apply->add_option("--m", M, "cell count")->required();
    c_apply->add_option("--poly", poly, "n in u_n = x^{2n}(1-x)^{2n}")->required()->check(CLI::PositiveNumber);
    add_common(c_apply, common);

    int example = 1;
    int scheme = 4;
    std::vector<double> alphas;
    std::vector<int> Ms;
    auto* c_conv = app.add_subcommand("riesz-convergence", "error/ECO sweep at x = 1/2");
    c_conv->add_option("--example", example, "1: u_n with matching scheme, 2: x(1-x) with scheme 4")
        ->check(CLI::IsMember({1, 2}));
    c_conv->add_option("--scheme", scheme)->check(CLI::IsMember({4, 6, 8, 10}));
    c_conv->add_option("--alphas", alphas)->delimiter(',');
    c_conv->add_option("--Ms", Ms, "cell counts (even)")->delimiter(',');
    add_common(c_conv, common);

    double nu = 1.0;
    double kappa_sq = 1.0;
    int N = 20;
    double T = 1.0;
    std::string problem = "example3";
    std::string profile = "exp";
    std::string first_level = "bootstrap";
    auto* c_solve = app.add_subcommand("telegraph-solve", "solve the Riesz telegraph equation");
    c_solve->add_option("--alpha", alpha)->required();
    c_solve->add_option("--nu", nu);
    c_solve->add_option("--kappa-sq", kappa_sq);
    c_solve->add_option("--M", M)->required();
    c_solve->add_option("--N", N)->required();
    c_solve->add_option("--T", T);
    c_solve->add_option("--problem", problem, "example3 | manufactured:m=<int>");
    c_solve->add_option("--profile", profile, "time factor of a manufactured solution")
        ->check(CLI::IsMember({"exp", "exp2"}));
    c_solve->add_option("--first-level", first_level)->check(CLI::IsMember({"bootstrap", "exact"}));
    add_common(c_solve, common);

    std::string variant = "given-source";
    auto* c_tconv = app.add_subcommand("telegraph-convergence", "example3 convergence sweep with M = N");
    c_tconv->add_option("--alphas", alphas)->delimiter(',');
    c_tconv->add_option("--Ms", Ms)->delimiter(',');
    c_tconv->add_option("--variant", variant)->check(CLI::IsMember({"given-source", "exp-t-exact-start"}));
    add_common(c_tconv, common);

    auto* c_props = app.add_subcommand("verify-properties", "run the property suite");
    add_common(c_props, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format fmt = parse_format(common.format);
        if (*c_coeffs) {
            write_out(common, run_coeffs(alpha, count, common.format));
        } else if (*c_apply) {
            write_out(common, run_apply(alpha, order, M, poly, common.format));
        } else if (*c_conv) {
            if (alphas.empty())
                alphas = {1.1, 1.3, 1.5, 1.7, 1.9};
            if (Ms.empty())
                Ms = default_Ms(example, scheme);
            const Table t = example == 1 ? example1_sweep(scheme, alphas, hs_from_Ms(Ms), 0, common.parallel)
                                         : example2_sweep(alphas, hs_from_Ms(Ms), common.parallel);
            write_out(common, emit(t, fmt));
        } else if (*c_solve) {
            const RieszOrder o(alpha);
            TelegraphProblem p = parse_problem(problem, o, nu, kappa_sq, profile);
            p.T = T;
            SolveOptions opts;
            opts.first_level = first_level == "exact" ? FirstLevel::exact : FirstLevel::bootstrap;
            const Solution s = solve(p, M, N, opts);
            if (!s.stability.satisfied)
                std::cerr << "warning: stability condition not satisfied (margin " << s.stability.margin << ")\n";
            json j{{"problem", p.name}, {"l", p.l},           {"L", p.L},
                   {"T", p.T},          {"M", M},             {"N", N},
                   {"alpha", alpha},    {"nu", p.nu},         {"kappa_sq", p.kappa_sq},
                   {"first_level", first_level},              {"values", s.values},
                   {"stability", stability_json(s.stability)}};
            if (p.exact)
                j["max_error"] = max_error(s, p.exact);
            write_out(common, j.dump(common.format == "pretty" ? 2 : -1) + "\n");
        } else if (*c_tconv) {
            if (alphas.empty())
                alphas = {1.2, 1.4, 1.6, 1.8};
            if (Ms.empty())
                Ms = {4, 8, 16, 32, 64, 128};
            const Example3Variant v =
                variant == "given-source" ? Example3Variant::given_source : Example3Variant::exp_t_exact_start;
            write_out(common, emit(example3_sweep(alphas, Ms, v, common.parallel), fmt));
        } else if (*c_props) {
            const auto res = property_suite();
            bool all = true;
            std::ostringstream os;
            if (fmt == Format::json) {
                json j = json::array();
                for (const auto& r : res)
                    j.push_back({{"name", r.name}, {"tolerance", r.tolerance}, {"pass", r.pass}, {"detail", r.detail}});
                os << j.dump(2) << "\n";
            } else {
                for (const auto& r : res)
                    os << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.tolerance << "] " << r.detail << "\n";
            }
            for (const auto& r : res)
                all = all && r.pass;
            write_out(common, os.str());
            return all ? kExitOk : kExitFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
