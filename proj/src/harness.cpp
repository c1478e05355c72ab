#include "riesz/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "riesz/errors.hpp"
#include "riesz/riesz_ops.hpp"

namespace riesz {

double eco(double E1, double E2, double h1, double h2) { return std::log(E1 / E2) / std::log(h1 / h2); }

void fill_eco(Table& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i].eco.reset();
        if (i > 0 && t[i - 1].alpha == t[i].alpha)
            t[i].eco = eco(t[i - 1].E, t[i].E, t[i - 1].h, t[i].h);
    }
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    const std::size_t w = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, workers)));
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < w; ++k)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        err = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

int cells_for_midpoint(double h) {
    if (!(h > 0.0))
        throw grid_error("h must be positive");
    const double inv = 1.0 / h;
    const long M = std::lround(inv);
    if (std::abs(inv - static_cast<double>(M)) > 1e-9 * inv || M % 2 != 0)
        throw grid_error("x = 1/2 is not a node for h = " + std::to_string(h));
    return static_cast<int>(M);
}

double example1_point_error(int scheme_order, double alpha, int M, int m) {
    if (M % 2 != 0)
        throw grid_error("M must be even so that x = 1/2 is a node");
    const RieszOrder order(alpha);
    const Grid1D g(0.0, 1.0, M);
    const GridFn u = GridFn::sample(g, [m](double x) { return std::pow(x * (1.0 - x), m); });
    const RieszApproximation w = riesz_derivative(u, order, scheme_order);
    const double approx = w.w[static_cast<std::size_t>(M / 2 - 1)];
    return std::abs(approx - exact_riesz_symmetric_poly(m, order, 0.5));
}

namespace {

Table spatial_sweep(int scheme_order, const std::vector<double>& alphas, const std::vector<double>& hs,
                    int m, int parallel) {
    std::vector<int> Ms;
    for (double h : hs)
        Ms.push_back(cells_for_midpoint(h));
    Table t(alphas.size() * hs.size());
    parallel_for(t.size(), parallel, [&](std::size_t i) {
        const std::size_t a = i / hs.size();
        const std::size_t k = i % hs.size();
        t[i].alpha = alphas[a];
        t[i].h = hs[k];
        t[i].E = example1_point_error(scheme_order, alphas[a], Ms[k], m);
    });
    fill_eco(t);
    return t;
}

} // namespace

Table example1_sweep(int scheme_order, const std::vector<double>& alphas, const std::vector<double>& hs,
                     int poly_m, int parallel) {
    if (scheme_order < 4 || !supported_scheme_order(scheme_order))
        throw unsupported_order("example1 sweeps use scheme orders 4, 6, 8, 10");
    return spatial_sweep(scheme_order, alphas, hs, poly_m > 0 ? poly_m : scheme_order, parallel);
}

Table example2_sweep(const std::vector<double>& alphas, const std::vector<double>& hs, int parallel) {
    return spatial_sweep(4, alphas, hs, 1, parallel);
}

std::string to_string(Example3Variant v) {
    switch (v) {
    case Example3Variant::given_source:
        return "given-source";
    case Example3Variant::exp_t_exact_start:
        return "exp-t-exact-start";
    }
    return "?";
}

TelegraphProblem example3_variant_problem(const RieszOrder& order, Example3Variant v) {
    if (v == Example3Variant::given_source)
        return example3_problem(order);
    return manufactured_problem(order, 1.0, 1.0, 6, TimeProfile::exp_t());
}

SolveOptions example3_variant_options(Example3Variant v) {
    SolveOptions o;
    o.first_level = v == Example3Variant::given_source ? FirstLevel::bootstrap : FirstLevel::exact;
    return o;
}

Table example3_sweep(const std::vector<double>& alphas, const std::vector<int>& Ms, Example3Variant v,
                     int parallel) {
    Table t(alphas.size() * Ms.size());
    parallel_for(t.size(), parallel, [&](std::size_t i) {
        const std::size_t a = i / Ms.size();
        const int M = Ms[i % Ms.size()];
        const TelegraphProblem p = example3_variant_problem(RieszOrder(alphas[a]), v);
        const Solution s = solve(p, M, M, example3_variant_options(v));
        t[i].alpha = alphas[a];
        t[i].h = 1.0 / M;
        t[i].tau = p.T / M;
        t[i].E = max_error(s, p.exact);
    });
    fill_eco(t);
    return t;
}

Format parse_format(const std::string& s) {
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    if (s == "pretty")
        return Format::pretty;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string as_fraction(double h) {
    const double inv = 1.0 / h;
    const long r = std::lround(inv);
    if (r > 0 && std::abs(inv - static_cast<double>(r)) < 1e-9 * inv)
        return "1/" + std::to_string(r);
    return fmt("%.7g", h);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string emit(const Table& t, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::csv:
        os << "alpha,h,tau,E,ECO\n";
        for (const auto& r : t) {
            os << fmt("%.7g", r.alpha) << ',' << fmt("%.7g", r.h) << ',';
            if (r.tau)
                os << fmt("%.7g", *r.tau);
            os << ',' << fmt("%.6e", r.E) << ',';
            if (r.eco)
                os << fmt("%.7g", *r.eco);
            os << '\n';
        }
        break;
    case Format::json: {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : t) {
            nlohmann::json o;
            o["alpha"] = r.alpha;
            o["h"] = r.h;
            o["tau"] = r.tau ? nlohmann::json(*r.tau) : nlohmann::json(nullptr);
            o["E"] = r.E;
            o["ECO"] = r.eco ? nlohmann::json(*r.eco) : nlohmann::json(nullptr);
            j.push_back(o);
        }
        os << j.dump(2) << '\n';
        break;
    }
    case Format::pretty: {
        const bool timed = !t.empty() && t.front().tau.has_value();
        char line[160];
        std::snprintf(line, sizeof line, "%-6s  %-22s  %-14s  %s\n", "alpha", timed ? "h, tau" : "h",
                      timed ? "E(tau,h)" : "E(h)", "ECO");
        os << line;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& r = t[i];
            const bool first = i == 0 || t[i - 1].alpha != r.alpha;
            if (first && i > 0)
                os << '\n';
            std::string res = "h=" + as_fraction(r.h);
            if (r.tau)
                res += ",tau=" + as_fraction(*r.tau);
            std::snprintf(line, sizeof line, "%-6s  %-22s  %-14s  %s\n",
                          first ? fmt("%.7g", r.alpha).c_str() : "", res.c_str(), fmt("%.6e", r.E).c_str(),
                          r.eco ? fmt("%.4f", *r.eco).c_str() : "---");
            os << line;
        }
        break;
    }
    }
    return os.str();
}

Table parse_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != "alpha,h,tau,E,ECO")
        throw std::invalid_argument("CSV header must be alpha,h,tau,E,ECO");
    Table t;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != 5)
            throw std::invalid_argument("CSV row must have 5 fields: " + line);
        ConvergenceRow r;
        r.alpha = std::stod(f[0]);
        r.h = std::stod(f[1]);
        if (!f[2].empty())
            r.tau = std::stod(f[2]);
        r.E = std::stod(f[3]);
        if (!f[4].empty())
            r.eco = std::stod(f[4]);
        t.push_back(r);
    }
    return t;
}

Table parse_json(const std::string& json) {
    const auto j = nlohmann::json::parse(json);
    Table t;
    for (const auto& o : j) {
        ConvergenceRow r;
        r.alpha = o.at("alpha").get<double>();
        r.h = o.at("h").get<double>();
        if (!o.at("tau").is_null())
            r.tau = o.at("tau").get<double>();
        r.E = o.at("E").get<double>();
        if (!o.at("ECO").is_null())
            r.eco = o.at("ECO").get<double>();
        t.push_back(r);
    }
    return t;
}

double h_inner(const Vec& u, const Vec& v, double h) {
    if (u.size() != v.size())
        throw dimension_error("h_inner: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * v[i];
    return h * s;
}

} // namespace riesz
