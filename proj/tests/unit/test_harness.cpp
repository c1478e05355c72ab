#include <catch_amalgamated.hpp>

#include <cmath>

#include "riesz/harness.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace riesz;

TEST_CASE("ECO log ratio", "[harness]") {
    CHECK_THAT(eco(16.0, 1.0, 0.1, 0.05), WithinRel(4.0, 1e-14));
    Table t = {{1.5, 0.1, {}, 3.0, {}}, {1.5, 0.05, {}, 0.2, {}}, {1.7, 0.1, {}, 2.0, {}}};
    fill_eco(t);
    CHECK_FALSE(t[0].eco);
    REQUIRE(t[1].eco);
    CHECK_FALSE(t[2].eco);
    Table s = t;
    for (auto& r : s)
        r.E *= 37.5;
    fill_eco(s);
    CHECK_THAT(*s[1].eco, WithinAbs(*t[1].eco, 1e-13));
}

TEST_CASE("midpoint grids", "[harness]") {
    CHECK(cells_for_midpoint(1.0 / 20) == 20);
    CHECK(cells_for_midpoint(0.025) == 40);
    CHECK_THROWS_AS(cells_for_midpoint(1.0 / 21), grid_error);
    CHECK_THROWS_AS(cells_for_midpoint(0.3), grid_error);
}

TEST_CASE("emitters", "[harness]") {
    CHECK(emit({}, Format::csv) == "alpha,h,tau,E,ECO\n");
    const Table one = {{1.5, 0.05, {}, 5.712995e-06, {}}};
    CHECK(emit(one, Format::csv) == "alpha,h,tau,E,ECO\n1.5,0.05,,5.712995e-06,\n");

    const Table t = example1_sweep(4, {1.3, 1.5}, {1.0 / 20, 1.0 / 40, 1.0 / 80});
    const std::string csv = emit(t, Format::csv);
    CHECK(emit(parse_csv(csv), Format::csv) == csv);

    const Table back = parse_json(emit(t, Format::json));
    REQUIRE(back.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(back[i].alpha == t[i].alpha);
        CHECK(back[i].h == t[i].h);
        CHECK(back[i].E == t[i].E);
        CHECK(back[i].eco == t[i].eco);
        CHECK(back[i].tau == t[i].tau);
    }
    const std::string pretty = emit(t, Format::pretty);
    CHECK(pretty.find("h=1/40") != std::string::npos);
    CHECK(pretty.find("---") != std::string::npos);
    CHECK_THROWS(parse_format("xml"));
    CHECK_THROWS(parse_csv("a,b\n"));
}

TEST_CASE("sweeps are deterministic regardless of worker count", "[harness]") {
    const Table a = example1_sweep(6, {1.1, 1.9}, {1.0 / 20, 1.0 / 24, 1.0 / 28}, 0, 1);
    const Table b = example1_sweep(6, {1.1, 1.9}, {1.0 / 20, 1.0 / 24, 1.0 / 28}, 0, 4);
    CHECK(emit(a, Format::csv) == emit(b, Format::csv));
    const Table c = example3_sweep({1.4}, {4, 8}, Example3Variant::given_source, 2);
    REQUIRE(c.size() == 2);
    REQUIRE(c[1].tau);
    CHECK(*c[1].tau == 0.125);
}

TEST_CASE("order reduction for x(1-x)", "[harness]") {
    const Table t = example2_sweep({1.5}, {1.0 / 40, 1.0 / 80, 1.0 / 160, 1.0 / 320});
    CHECK_THAT(*t.back().eco, WithinAbs(2.0, 0.02));
}

TEST_CASE("property suite passes and detects an injected fault", "[harness][property]") {
    const auto res = property_suite();
    for (const auto& r : res) {
        INFO(r.name << " [" << r.tolerance << "] " << r.detail);
        CHECK(r.pass);
    }
    PropertyOptions bad;
    bad.g1_perturbation = 1e-6;
    bool identity_failed = false;
    for (const auto& r : property_suite(bad))
        if (r.name == "coeffs.sum_identity")
            identity_failed = !r.pass;
    CHECK(identity_failed);
}
