#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "riesz/specfun.hpp"

using Catch::Matchers::WithinRel;



// reference values from a 40-digit evaluator
TEST_CASE("gamma matches high-precision references", "[specfun]") {
    CHECK(riesz::gamma(5.0) == 24.0);
    CHECK_THAT(riesz::gamma(0.5), WithinRel(std::sqrt(std::numbers::pi), 1e-13));
    CHECK_THAT(riesz::gamma(-0.25), WithinRel(-4.9016668098607105805, 1e-13));
    CHECK_THAT(riesz::gamma(7.5), WithinRel(1871.2543057977883465, 1e-13));
    CHECK_THAT(riesz::gamma(0.1), WithinRel(9.5135076986687312858, 1e-13));
    CHECK_THAT(riesz::gamma(0.7), WithinRel(1.298055332647557856, 1e-13));
    CHECK_THAT(riesz::gamma(2.5), WithinRel(1.3293403881791370205, 1e-13));
    CHECK_THAT(riesz::gamma(10.3), WithinRel(716430.68906237640663, 1e-13));
    CHECK_THAT(riesz::gamma(29.7), WithinRel(3.2081203700604302286e30, 1e-13));
    CHECK_THAT(riesz::gamma(-1.5), WithinRel(2.3632718012073547031, 1e-13));
    CHECK_THAT(riesz::gamma(-3.3), WithinRel(0.43851739219876308924, 1e-13));
    CHECK_THAT(riesz::gamma(-4.9), WithinRel(-0.10038894232200389411, 1e-13));
}

TEST_CASE("gamma agrees with the C library on a dense sweep", "[specfun]") {
    double worst = 0.0;
    for (double x = -29.95; x <= 30.0; x += 0.0137) {
        if (std::abs(x - std::round(x)) < 1e-9 && x <= 0.0)
            continue;
        worst = std::max(worst, std::abs(riesz::gamma(x) / std::tgamma(x) - 1.0));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("gamma poles and overflow", "[specfun]") {
    CHECK_THROWS_AS(riesz::gamma(0.0), riesz::pole_error);
    CHECK_THROWS_AS(riesz::gamma(-1.0), riesz::pole_error);
    CHECK_THROWS_AS(riesz::gamma(-7.0), riesz::pole_error);
    CHECK_THROWS_AS(riesz::gamma(172.0), riesz::overflow_error);
    CHECK_THROWS_AS(riesz::gamma(200.5), riesz::overflow_error);
    CHECK(std::isfinite(riesz::gamma(171.5)));
}

TEST_CASE("ln_gamma values and domain", "[specfun]") {
    CHECK(riesz::ln_gamma(1.0) == 0.0);
    CHECK(riesz::ln_gamma(2.0) == 0.0);
    CHECK_THAT(riesz::ln_gamma(13.0), WithinRel(std::log(479001600.0), 1e-15));
    CHECK_THAT(riesz::ln_gamma(7.5), WithinRel(7.5343642367587329552, 1e-13));
    CHECK_THAT(std::exp(riesz::ln_gamma(7.5)), WithinRel(riesz::gamma(7.5), 1e-12));
    CHECK_THAT(riesz::ln_gamma(0.3), WithinRel(1.0957979948180755606, 1e-13));
    CHECK_THAT(riesz::ln_gamma(3.7), WithinRel(1.4280723266653881292, 1e-13));
    CHECK_THAT(riesz::ln_gamma(55.5), WithinRel(166.32150615984036914, 1e-13));
    CHECK_THAT(riesz::ln_gamma(120.25), WithinRel(454.22098738335819968, 1e-13));
    CHECK_THAT(riesz::ln_gamma(199.9), WithinRel(857.40411336432824381, 1e-13));
    CHECK_THROWS_AS(riesz::ln_gamma(0.0), riesz::domain_error);
    CHECK_THROWS_AS(riesz::ln_gamma(-2.5), riesz::domain_error);
}

TEST_CASE("gamma recurrence, reflection and log consistency", "[specfun][property]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u1(0.1, 20.0), u2(-5.0, 0.0), u3(0.1, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u1(rng);
        CHECK(std::abs(riesz::gamma(x + 1.0) - x * riesz::gamma(x)) <= 1e-12 * std::abs(riesz::gamma(x + 1.0)));
        const double y = u2(rng);
        CHECK_THAT(riesz::gamma(y) * riesz::gamma(1.0 - y) * std::sin(std::numbers::pi * y) / std::numbers::pi,
                   WithinRel(1.0, 1e-11));
        const double z = u3(rng);
        CHECK_THAT(std::exp(riesz::ln_gamma(z)), WithinRel(riesz::gamma(z), 1e-12));
    }
}
