#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "learnlab/activation.hpp"
#include "learnlab/fdcheck.hpp"
#include "learnlab/rng.hpp"

using namespace learnlab;

TEST_CASE("scalar values at fixed points") {
    Activation lo(ActKind::Logistic), ta(ActKind::Tanh), si(ActKind::Sin);
    CHECK(lo.value(0.0) == 0.5);
    CHECK(ta.value(0.0) == 0.0);
    CHECK(si.value(0.0) == 0.0);
    CHECK(lo.value(1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
    CHECK(ta.value(1.0) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
}

TEST_CASE("derivatives at zero are nonzero") {
    CHECK(Activation(ActKind::Logistic).deriv(0.0) == 0.25);
    CHECK(Activation(ActKind::Tanh).deriv(0.0) == 1.0);
    CHECK(Activation(ActKind::Sin).deriv(0.0) == 1.0);
}

TEST_CASE("logistic stable branch survives extreme arguments") {
    Activation lo(ActKind::Logistic);
    CHECK(lo.value(750.0) == 1.0);
    CHECK(lo.value(-750.0) >= 0.0);
    CHECK(std::isfinite(lo.value(-750.0)));
    CHECK(std::isfinite(lo.deriv(-750.0)));
}

TEST_CASE("name round trip and rejection") {
    for (const char* name : {"logistic", "tanh", "sin"})
        CHECK(std::string(Activation::from_name(name).name()) == name);
    CHECK_THROWS_AS(Activation::from_name("relu"), std::invalid_argument);
    CHECK_THROWS_AS(Activation::from_name(""), std::invalid_argument);
}

TEST_CASE("algebro-differential data") {
    auto lo = algdiff_data(ActKind::Logistic);
    REQUIRE(lo.has_value());
    CHECK(lo->G.coeffs() == std::vector<Rat>{rat(0), rat(1), rat(-1)});
    CHECK(lo->g0 == rat(1, 2));
    CHECK(lo->G.eval(lo->g0) == rat(1, 4));
    CHECK(lo->G.degree() >= 1);

    auto ta = algdiff_data(ActKind::Tanh);
    REQUIRE(ta.has_value());
    CHECK(ta->G.coeffs() == std::vector<Rat>{rat(1), rat(0), rat(-1)});
    CHECK(ta->g0 == rat(0));
    CHECK(ta->G.eval(ta->g0) == rat(1));

    CHECK_FALSE(algdiff_data(ActKind::Sin).has_value());
    CHECK_FALSE(Activation(ActKind::Sin).algdiff().has_value());
}

TEST_CASE("derivative consistent with finite differences on [-5,5]") {
    Rng rng(41);
    for (ActKind kind : {ActKind::Logistic, ActKind::Tanh, ActKind::Sin}) {
        Activation a(kind);
        for (int i = 0; i < 100; ++i) {
            double u = rng.uniform(-5.0, 5.0);
            double h = 1e-5;
            double fd = (a.value(u + h) - a.value(u - h)) / (2.0 * h);
            CHECK_MESSAGE(close_enough(fd, a.deriv(u)), a.name(), " at u=", u);
        }
    }
}

TEST_CASE("g' = G(g) numerically on [-5,5]") {
    Rng rng(42);
    for (ActKind kind : {ActKind::Logistic, ActKind::Tanh}) {
        Activation a(kind);
        auto data = algdiff_data(kind);
        REQUIRE(data.has_value());
        for (int i = 0; i < 100; ++i) {
            double u = rng.uniform(-5.0, 5.0);
            double lhs = a.deriv(u);
            double rhs = data->G.eval_double(a.value(u));
            CHECK(std::fabs(lhs - rhs) < 1e-12);
        }
    }
}
