#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "learnlab/detprobe.hpp"
#include "learnlab/rng.hpp"

using namespace learnlab;

TEST_CASE("determinant of the sampled-node matrix") {
    Activation lo(ActKind::Logistic), si(ActKind::Sin);

    std::vector<double> z{0.0};
    CHECK(det_g_matrix(lo, z, z) == 0.5);

    std::vector<double> pm{1.0, -1.0};
    CHECK(det_g_matrix(lo, pm, pm) ==
          doctest::Approx(0.46211715726000974).epsilon(1e-14));

    std::vector<double> ab{1.0, 2.0};
    double expect = std::sin(1.0) * std::sin(4.0) - std::sin(2.0) * std::sin(2.0);
    CHECK(det_g_matrix(si, ab, ab) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(expect == doctest::Approx(-1.46366).epsilon(1e-5));

    std::vector<double> rep{0.8, 0.8};
    CHECK(std::fabs(det_g_matrix(lo, rep, ab)) < 1e-14);
}

TEST_CASE("sampled-node matrix validation") {
    Activation lo(ActKind::Logistic);
    std::vector<double> a{1.0, 2.0}, b{1.0};
    CHECK_THROWS_AS(g_matrix(lo, a, b), std::invalid_argument);
    std::vector<double> nan_a{std::nan(""), 2.0}, b2{1.0, 2.0};
    CHECK_THROWS_AS(det_g_matrix(lo, nan_a, b2), std::invalid_argument);
}

TEST_CASE("first-column cofactors at p=2 and reconstruction everywhere") {
    Activation ta(ActKind::Tanh);
    std::vector<double> a{0.9, -1.3}, b{0.4, 1.7};
    std::vector<double> m = cofactors_first_column(ta, a, b);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == ta.value(a[1] * b[1]));
    CHECK(m[1] == -ta.value(a[0] * b[1]));

    Rng rng(31);
    for (ActKind kind : {ActKind::Logistic, ActKind::Tanh, ActKind::Sin}) {
        Activation g(kind);
        for (int trial = 0; trial < 20; ++trial) {
            size_t p = 2 + trial % 4;
            std::vector<double> na = sample_distinct_scalars(rng, p, -2.0, 2.0);
            std::vector<double> nb = sample_distinct_scalars(rng, p, -2.0, 2.0);
            std::vector<double> cof = cofactors_first_column(g, na, nb);
            double det = det_g_matrix(g, na, nb);
            double recon = 0.0;
            for (size_t i = 0; i < p; ++i) recon += g.value(na[i] * nb[0]) * cof[i];
            CHECK(std::fabs(det - recon) / (std::fabs(det) + 1.0) < 1e-12);
        }
    }
    std::vector<double> one{1.0};
    CHECK_THROWS_AS(cofactors_first_column(ta, one, one), std::invalid_argument);
}

TEST_CASE("cofactors never involve the first b node") {
    Activation lo(ActKind::Logistic);
    std::vector<double> a{0.3, -0.9, 1.4}, b{0.2, 0.8, -1.1};
    std::vector<double> m1 = cofactors_first_column(lo, a, b);
    b[0] = -1.9;
    std::vector<double> m2 = cofactors_first_column(lo, a, b);
    for (size_t i = 0; i < 3; ++i) CHECK(m1[i] == m2[i]);
}

TEST_CASE("derivative identity residuals, exact-polynomial side vs stencils") {
    Activation lo(ActKind::Logistic), ta(ActKind::Tanh);
    std::vector<double> pm{1.0, -1.0};
    CHECK(estrella_identity_check(lo, pm, pm, 1) < 1e-6);

    Rng rng(32);
    for (ActKind kind : {ActKind::Logistic, ActKind::Tanh}) {
        Activation g(kind);
        for (int trial = 0; trial < 20; ++trial) {
            size_t p = 2 + trial % 2;
            std::vector<double> na = sample_distinct_scalars(rng, p, -2.0, 2.0);
            std::vector<double> nb = sample_distinct_scalars(rng, p, -2.0, 2.0);
            CHECK(estrella_identity_check(g, na, nb, 1) < 1e-6);
            CHECK(estrella_identity_check(g, na, nb, 2) < 1e-4);
        }
    }
}

TEST_CASE("derivative identity rejects unsupported requests") {
    Activation ta(ActKind::Tanh), si(ActKind::Sin);
    std::vector<double> ab{1.0, 2.0};
    CHECK_THROWS_AS(estrella_identity_check(ta, ab, ab, 0), std::invalid_argument);
    CHECK_THROWS_AS(estrella_identity_check(ta, ab, ab, 3), std::invalid_argument);
    CHECK_THROWS_AS(estrella_identity_check(si, ab, ab, 1), std::invalid_argument);
    CHECK_THROWS_AS(sin_derivative_identity_check(ab, ab, 1), std::invalid_argument);
    std::vector<double> one{1.0};
    CHECK_THROWS_AS(estrella_identity_check(ta, one, one, 1), std::invalid_argument);
}

TEST_CASE("sine derivative identity at the origin column") {
    std::vector<double> a{1.0, 2.0}, b{0.0, 1.0};
    CHECK(sin_derivative_identity_check(a, b, 0) < 1e-6);

    Activation si(ActKind::Sin);
    std::vector<double> cof = cofactors_first_column(si, a, b);
    CHECK(cof[0] == std::sin(2.0));
    CHECK(cof[1] == -std::sin(1.0));
    double rhs = a[0] * cof[0] + a[1] * cof[1];
    CHECK(rhs == doctest::Approx(-0.7736).epsilon(1e-4));

    CHECK(std::fabs(det_g_matrix(si, a, b)) == 0.0);

    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        size_t p = 2 + trial % 2;
        std::vector<double> na = sample_distinct_scalars(rng, p, -2.0, 2.0);
        std::vector<double> nb = sample_distinct_scalars(rng, p, -2.0, 2.0);
        CHECK(sin_derivative_identity_check(na, nb, 0) < 1e-6);
    }
}

TEST_CASE("repeated nodes collapse the scaled determinant") {
    Rng rng(34);
    for (ActKind kind : {ActKind::Logistic, ActKind::Tanh, ActKind::Sin}) {
        Activation g(kind);
        std::vector<double> a = sample_distinct_scalars(rng, 4, -2.0, 2.0);
        std::vector<double> b = sample_distinct_scalars(rng, 4, -2.0, 2.0);
        a[2] = a[0];
        CHECK(hadamard_scaled_det(g_matrix(g, a, b)) < 1e-13);
    }
}

TEST_CASE("nonvanishing probe succeeds at moderate size") {
    Activation ta(ActKind::Tanh);
    DetProbeReport rep = probe_nonvanishing(ta, 4, 1234);
    CHECK(rep.success);
    CHECK(rep.success_attempt >= 1);
    CHECK(rep.success_attempt <= 100);
    CHECK(rep.attempts.size() == static_cast<size_t>(rep.success_attempt));
    const DetAttempt& hit = rep.attempts.back();
    CHECK(hit.pass);
    CHECK(hit.scaled > 1e-12);
    CHECK(hit.scaled <= 1.0);
    CHECK(rep.identity_residuals.size() == 2);
    for (const auto& ir : rep.identity_residuals) CHECK(ir.residual < 1e-4);

    DetProbeReport rep1 = probe_nonvanishing(Activation(ActKind::Sin), 1, 9);
    CHECK(rep1.success);
    CHECK(rep1.identity_residuals.empty());

    DetProbeReport sin3 = probe_nonvanishing(Activation(ActKind::Sin), 3, 77);
    CHECK(sin3.success);
    REQUIRE(sin3.identity_residuals.size() == 1);
    CHECK(sin3.identity_residuals[0].name == "sin_k0");
    CHECK(sin3.identity_residuals[0].residual < 1e-6);
}

TEST_CASE("probe reports failure without throwing when the budget is too small") {
    Activation lo(ActKind::Logistic);
    DetProbeReport rep = probe_nonvanishing(lo, 6, 42, 5);
    CHECK_FALSE(rep.success);
    CHECK(rep.success_attempt == -1);
    CHECK(rep.attempts.size() == 5);
    CHECK(rep.identity_residuals.empty());

    CHECK_THROWS_AS(probe_nonvanishing(lo, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(probe_nonvanishing(lo, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("probe is deterministic in the seed") {
    Activation ta(ActKind::Tanh);
    DetProbeReport r1 = probe_nonvanishing(ta, 3, 555);
    DetProbeReport r2 = probe_nonvanishing(ta, 3, 555);
    REQUIRE(r1.attempts.size() == r2.attempts.size());
    for (size_t i = 0; i < r1.attempts.size(); ++i) {
        CHECK(r1.attempts[i].a == r2.attempts[i].a);
        CHECK(r1.attempts[i].b == r2.attempts[i].b);
        CHECK(r1.attempts[i].det == r2.attempts[i].det);
    }
}
