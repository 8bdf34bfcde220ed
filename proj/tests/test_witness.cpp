#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "learnlab/detprobe.hpp"
#include "learnlab/fdcheck.hpp"
#include "learnlab/rng.hpp"
#include "learnlab/witness.hpp"

using namespace learnlab;

TEST_CASE("point search at n=1 reduces to the scalar probe bitwise") {
    Activation ta(ActKind::Tanh);
    const uint64_t seed = 321;
    Dims dims{2, 1, 4};
    PointSearchResult pts = find_nondegenerate_points(ta, dims, seed);
    DetProbeReport probe = probe_nonvanishing(ta, 4, seed);
    REQUIRE(pts.success);
    REQUIRE(probe.success);
    CHECK(pts.attempts_used == probe.success_attempt);
    const DetAttempt& hit = probe.attempts.back();
    for (size_t i = 0; i < 4; ++i) {
        CHECK(pts.rho[i][0] == hit.a[i]);
        CHECK(pts.gamma[i][0] == hit.b[i]);
    }
    CHECK(pts.det == hit.det);
    CHECK(pts.scaled_det == hit.scaled);
}

TEST_CASE("point search respects the attempt budget") {
    Activation lo(ActKind::Logistic);
    Dims dims{2, 2, 12};
    PointSearchResult pts = find_nondegenerate_points(lo, dims, 1, 3);
    CHECK_FALSE(pts.success);
    CHECK(pts.attempts_used == 3);

    PointSearchResult easy = find_nondegenerate_points(lo, Dims{2, 2, 1}, 1);
    CHECK(easy.success);
    CHECK(easy.attempts_used == 1);
}

TEST_CASE("tangent family is the scaled inner-product matrix") {
    Dims dims{2, 2, 5};
    Activation lo(ActKind::Logistic), ta(ActKind::Tanh);
    PointSearchResult pts = find_nondegenerate_points(ta, dims, 77);
    REQUIRE(pts.success);

    Mat fam = tangent_family(lo, ta, dims, pts.rho, pts.gamma);
    double det_fam = det_lu(fam);
    double expect = std::pow(lo.deriv(0.0), 5) * pts.det;
    CHECK(std::fabs(det_fam - expect) <= 1e-10 * std::max(1.0, std::fabs(expect)));

    // f'(0) = 1/4 is a power of two, so the scaling is exact.
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK(fam(i, j) == 0.25 * ta.value(dot(pts.rho[i], pts.gamma[j])));

    for (size_t i = 0; i < 5; ++i) {
        std::vector<double> row = beta_tangent(dims, lo, ta, pts.rho[i], pts.gamma);
        FdCheckReport rep = check_beta_tangent(dims, lo, ta, pts.rho[i], pts.gamma);
        CHECK(rep.pass());
        for (size_t j = 0; j < 5; ++j) CHECK(fam(i, j) == row[j]);
    }
}

TEST_CASE("verdict logic") {
    CHECK(witness_verdict(12, 12, 9) == "contradiction-witnessed");
    CHECK(witness_verdict(11, 12, 9) == "rank-deficient-family");
    CHECK(witness_verdict(5, 5, 9) == "no-contradiction-at-this-size");
    CHECK(witness_verdict(3, 5, 9) == "no-contradiction-at-this-size");
    CHECK(witness_verdict(1, 1, 9) == "no-contradiction-at-this-size");

    std::vector<double> sig_full{4.0, 2.0, 1.0};
    CHECK(witness_verdict(numerical_rank(sig_full, 3), 3, 2) == "contradiction-witnessed");
    std::vector<double> sig_def{4.0, 2.0, 4.0 * 1e-13};
    CHECK(witness_verdict(numerical_rank(sig_def, 3), 3, 2) == "rank-deficient-family");
}

TEST_CASE("rank-deficient constructions are reported at their true rank") {
    Dims dims{2, 2, 5};
    Activation ta(ActKind::Tanh);
    PointSearchResult pts = find_nondegenerate_points(ta, dims, 88);
    REQUIRE(pts.success);
    auto rho = pts.rho;
    rho[3] = rho[0];
    WitnessReport rep = witness_from_points(ta, ta, dims, rho, pts.gamma);
    CHECK(rep.tangent_rank == 4);
    CHECK(rep.verdict == "no-contradiction-at-this-size");

    auto rho2 = pts.rho;
    rho2[3] = rho2[0];
    rho2[4] = rho2[1];
    WitnessReport rep2 = witness_from_points(ta, ta, dims, rho2, pts.gamma);
    CHECK(rep2.tangent_rank == 3);
}

TEST_CASE("witness at the contradiction size") {
    Dims dims{2, 2, 12};
    Activation ta(ActKind::Tanh);
    WitnessReport rep = unfeasibility_witness(ta, ta, dims, 7);
    REQUIRE(rep.search_success);
    CHECK(rep.q == 9);
    CHECK(rep.tangent_rank == 12);
    CHECK(rep.verdict == "contradiction-witnessed");
    CHECK(rep.sigma.size() == 12);
    CHECK(rep.scaled_det > 1e-12);
    CHECK(rep.seed == 7);
    CHECK(rep.narrative.find("m(n+2)+1") != std::string::npos);
    CHECK(rep.footer.find("m(n+2)+1") != std::string::npos);
    CHECK(rep.footer.find("m(m+2)+1") != std::string::npos);
}

TEST_CASE("witness below the contradiction size") {
    Dims dims{2, 2, 1};
    Activation ta(ActKind::Tanh);
    WitnessReport rep = unfeasibility_witness(ta, ta, dims, 5);
    REQUIRE(rep.search_success);
    CHECK(rep.verdict == "no-contradiction-at-this-size");
    CHECK(rep.tangent_rank == 1);
}

TEST_CASE("search failure produces a failure report, not a throw") {
    Dims dims{2, 2, 3};
    Activation ta(ActKind::Tanh);
    WitnessReport rep = unfeasibility_witness(ta, ta, dims, 5, 4, 2.0);
    CHECK_FALSE(rep.search_success);
    CHECK(rep.verdict == "search-failed");
    CHECK(rep.search_attempts == 4);
    CHECK(rep.sigma.empty());
}

TEST_CASE("scaling every rho by a common factor preserves the rank verdict") {
    Dims dims{2, 2, 12};
    Activation ta(ActKind::Tanh);
    PointSearchResult pts = find_nondegenerate_points(ta, dims, 7);
    REQUIRE(pts.success);
    WitnessReport base = witness_from_points(ta, ta, dims, pts.rho, pts.gamma);

    auto scaled = pts.rho;
    for (auto& r : scaled)
        for (double& x : r) x *= 0.5;
    WitnessReport rep = witness_from_points(ta, ta, dims, scaled, pts.gamma);
    CHECK(rep.tangent_rank == base.tangent_rank);
    CHECK(rep.verdict == base.verdict);
    CHECK(rep.sigma[0] != base.sigma[0]);
}

TEST_CASE("ten-seed sweep at the contradiction size") {
    Dims dims{2, 2, 12};
    for (ActKind kind : {ActKind::Tanh, ActKind::Logistic}) {
        Activation a(kind);
        int successes = 0;
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            WitnessReport rep = unfeasibility_witness(a, a, dims, seed);
            if (!rep.search_success) continue;
            ++successes;
            CHECK(rep.tangent_rank == 12);
            CHECK(rep.verdict == "contradiction-witnessed");
        }
        if (kind == ActKind::Tanh) CHECK(successes >= 1);
    }
}

TEST_CASE("perfect-map residual") {
    Dims dims{2, 2, 5};
    Activation ta(ActKind::Tanh), lo(ActKind::Logistic);
    Rng rng(91);
    auto gamma = sample_distinct_points(rng, 5, 2, -2.0, 2.0);
    ParamVec params0 = ParamVec::from_flat(dims, rng.uniform_vec(9, -1.0, 1.0));

    PiMap oracle = [&](const std::vector<double>&) { return params0; };
    CHECK(perfect_map_residual(ta, ta, dims, gamma, oracle, params0) == 0.0);

    PiMap to_zero = [&](const std::vector<double>&) { return ParamVec::zeros(dims); };
    std::vector<double> th = theta(dims, lo, lo, gamma, params0);
    double expect = 0.0;
    for (double o : th) expect += (o - 0.5) * (o - 0.5);
    expect = std::sqrt(expect);
    CHECK(perfect_map_residual(lo, lo, dims, gamma, to_zero, params0) ==
          doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("differentiability probe separates smooth from kinked maps") {
    Dims dims{2, 2, 6};
    Activation lo(ActKind::Logistic);
    Rng rng(92);
    auto gamma = sample_distinct_points(rng, 6, 2, -2.0, 2.0);
    const size_t p = 6, q = 9;

    std::vector<double> amat(q * p);
    for (size_t i = 0; i < amat.size(); ++i) amat[i] = 0.3 + 0.07 * static_cast<double>(i % 11);
    double f0 = lo.value(0.0);

    PiMap linear = [&](const std::vector<double>& zeta) {
        std::vector<double> flat(q, 0.0);
        for (size_t j = 0; j < q; ++j)
            for (size_t i = 0; i < p; ++i) flat[j] += amat[j * p + i] * zeta[i];
        return ParamVec::from_flat(dims, flat);
    };
    PiProbeReport smooth = pi_point_differentiability_probe(linear, lo, dims, gamma);
    CHECK(smooth.worst_deviation < 1e-10);
    CHECK(smooth.directions.size() == 5);
    CHECK(smooth.zeta_star == std::vector<double>(p, f0));
    CHECK(smooth.steps == std::vector<double>{1e-2, 1e-3, 1e-4});

    PiMap kinked = [&](const std::vector<double>& zeta) {
        std::vector<double> flat(q, 0.0);
        for (size_t j = 0; j < q; ++j) flat[j] = std::fabs(zeta[j % p] - f0);
        return ParamVec::from_flat(dims, flat);
    };
    PiProbeReport rough = pi_point_differentiability_probe(kinked, lo, dims, gamma);
    CHECK(rough.worst_deviation > 0.5);
    for (const DirectionProbe& d : rough.directions) CHECK(d.max_rel_deviation > 0.5);
}
