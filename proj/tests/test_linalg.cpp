#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "learnlab/linalg.hpp"
#include "learnlab/rng.hpp"

using namespace learnlab;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    size_t r = rows.size(), c = rows.begin()->size();
    Mat m(r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

Mat random_mat(Rng& rng, size_t n) {
    Mat m(n, n);
    for (double& x : m.data()) x = rng.uniform(-2.0, 2.0);
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(det_lu(from_rows({{1.0}})) == 1.0);
    CHECK(det_lu(from_rows({{1, 0}, {0, 1}})) == 1.0);
    CHECK(det_lu(from_rows({{0, 1}, {1, 0}})) == -1.0);
    CHECK(det_lu(from_rows({{2, 1}, {1, 2}})) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(det_lu(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) ==
          doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(det_lu(from_rows({{1, 2}, {1, 2}})) == 0.0);
}

TEST_CASE("determinant input validation") {
    CHECK_THROWS_AS(det_lu(Mat(2, 3)), std::invalid_argument);
    Mat bad(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(det_lu(bad), std::invalid_argument);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(det_lu(bad), std::invalid_argument);
}

TEST_CASE("singular values of diagonal and known matrices") {
    auto s = singular_values(from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s[2] == doctest::Approx(1.0).epsilon(1e-14));

    // A^T A = [[25, 20], [20, 25]], eigenvalues 45 and 5.
    auto s2 = singular_values(from_rows({{3, 0}, {4, 5}}));
    CHECK(s2[0] == doctest::Approx(std::sqrt(45.0)).epsilon(1e-13));
    CHECK(s2[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("singular value product equals |det| on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + trial % 5;
        Mat m = random_mat(rng, n);
        auto s = singular_values(m);
        double prod = 1.0;
        for (double x : s) prod *= x;
        double d = std::fabs(det_lu(m));
        CHECK(std::fabs(prod - d) <= 1e-10 * std::max(1.0, d));
        for (size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] >= s[i]);
    }
}

TEST_CASE("numerical rank thresholds") {
    CHECK(numerical_rank({}, 4) == 0);
    CHECK(numerical_rank({0.0, 0.0}, 2) == 0);
    CHECK(numerical_rank({1.0, 1e-3}, 2) == 2);
    CHECK(numerical_rank({1.0, 1.9e-12}, 2) == 1);
    CHECK(numerical_rank({1.0, 2.1e-12}, 2) == 2);
    CHECK(numerical_rank({5.0, 5.0, 5.0 * 1e-12}, 3) == 2);
}

TEST_CASE("rank of constructed deficient matrix") {
    Rng rng(9);
    Mat m = random_mat(rng, 4);
    for (size_t j = 0; j < 4; ++j) m(3, j) = m(0, j) + m(1, j);
    auto s = singular_values(m);
    CHECK(numerical_rank(s, 4) == 3);
}

TEST_CASE("hadamard scaled determinant") {
    CHECK(hadamard_scaled_det(from_rows({{3, 4}, {0, 5}})) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(hadamard_scaled_det(from_rows({{1, 0}, {0, 1}})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hadamard_scaled_det(from_rows({{0, 0}, {1, 2}})) == 0.0);

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Mat m = random_mat(rng, 2 + trial % 4);
        double h = hadamard_scaled_det(m);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0 + 1e-12);
    }
}
