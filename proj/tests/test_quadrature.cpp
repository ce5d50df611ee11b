#include <cmath>

#include "doctest.h"

#include "swanson/quadrature.hpp"

using namespace swanson;

TEST_CASE("gauss_hermite 5-point rule matches tabulated nodes and weights") {
    // reference values frozen from a 25-digit mpmath run
    auto rule = gauss_hermite<double>(5);
    REQUIRE(rule.nodes.size() == 5);
    CHECK(rule.nodes[0] == doctest::Approx(-2.020182870456085632929).epsilon(1e-13));
    CHECK(rule.nodes[1] == doctest::Approx(-0.9585724646138185071128).epsilon(1e-13));
    CHECK(std::abs(rule.nodes[2]) < 1e-14);
    CHECK(rule.nodes[4] == doctest::Approx(2.020182870456085632929).epsilon(1e-13));
    CHECK(rule.weights[0] == doctest::Approx(0.01995324205904591320774).epsilon(1e-12));
    CHECK(rule.weights[1] == doctest::Approx(0.3936193231522411598285).epsilon(1e-12));
    CHECK(rule.weights[2] == doctest::Approx(0.9453087204829418812257).epsilon(1e-12));
}

TEST_CASE("gauss_hermite is exact on polynomials below 2m") {
    auto rule = gauss_hermite<double>(12);
    // integral of x^(2k) e^{-x^2} = Gamma(k + 1/2)
    const double sp = std::sqrt(pi_v<double>());
    double want2 = sp / 2, want10 = sp * 945.0 / 32.0;
    double got2 = 0, got10 = 0, got_odd = 0;
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
        const double x = rule.nodes[q], w = rule.weights[q];
        got2 += w * x * x;
        got10 += w * std::pow(x, 10);
        got_odd += w * std::pow(x, 7);
    }
    CHECK(got2 == doctest::Approx(want2).epsilon(1e-14));
    CHECK(got10 == doctest::Approx(want10).epsilon(1e-13));
    CHECK(std::abs(got_odd) < 1e-12);
}

TEST_CASE("gauss_hermite nodes increase and weights are positive") {
    auto rule = gauss_hermite<double>(40);
    for (Eigen::Index q = 0; q + 1 < rule.nodes.size(); ++q)
        CHECK(rule.nodes[q] < rule.nodes[q + 1]);
    for (Eigen::Index q = 0; q < rule.weights.size(); ++q) CHECK(rule.weights[q] > 0);
    CHECK_THROWS_AS(gauss_hermite<double>(0), std::invalid_argument);
}

TEST_CASE("gauss_legendre integrates polynomials exactly on [a,b]") {
    auto rule = gauss_legendre<double>(8, 0.0, 2.0);
    double g1 = 0, g5 = 0, gc = 0;
    for (Eigen::Index q = 0; q < rule.nodes.size(); ++q) {
        const double x = rule.nodes[q], w = rule.weights[q];
        g1 += w;
        g5 += w * std::pow(x, 5);
        gc += w * std::cos(x);
    }
    CHECK(g1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g5 == doctest::Approx(64.0 / 6.0).epsilon(1e-14));
    CHECK(gc == doctest::Approx(std::sin(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(gauss_legendre<double>(4, 1.0, 1.0), std::invalid_argument);
}
