#include <cmath>

#include "doctest.h"

#include "swanson/params.hpp"

using namespace swanson;

// preset constants frozen from a 25-digit mpmath run

TEST_CASE("derive reproduces the reference constants (omega=0.5, lambda=0.1)") {
    ModelParams<double> p{0.5, 0.1, 0.3, 0.31};
    auto d = derive(p);
    CHECK(d.theta0 == doctest::Approx(0.2118244650968009034275269).epsilon(1e-14));
    CHECK(d.Omega == doctest::Approx(0.4582575694955840006588047).epsilon(1e-14));
    CHECK(d.gamma == doctest::Approx(-0.02087121525220799967059764).epsilon(1e-13));
    CHECK(d.ThetaPlus == doctest::Approx(0.8739351325046804264281705).epsilon(1e-14));
    CHECK(d.ThetaMinus == doctest::Approx(0.5721248424548514323140127).epsilon(1e-14));
    CHECK(d.gammaA == doctest::Approx(0.372913396133995216253362).epsilon(1e-14));
    CHECK(d.gammaB == doctest::Approx(0.3810044632496974283962616).epsilon(1e-14));
    CHECK(d.k == doctest::Approx(0.4313351365237939898845151).epsilon(1e-14));
    CHECK(d.Nphi == doctest::Approx(0.7244313522645851924551074).epsilon(1e-13));
    CHECK(d.Npsi == d.Nphi);

    ModelParams<double> pb{0.5, 0.1, 0.3, 0.35};
    auto db = derive(pb);
    CHECK(db.gammaA == doctest::Approx(0.3814498802430397311364031).epsilon(1e-14));
    CHECK(db.gammaB == doctest::Approx(0.4219052158215507918509007).epsilon(1e-14));
    CHECK(db.k == doctest::Approx(0.4596194077712558908605488).epsilon(1e-14));
    CHECK(db.Nphi == doctest::Approx(0.7106216763934352299501882).epsilon(1e-13));
}

TEST_CASE("parameter domain errors") {
    CHECK_THROWS_WITH_AS(derive(ModelParams<double>{0.2, 0.1, 0.0, 0.0}),
                         "model parameters require omega > 2*lambda > 0", std::invalid_argument);
    CHECK_THROWS_AS(derive(ModelParams<double>{1.0, -0.1, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(derive(ModelParams<double>{-1.0, 0.1, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("small-lambda limit collapses to the bosonic constants") {
    ModelParams<double> p{1.0, 1e-12, 0.2, 0.4};
    auto d = derive(p);
    CHECK(std::abs(d.theta0) < 1e-11);
    CHECK(d.ThetaPlus == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-11));
    CHECK(d.ThetaMinus == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-11));
    CHECK(d.Omega == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(std::abs(d.gamma) < 1e-11);
}

TEST_CASE("derived invariants hold over a 20-point parameter sweep") {
    int idx = 0;
    for (int i = 0; i < 20; ++i) {
        const double omega = 0.3 + 1.7 * i / 19.0;
        const double lambda = 0.45 * omega * (0.1 + 0.8 * ((i * 7) % 20) / 19.0);
        const double alpha = -1.0 + 2.0 * ((i * 3) % 20) / 19.0;
        const double beta = -1.0 + 2.0 * ((i * 11) % 20) / 19.0;
        ModelParams<double> p{omega, lambda, alpha, beta};
        auto d = derive(p);
        CHECK(std::abs(d.ThetaPlus * d.ThetaMinus - 0.5) <= 1e-14);
        CHECK(std::abs(d.ThetaPlus / d.ThetaMinus - std::exp(2 * d.theta0)) <= 1e-13);
        CHECK(std::abs(d.k - (alpha + beta) / std::sqrt(2.0)) <= 1e-13);
        CHECK(std::abs(d.k - d.ThetaMinus * (d.gammaA + d.gammaB)) <= 1e-13);
        CHECK(std::abs(d.Omega * std::cosh(2 * d.theta0) - omega) <= 1e-13);
        CHECK(identity_residuals(p, d) <= 1e-13);
        ++idx;
    }
    CHECK(idx == 20);
}

TEST_CASE("alpha-beta swap symmetry and the degenerate flag") {
    ModelParams<double> p{0.7, 0.2, -0.4, 0.9};
    ModelParams<double> q{0.7, 0.2, 0.9, -0.4};
    auto dp = derive(p), dq = derive(q);
    CHECK(dp.gammaA == doctest::Approx(dq.gammaB).epsilon(1e-15));
    CHECK(dp.gammaB == doctest::Approx(dq.gammaA).epsilon(1e-15));
    CHECK(dp.k == doctest::Approx(dq.k).epsilon(1e-15));
    CHECK(dp.theta0 == dq.theta0);
    CHECK(dp.Omega == dq.Omega);

    CHECK(!is_degenerate(p));
    ModelParams<double> deg{0.5, 0.1, 0.3, 0.3};
    CHECK(is_degenerate(deg));
    auto dd = derive(deg);
    CHECK(dd.gammaA == doctest::Approx(dd.gammaB).epsilon(1e-15));
}

TEST_CASE("normalization bookkeeping") {
    ModelParams<double> p{0.5, 0.1, 0.3, 0.35};
    auto d = derive(p);
    auto v = normalization_values(d);
    CHECK(v.I0 == doctest::Approx(1.980264027451795171056497).epsilon(1e-13));
    CHECK(v.enforced == doctest::Approx(d.Nphi));
    // the enforced value makes the vacua biorthonormal; the variant constants do not
    CHECK(v.enforced * v.enforced * v.I0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(v.variant_product - v.enforced) > 1e-3);
    CHECK(std::abs(v.variant_choice - v.enforced) > 1e-3);
}

TEST_CASE("spectrum is affine with gap Omega") {
    ModelParams<double> p{0.5, 0.1, 0.3, 0.31};
    auto d = derive(p);
    auto e = spectrum(d, 10);
    REQUIRE(e.size() == 11);
    CHECK(e[0] == doctest::Approx(d.gamma));
    CHECK(e[0] < 0);
    CHECK(e[1] == doctest::Approx(0.4373863542433760009882071).epsilon(1e-13));
    for (int n = 0; n < 10; ++n) CHECK(e[n + 1] - e[n] == doctest::Approx(d.Omega).epsilon(1e-13));
    CHECK_THROWS_AS(spectrum(d, -1), std::invalid_argument);
}
