#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "swanson/polygauss.hpp"
#include "swanson/quadrature.hpp"
#include "swanson/specialfn.hpp"

using namespace swanson;
using C = std::complex<double>;

namespace {

cvec<double> make(std::initializer_list<C> cs) {
    cvec<double> p(Eigen::Index(cs.size()));
    Eigen::Index i = 0;
    for (const auto& c : cs) p[i++] = c;
    return p;
}

}  // namespace

TEST_CASE("eval matches the displayed form") {
    PolyGauss<double> u(poly_one<double>(), 0.5, C(0), C(0));
    CHECK(std::abs(eval(u, 0.0) - C(1)) < 1e-15);

    PolyGauss<double> odd(make({0.0, 1.0}), 1.0, C(0), C(0));
    CHECK(std::abs(eval(odd, 0.0)) < 1e-15);

    PolyGauss<double> shifted(poly_one<double>(), 0.5, C(1), C(0));
    CHECK(std::abs(eval(shifted, 1.0) - std::exp(C(-1.5))) < 1e-15);

    CHECK_THROWS_AS(PolyGauss<double>(poly_one<double>(), 0.0, C(0), C(0)),
                    std::invalid_argument);
}

TEST_CASE("moment recursion matches the symbolic differentiation identity") {
    // M_k = (-d/db)^k M_0 with M_0 = sqrt(pi/a) e^{b^2/4a}; repeated differentiation
    // gives M_k = p_k(b) M_0 with p_0 = 1, p_{k+1} = -p_k' - (b/2a) p_k
    const double a = 1.5, b = 0.7;
    auto table = gaussian_moments<double>(a, C(b), 6);
    std::vector<std::vector<double>> p{{1.0}};
    for (int k = 0; k < 6; ++k) {
        const auto& pk = p.back();
        std::vector<double> nx(pk.size() + 1, 0.0);
        for (size_t j = 1; j < pk.size(); ++j) nx[j - 1] -= double(j) * pk[j];
        for (size_t j = 0; j < pk.size(); ++j) nx[j + 1] -= pk[j] / (2 * a);
        p.push_back(std::move(nx));
    }
    const double m0 = std::sqrt(pi_v<double>() / a) * std::exp(b * b / (4 * a));
    for (int k = 0; k <= 6; ++k) {
        double pk = 0, bp = 1;
        for (double cj : p[k]) {
            pk += cj * bp;
            bp *= b;
        }
        CHECK(std::abs(table.moments[k] - pk * m0) <= 1e-12 * std::abs(pk * m0));
    }
    // frozen values from a 25-digit mpmath run
    CHECK(table.moments[0].real() == doctest::Approx(1.570350833991039854568711).epsilon(1e-14));
    CHECK(table.moments[1].real() == doctest::Approx(-0.366415194597909299399366).epsilon(1e-13));
    CHECK(table.moments[4].real() == doctest::Approx(0.6990988655407443982683109).epsilon(1e-13));
    CHECK(table.moments[6].real() == doctest::Approx(1.323429103652973116866978).epsilon(1e-13));
    CHECK_THROWS_AS(gaussian_moments<double>(-1.0, C(0), 2), std::domain_error);
}

TEST_CASE("inner_product closed forms") {
    PolyGauss<double> u(poly_one<double>(), 0.5, C(0), C(0));
    CHECK(std::abs(inner_product(u, u) - C(std::sqrt(pi_v<double>()))) < 1e-14);

    PolyGauss<double> odd(make({0.0, 1.0}), 0.5, C(0), C(0));
    CHECK(std::abs(inner_product(u, odd)) < 1e-15);

    // frozen complex-exponent pair: f = (1+x) e^{-(0.8x^2 + (0.2+0.3i)x + 0.1i)},
    // g = (x^2 - i) e^{-(0.7x^2 - 0.1x + 0.05)}; 25-digit mpmath value
    PolyGauss<double> f(make({1.0, 1.0}), 0.8, C(0.2, 0.3), C(0, 0.1));
    PolyGauss<double> g(make({C(0, -1), 0.0, 1.0}), 0.7, C(-0.1), C(0.05));
    const C want(0.6371400233705107046699993, -1.134558169892424697407914);
    CHECK(std::abs(inner_product(f, g) - want) <= 1e-14 * std::abs(want));
}

TEST_CASE("inner_product agrees with Gauss-Hermite after centering, degree up to 52") {
    // real linear exponents so the centering substitution keeps the integrand
    // polynomial; the substituted coefficients grow binomially and the outer
    // nodes cancel hard, so the deep pair runs in long double for headroom
    auto pair_check = [](auto scalar, int deg_f, int deg_g, double tol) {
        using R = decltype(scalar);
        using CC = complex_t<R>;
        using std::abs, std::exp, std::sqrt;
        cvec<R> pf = hermite_coeffs<R>(deg_f);
        cvec<R> pg = hermite_coeffs<R>(deg_g);
        pf /= std::pow(R(2), deg_f);  // tame the 2^n leading growth
        pg /= std::pow(R(2), deg_g);
        PolyGauss<R> f(pf, R(0.9), CC(R(0.4)), CC(R(0.2)));
        PolyGauss<R> g(pg, R(0.6), CC(R(-0.3)), CC(R(-0.1)));
        const CC exact = inner_product(f, g);

        const R a = f.quad + g.quad, b = R(0.4) - R(0.3);
        cvec<R> prod = poly_mul<R>(poly_conj<R>(f.poly), g.poly);
        // x = y/sqrt(a) - b/(2a) turns the weight into e^{-y^2}
        const R s = 1 / sqrt(a), t = -b / (2 * a);
        cvec<R> sub = poly_affine_sub<R>(prod, CC(s), CC(t));
        auto rule = gauss_hermite<R>(int(sub.size()) + 8);
        CC acc = 0;
        for (Eigen::Index q = 0; q < rule.nodes.size(); ++q)
            acc += rule.weights[q] * poly_eval<R>(sub, rule.nodes[q]);
        acc *= s * exp(b * b / (4 * a)) * exp(-(R(0.2) - R(0.1)));
        CHECK(double(abs(acc - exact)) <= tol * double(abs(exact)));
    };
    pair_check(0.0, 0, 0, 1e-12);
    pair_check(0.0, 3, 5, 1e-12);
    pair_check(0.0, 17, 21, 1e-9);
    pair_check(0.0L, 24, 28, 1e-9);
}

TEST_CASE("scale and add") {
    PolyGauss<double> u(make({1.0, 2.0}), 0.5, C(0.1), C(0));
    auto z = add(u, scale(u, C(-1)));
    CHECK(poly_max_abs<double>(z.poly) == 0.0);
    CHECK(norm_sq(z) == 0.0);

    PolyGauss<double> other(make({1.0}), 0.7, C(0.1), C(0));
    CHECK_THROWS_WITH_AS(add(u, other), "add: exponent mismatch", std::invalid_argument);

    CHECK(norm(scale(u, C(0, 2))) == doctest::Approx(2 * norm(u)));
}

TEST_CASE("parity: even times odd over a centered Gaussian vanishes") {
    PolyGauss<double> even(make({1.0, 0.0, 3.0}), 0.8, C(0), C(0));
    PolyGauss<double> odd(make({0.0, 2.0, 0.0, -1.0}), 0.4, C(0), C(0));
    CHECK(std::abs(inner_product(even, odd)) < 1e-15);
}
