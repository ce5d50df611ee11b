#include <cmath>
#include <complex>
#include <limits>

#include "doctest.h"

#include "swanson/bicoherent.hpp"

using namespace swanson;
using C = std::complex<double>;
using CL = std::complex<long double>;

namespace {

const ModelParams<double> fig1b{0.5, 0.1, 0.3, 0.35};
const ModelParams<long double> fig1bl{0.5L, 0.1L, 0.3L, 0.35L};

}  // namespace

TEST_CASE("series state at z=0 is the vacuum") {
    auto d = derive(fig1b);
    auto st = series_state(d, Flavor::phi, C(0), 25);
    auto vac = vacuum(d, Flavor::phi);
    for (int j = 0; j <= 10; ++j) {
        const double x = -4.0 + 0.8 * j;
        CHECK(std::abs(eval(st.repr, x) - eval(vac, x)) <= 1e-14);
    }
    CHECK(st.truncation == 25);
    CHECK_THROWS_WITH_AS(series_state(d, Flavor::phi, C(1), -1),
                         "series_state: L must be >= 0", std::invalid_argument);
}

TEST_CASE("series truncation is converged by L=40 at moderate z") {
    auto d = derive(fig1b);
    const C z(1.0, 0.5);
    auto a = series_state(d, Flavor::phi, z, 40);
    auto b = series_state(d, Flavor::phi, z, 60);
    for (int j = 0; j <= 40; ++j) {
        const double x = -4.0 + 0.2 * j;
        CHECK(std::abs(eval(a.repr, x) - eval(b.repr, x)) <= 1e-8);
    }
}

TEST_CASE("closed form matches the series including phase; real z has flat phase") {
    auto d = derive(fig1b);
    for (const C z : {C(1, 0.5), C(-0.7, 1.1)}) {
        auto cf = closed_form_state(d, Flavor::psi, z);
        auto se = series_state(d, Flavor::psi, z, 60);
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (int j = 0; j <= 40; ++j) {
            const double x = -4.0 + 0.2 * j;
            const double num = std::abs(eval(se.repr, x)), den = std::abs(eval(cf.repr, x));
            if (den < 1e-12) continue;
            lo = std::min(lo, num / den);
            hi = std::max(hi, num / den);
        }
        CHECK(hi / lo - 1 <= 1e-6);      // moduli ratio constant in x
        CHECK(std::abs(hi - 1) <= 1e-6); // and the constant is 1
    }
    // real z: the linear exponent stays real, so the phase carries no x dependence
    auto re = closed_form_state(d, Flavor::phi, C(0.8));
    CHECK(std::abs(re.repr.lin.imag()) == 0.0);
    auto im = closed_form_state(d, Flavor::phi, C(0, 0.9));
    CHECK(im.repr.lin.imag() == doctest::Approx(-0.9 / d.ThetaMinus).epsilon(1e-14));
    // z=0 reduces to the vacuum
    auto z0 = closed_form_state(d, Flavor::phi, C(0));
    auto vac = vacuum(d, Flavor::phi);
    CHECK(std::abs(eval(z0.repr, 0.3) - eval(vac, 0.3)) <= 1e-14);
}

TEST_CASE("ode states pair to unity and share the closed-form modulus") {
    auto d = derive(fig1b);
    for (const C z : {C(0), C(1), C(0, 1), C(1, 1)}) {
        auto fp = ode_state(d, Flavor::phi, z);
        auto fq = ode_state(d, Flavor::psi, z);
        CHECK(std::abs(inner_product(fp.repr, fq.repr) - C(1)) <= 1e-10);
        auto cf = closed_form_state(d, Flavor::phi, z);
        for (int j = 0; j <= 20; ++j) {
            const double x = -4.0 + 0.4 * j;
            const double a = std::abs(eval(fp.repr, x)), b = std::abs(eval(cf.repr, x));
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, b));
        }
    }
    // degenerate limit at z=0 is the ordinary normalized coherent vacuum
    ModelParams<double> deg{0.5, 0.1, 0.3, 0.3};
    auto dd = derive(deg);
    auto das = ode_state(dd, Flavor::phi, C(0));
    CHECK(norm_sq(das.repr) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("displacement construction reproduces the series") {
    auto d = derive(fig1bl);
    auto z0 = displacement_state(d, Flavor::phi, CL(0), 30);
    auto vac = vacuum(d, Flavor::phi);
    CHECK(std::abs(eval(z0.repr, 0.5L) - eval(vac, 0.5L)) <= 1e-17L);
    CHECK_THROWS_WITH_AS(displacement_state(d, Flavor::phi, CL(1), -2),
                         "displacement_state: L must be >= 0", std::invalid_argument);

    const CL z(0.6L, 0.8L);  // |z| = 1
    auto disp = displacement_state(d, Flavor::phi, z, 60);
    auto ser = series_state(d, Flavor::phi, z, 60);
    long double sup = 0;
    for (int j = 0; j <= 40; ++j) {
        const long double x = -4.0L + 0.2L * j;
        sup = std::max(sup, std::abs(eval(ser.repr, x)));
    }
    for (int j = 0; j <= 40; ++j) {
        const long double x = -4.0L + 0.2L * j;
        CHECK(std::abs(eval(disp.repr, x) - eval(ser.repr, x)) <= 1e-7L * sup);
    }

    // psi flavor against the closed-form modulus
    auto dpsi = displacement_state(d, Flavor::psi, CL(0, 1), 60);
    auto cpsi = closed_form_state(d, Flavor::psi, CL(0, 1));
    for (int j = 0; j <= 20; ++j) {
        const long double x = -4.0L + 0.4L * j;
        const long double a = std::abs(eval(dpsi.repr, x)), b = std::abs(eval(cpsi.repr, x));
        CHECK(std::abs(a - b) <= 1e-6L * std::max(1.0L, b));
    }
}

TEST_CASE("eigen residuals") {
    auto d = derive(fig1b);
    auto vac0 = closed_form_state(d, Flavor::phi, C(0));
    CHECK(eigen_residual(d, vac0) <= 1e-14);
    for (const C z : {C(1), C(0, 1), C(2, -1)}) {
        for (auto flavor : {Flavor::phi, Flavor::psi})
            CHECK(eigen_residual(d, closed_form_state(d, flavor, z)) <= 1e-10);
    }
    auto dl = derive(fig1bl);
    for (const CL z : {CL(1, 1), CL(-1.5L, 0), CL(0, 2)})
        CHECK(eigen_residual(dl, series_state(dl, Flavor::phi, z, 60)) <= 1e-7L);
}

TEST_CASE("convergence radius formula") {
    auto model = model_convergence_spec<double>();
    CHECK(std::isinf(model.rho));

    auto clamp = convergence_radius<double>(1, 1, 1, 1, 1.5, 2.0, 1.0);
    CHECK(clamp.rho == doctest::Approx(1.0));
    auto mid = convergence_radius<double>(1, 1, 4.0, 2.0, 1.0, 1.0, 2.0);
    CHECK(mid.rho == doctest::Approx(0.5));
    CHECK_THROWS_WITH_AS(convergence_radius<double>(-1, 1, 1, 1, 1, 1, 1),
                         "convergence_radius: constants must be positive", std::invalid_argument);
}

TEST_CASE("normalization series matches the Gaussian closed form") {
    for (double zm : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        const double got = normalization_series<double>(zm, 220);
        CHECK(std::abs(got - std::exp(-zm * zm / 2)) <= 1e-12);
    }
}

TEST_CASE("radial measure reproduces factorial moments") {
    const double twopi = 2 * pi_v<double>();
    CHECK(measure_radial_moment<double>(0) == doctest::Approx(1 / twopi).epsilon(1e-12));
    CHECK(measure_radial_moment<double>(1) == doctest::Approx(1 / twopi).epsilon(1e-12));
    CHECK(measure_radial_moment<double>(5) == doctest::Approx(120 / twopi).epsilon(1e-12));
    CHECK(moment_measure_check<double>(6) <= 1e-10);
    CHECK_THROWS_AS(measure_radial_moment<double>(-1), std::invalid_argument);
}

TEST_CASE("resolution of identity on the default disk") {
    auto d = derive(fig1b);
    PolyGauss<double> f(poly_one<double>(), 0.5, C(0),
                        C(std::log(pi_v<double>()) / 4));  // unit norm
    const C want = inner_product(f, f);
    const C got = resolution_of_identity(d, f, f, 6.0, 96, 96, false);
    CHECK(std::abs(got - want) / std::abs(want) <= 1e-3);
    const C swapped = resolution_of_identity(d, f, f, 6.0, 96, 96, true);
    CHECK(std::abs(got - swapped) / std::abs(want) <= 2e-3);

    cvec<double> xpoly(2);
    xpoly[0] = C(0);
    xpoly[1] = C(std::sqrt(2.0) * std::pow(pi_v<double>(), -0.25));
    PolyGauss<double> g(xpoly, 0.5, C(0), C(0));  // unit-norm odd partner
    const C cross = resolution_of_identity(d, f, g, 6.0, 96, 96, false);
    CHECK(std::abs(cross) <= 1e-3);

    CHECK_THROWS_WITH_AS(resolution_of_identity(d, f, f, 0.0, 8, 8, false),
                         "resolution_of_identity: radius must be positive",
                         std::invalid_argument);
}
