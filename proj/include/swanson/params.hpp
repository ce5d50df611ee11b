#pragma once

#include <stdexcept>
#include <vector>

#include "swanson/polygauss.hpp"

namespace swanson {

template <class R>
struct ModelParams {
    R omega;
    R lambda;
    R alpha;
    R beta;
};

template <class R>
struct DerivedParams {
    R theta0;       // (1/2) atanh(2 lambda / omega)
    R Omega;        // omega / cosh(2 theta0)
    R gamma;        // -omega sinh^2(theta0) / cosh(2 theta0)
    R ThetaPlus;    // e^{theta0} / sqrt(2)
    R ThetaMinus;   // e^{-theta0} / sqrt(2)
    R gammaA;       // alpha cosh(theta0) + beta sinh(theta0)
    R gammaB;       // beta cosh(theta0) + alpha sinh(theta0)
    R k;            // ThetaMinus (gammaA + gammaB) = (alpha + beta)/sqrt(2)
    R Nphi;         // vacuum normalizations, fixed by <phi_0, psi_0> = 1
    R Npsi;
};

template <class R>
void check_params(const ModelParams<R>& p) {
    if (!(p.omega > 0) || !(p.lambda > 0) || !(p.omega > 2 * p.lambda))
        throw std::invalid_argument("model parameters require omega > 2*lambda > 0");
}

template <class R>
bool is_degenerate(const ModelParams<R>& p) {
    return p.alpha == p.beta;
}

// unnormalized vacuum overlap integral and the resulting normalization,
// via the exact moment engine (the authoritative integrator)
template <class R>
struct NormalizationValues {
    R I0;        // integral of exp{-(2q x^2 + (gA+gB)/Tm x)}
    R enforced;  // N with N^2 I0 = 1
    R variant_product;  // candidate constant with k^2/(4 Tm) in the exponent
    R variant_choice;   // candidate constant e^{-k^2/Tm} / (sqrt(2 pi) Tm)
};

template <class R>
DerivedParams<R> derive(const ModelParams<R>& p) {
    using std::atanh;
    using std::cosh;
    using std::exp;
    using std::sinh;
    using std::sqrt;
    check_params(p);
    DerivedParams<R> d;
    d.theta0 = atanh(2 * p.lambda / p.omega) / 2;
    d.Omega = p.omega / cosh(2 * d.theta0);
    d.gamma = -p.omega * sinh(d.theta0) * sinh(d.theta0) / cosh(2 * d.theta0);
    d.ThetaPlus = exp(d.theta0) / sqrt(R(2));
    d.ThetaMinus = exp(-d.theta0) / sqrt(R(2));
    d.gammaA = p.alpha * cosh(d.theta0) + p.beta * sinh(d.theta0);
    d.gammaB = p.beta * cosh(d.theta0) + p.alpha * sinh(d.theta0);
    d.k = d.ThetaMinus * (d.gammaA + d.gammaB);
    // N from the exact vacuum overlap: a = Tp/Tm, b = (gA+gB)/Tm
    const R a = d.ThetaPlus / d.ThetaMinus;
    const complex_t<R> b((d.gammaA + d.gammaB) / d.ThetaMinus, R(0));
    using std::real;
    const R I0 = real(gaussian_moments<R>(a, b, 0).moments[0]);
    d.Nphi = 1 / sqrt(I0);
    d.Npsi = d.Nphi;
    return d;
}

template <class R>
NormalizationValues<R> normalization_values(const DerivedParams<R>& d) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    NormalizationValues<R> v;
    v.I0 = 1 / (d.Nphi * d.Nphi);
    v.enforced = d.Nphi;
    const R tp = pow(2 * pi_v<R>(), R(0.25));
    v.variant_product = exp(-d.k * d.k / (4 * d.ThetaMinus)) / (tp * sqrt(d.ThetaMinus));
    v.variant_choice = exp(-d.k * d.k / d.ThetaMinus) / (sqrt(2 * pi_v<R>()) * d.ThetaMinus);
    return v;
}

// residuals of the exact relations tying the derived constants together
template <class R>
R identity_residuals(const ModelParams<R>& p, const DerivedParams<R>& d) {
    using std::abs;
    using std::cosh;
    using std::exp;
    using std::sqrt;
    R r = abs(d.ThetaPlus * d.ThetaMinus - R(0.5));
    r = std::max<R>(r, abs(d.ThetaPlus / d.ThetaMinus - exp(2 * d.theta0)));
    r = std::max<R>(r, abs(d.k - (p.alpha + p.beta) / sqrt(R(2))));
    r = std::max<R>(r, abs(d.k - d.ThetaMinus * (d.gammaA + d.gammaB)));
    r = std::max<R>(r, abs(d.Omega * cosh(2 * d.theta0) - p.omega));
    return r;
}

template <class R>
std::vector<R> spectrum(const DerivedParams<R>& d, int n_max) {
    if (n_max < 0) throw std::invalid_argument("spectrum: n_max must be >= 0");
    std::vector<R> e(n_max + 1);
    for (int n = 0; n <= n_max; ++n) e[n] = d.Omega * n + d.gamma;
    return e;
}

}  // namespace swanson
