#pragma once

#include <limits>

#include "swanson/eigensystem.hpp"
#include "swanson/quadrature.hpp"

namespace swanson {

enum class Construction { series, closed_form, ode, displacement };

template <class R>
struct BiCoherentState {
    complex_t<R> z;
    Flavor flavor;
    Construction method;
    PolyGauss<R> repr;
    int truncation;  // -1 when the construction is not truncated
};

// e^{-|z|^2/2} sum_{l<=L} z^l phi_l / sqrt(l!); all phi_l share one exponent,
// so the sum collapses to a polynomial with the l-th term z^l pi_l / l!
template <class R>
BiCoherentState<R> series_state(const DerivedParams<R>& d, Flavor flavor, const complex_t<R>& z,
                                int L) {
    using std::norm;
    if (L < 0) throw std::invalid_argument("series_state: L must be >= 0");
    PolyGauss<R> vac = vacuum(d, flavor);
    auto pis = recursion_polys(d, L);
    cvec<R> sum = poly_one<R>();
    complex_t<R> coef(1);
    for (int l = 1; l <= L; ++l) {
        coef *= z / R(l);
        sum = poly_add<R>(sum, cvec<R>(pis[l] * coef));
    }
    // fold the e^{-|z|^2/2} prefactor into the exponent constant
    PolyGauss<R> repr(std::move(sum), vac.quad, vac.lin, vac.cnst + complex_t<R>(norm(z) / 2));
    return {z, flavor, Construction::series, std::move(repr), L};
}

// Gaussian with exponent -q x^2 + ((z - gamma)/Tm) x and constant fixed so the
// phase is e^{-i z_r z_i} e^{i (z_i/Tm)(x+k)} times a real profile; the x-linear
// terms combine to the analytic z(x+k)/Tm
template <class R>
BiCoherentState<R> closed_form_state(const DerivedParams<R>& d, Flavor flavor,
                                     const complex_t<R>& z) {
    using std::log;
    using std::real, std::imag;
    const R g = flavor == Flavor::phi ? d.gammaA : d.gammaB;
    const R n = flavor == Flavor::phi ? d.Nphi : d.Npsi;
    const R q = d.ThetaPlus / (2 * d.ThetaMinus);
    const R zr = real(z), zi = imag(z);
    const complex_t<R> lin = (complex_t<R>(g) - z) / d.ThetaMinus;
    const complex_t<R> cnst =
        complex_t<R>(-log(n) + zr * zr, zr * zi) - z * (d.k / d.ThetaMinus);
    return {z, flavor, Construction::closed_form, PolyGauss<R>(poly_one<R>(), q, lin, cnst), -1};
}

// direct solution of (A - z) state = 0 (resp. B+ - z), normalized by the
// constant K with <phi~(z), psi~(z)> = 1
template <class R>
BiCoherentState<R> ode_state(const DerivedParams<R>& d, Flavor flavor, const complex_t<R>& z) {
    using std::log;
    using std::real;
    const R g = flavor == Flavor::phi ? d.gammaA : d.gammaB;
    const R n = flavor == Flavor::phi ? d.Nphi : d.Npsi;
    const R q = d.ThetaPlus / (2 * d.ThetaMinus);
    const R zr = real(z);
    const complex_t<R> lin = (complex_t<R>(g) - z) / d.ThetaMinus;
    // -log K = -log N + z_r^2 - z_r k / Tm
    const complex_t<R> cnst(-log(n) + zr * zr - zr * d.k / d.ThetaMinus);
    return {z, flavor, Construction::ode, PolyGauss<R>(poly_one<R>(), q, lin, cnst), -1};
}

// sum_{l<=L} (1/l!) (-conj(z) A + z B)^l phi_0 (phi flavor; -conj(z) B+ + z A+
// on psi_0 for the psi flavor), by repeated exact operator action
template <class R>
BiCoherentState<R> displacement_state(const DerivedParams<R>& d, Flavor flavor,
                                      const complex_t<R>& z, int L) {
    using std::conj;
    if (L < 0) throw std::invalid_argument("displacement_state: L must be >= 0");
    const LadderOp<R> lower = flavor == Flavor::phi ? op_A(d) : op_B_dag(d);
    const LadderOp<R> raise = flavor == Flavor::phi ? op_B(d) : op_A_dag(d);
    PolyGauss<R> term = vacuum(d, flavor);
    PolyGauss<R> sum = term;
    for (int l = 1; l <= L; ++l) {
        PolyGauss<R> lo = scale(apply(lower, term), -conj(z) / R(l));
        PolyGauss<R> hi = scale(apply(raise, term), z / R(l));
        term = add(lo, hi);
        sum = PolyGauss<R>(poly_add<R>(sum.poly, term.poly), sum.quad, sum.lin, sum.cnst);
    }
    return {z, flavor, Construction::displacement, std::move(sum), L};
}

// sup over a fixed grid of |(A - z) state| / sup |state| (B+ - z for psi)
template <class R>
R eigen_residual(const DerivedParams<R>& d, const BiCoherentState<R>& st, int grid_points = 41,
                 const R& half_width = R(5)) {
    using std::abs;
    const LadderOp<R> lower = st.flavor == Flavor::phi ? op_A(d) : op_B_dag(d);
    PolyGauss<R> img = apply(lower, st.repr);
    cvec<R> shifted = poly_add<R>(img.poly, cvec<R>(st.repr.poly * (-st.z)));
    PolyGauss<R> res(std::move(shifted), img.quad, img.lin, img.cnst);
    R worst = 0, peak = 0;
    for (int i = 0; i < grid_points; ++i) {
        const R x = -half_width + 2 * half_width * R(i) / (grid_points - 1);
        worst = std::max<R>(worst, abs(eval(res, x)));
        peak = std::max<R>(peak, abs(eval(st.repr, x)));
    }
    return worst / peak;
}

// normalization series (sum_{k<=K} |z|^{2k} / k!)^{-1/2}; equals e^{-|z|^2/2}
// in the limit for this model's weights
template <class R>
R normalization_series(const R& zmod, int K) {
    using std::sqrt;
    R sum = 1, term = 1;
    for (int k = 1; k <= K; ++k) {
        term *= zmod * zmod / k;
        sum += term;
    }
    return 1 / sqrt(sum);
}

template <class R>
struct ConvergenceSpec {
    R A_phi, A_psi;    // norm-bound prefactors
    R r_phi, r_psi;    // geometric growth rates
    R M_phi, M_psi;    // limits of the M_n ratio sequences
    R alpha_bar;       // growth limit of the weight sequence (may be infinite)
    R rho;             // radius alpha_bar * min(1, M_phi/r_phi, M_psi/r_psi)
};

template <class R>
ConvergenceSpec<R> convergence_radius(const R& A_phi, const R& A_psi, const R& r_phi,
                                      const R& r_psi, const R& M_phi, const R& M_psi,
                                      const R& alpha_bar) {
    if (!(A_phi > 0) || !(A_psi > 0) || !(r_phi > 0) || !(r_psi > 0) || !(M_phi > 0) ||
        !(M_psi > 0) || !(alpha_bar > 0))
        throw std::invalid_argument("convergence_radius: constants must be positive");
    const R m = std::min<R>(R(1), std::min<R>(M_phi / r_phi, M_psi / r_psi));
    return {A_phi, A_psi, r_phi, r_psi, M_phi, M_psi, alpha_bar, alpha_bar * m};
}

// the model's instantiation: M(phi) = M(psi) = 1 and unbounded weight growth,
// so the disk is all of the plane
template <class R>
ConvergenceSpec<R> model_convergence_spec() {
    const R inf = std::numeric_limits<R>::infinity();
    return convergence_radius<R>(R(1), R(1), R(1), R(1), R(1), R(1), inf);
}

// radial moment of the measure (1/pi) r e^{-r^2} dr: integral of r^{2k},
// by quadrature on a truncated range; the exact value is k!/(2 pi)
template <class R>
R measure_radial_moment(int k) {
    using std::exp;
    using std::sqrt;
    if (k < 0) throw std::invalid_argument("measure_radial_moment: k must be >= 0");
    const R upper = sqrt(R(2) * k + 1) + 8;
    const auto rule = gauss_legendre<R>(64 + 8 * k, R(0), upper);
    R integral = 0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        const R r = rule.nodes[i];
        R p = 1;
        for (int j = 0; j < k; ++j) p *= r * r;
        integral += rule.weights[i] * r * p * exp(-r * r) / pi_v<R>();
    }
    return integral;
}

// worst relative deviation of the quadrature moments from k!/(2 pi), k <= k_max
template <class R>
R moment_measure_check(int k_max) {
    using std::abs;
    if (k_max < 0) throw std::invalid_argument("moment_measure_check: k_max must be >= 0");
    R worst = 0;
    for (int k = 0; k <= k_max; ++k) {
        const R exact = factorial<R>(k) / (2 * pi_v<R>());
        worst = std::max<R>(worst, abs(measure_radial_moment<R>(k) - exact) / exact);
    }
    return worst;
}

// disk integral of <f, psi(z)><phi(z), g> (1/pi) r dr dtheta over |z| <= R,
// trapezoid in theta, Gauss-Legendre in r; overlaps by exact moments.
// swapped=true integrates <f, phi(z)><psi(z), g> instead
template <class R>
complex_t<R> resolution_of_identity(const DerivedParams<R>& d, const PolyGauss<R>& f,
                                    const PolyGauss<R>& g, const R& radius, int n_theta, int n_r,
                                    bool swapped = false) {
    using std::cos, std::sin;
    if (!(radius > 0)) throw std::invalid_argument("resolution_of_identity: radius must be positive");
    const auto rule = gauss_legendre<R>(n_r, R(0), radius);
    complex_t<R> total(0);
    for (int j = 0; j < n_theta; ++j) {
        const R theta = 2 * pi_v<R>() * R(j) / R(n_theta);
        const R wtheta = 2 * pi_v<R>() / R(n_theta);
        for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
            const R r = rule.nodes[i];
            const complex_t<R> z(r * cos(theta), r * sin(theta));
            const auto phi = closed_form_state(d, Flavor::phi, z);
            const auto psi = closed_form_state(d, Flavor::psi, z);
            const complex_t<R> left = swapped ? inner_product(f, phi.repr) : inner_product(f, psi.repr);
            const complex_t<R> right = swapped ? inner_product(psi.repr, g) : inner_product(phi.repr, g);
            total += left * right * (rule.weights[i] * r * wtheta / pi_v<R>());
        }
    }
    return total;
}

}  // namespace swanson
