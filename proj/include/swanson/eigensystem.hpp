#pragma once

#include <vector>

#include "swanson/operators.hpp"
#include "swanson/specialfn.hpp"

namespace swanson {

enum class Flavor { phi, psi };
enum class Method { recursion, closed_form };

template <class R>
PolyGauss<R> vacuum(const DerivedParams<R>& d, Flavor flavor) {
    using std::log;
    const R g = flavor == Flavor::phi ? d.gammaA : d.gammaB;
    const R n = flavor == Flavor::phi ? d.Nphi : d.Npsi;
    const R q = d.ThetaPlus / (2 * d.ThetaMinus);
    return PolyGauss<R>(poly_one<R>(), q, complex_t<R>(g / d.ThetaMinus), complex_t<R>(-log(n)));
}

template <class R>
struct EigenFamily {
    std::vector<PolyGauss<R>> states;  // index n, polynomial degree n
    Flavor flavor;
    Method method;
    DerivedParams<R> params;
};

// recursion polynomials pi_n = (theta(x)/alpha_a - alpha_b') pi_{n-1} - alpha_b pi_{n-1}',
// with theta(x) = x + k and constant alpha_a = alpha_b = ThetaMinus; the psi-side
// sigma_n recursion has alpha_a and alpha_b exchanged, which coincides here
template <class R>
std::vector<cvec<R>> recursion_polys(const DerivedParams<R>& d, int n_max) {
    const complex_t<R> mult_lin(1 / d.ThetaMinus);
    const complex_t<R> mult_const(d.k / d.ThetaMinus);
    std::vector<cvec<R>> pis(n_max + 1);
    pis[0] = poly_one<R>();
    for (int n = 1; n <= n_max; ++n) {
        const cvec<R>& prev = pis[n - 1];
        cvec<R> next = cvec<R>::Zero(prev.size() + 1);
        for (Eigen::Index j = 0; j < prev.size(); ++j) {
            next[j + 1] += mult_lin * prev[j];
            next[j] += mult_const * prev[j];
        }
        const cvec<R> dp = poly_diff<R>(prev);
        for (Eigen::Index j = 0; j < dp.size(); ++j) next[j] -= d.ThetaMinus * dp[j];
        pis[n] = std::move(next);
    }
    return pis;
}

// closed form pi_n = 2^{-n/2} H_n((x+k)/(sqrt(2) ThetaMinus)); the argument
// equals e^{theta0}(x+k)
template <class R>
std::vector<cvec<R>> closed_polys(const DerivedParams<R>& d, int n_max) {
    using std::pow;
    using std::sqrt;
    const complex_t<R> s(1 / (sqrt(R(2)) * d.ThetaMinus));
    const complex_t<R> t(d.k / (sqrt(R(2)) * d.ThetaMinus));
    std::vector<cvec<R>> pis(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        cvec<R> h = poly_affine_sub<R>(hermite_coeffs<R>(n), s, t);
        pis[n] = cvec<R>(h * complex_t<R>(pow(R(2), -R(n) / 2)));
    }
    return pis;
}

template <class R>
EigenFamily<R> build_family(const DerivedParams<R>& d, Flavor flavor, Method method, int n_max) {
    if (n_max < 0) throw std::invalid_argument("build_family: n_max must be >= 0");
    using std::sqrt;
    const PolyGauss<R> vac = vacuum(d, flavor);
    auto pis = method == Method::recursion ? recursion_polys(d, n_max) : closed_polys(d, n_max);
    EigenFamily<R> fam{{}, flavor, method, d};
    fam.states.reserve(n_max + 1);
    R nfac = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) nfac *= n;
        fam.states.emplace_back(cvec<R>(pis[n] / complex_t<R>(sqrt(nfac))), vac.quad, vac.lin,
                                vac.cnst);
    }
    return fam;
}

// norms by the exact moment engine, with the Laguerre ratio candidate alongside
template <class R>
struct NormTable {
    std::vector<R> norm;       // ||phi_n||
    std::vector<R> ratio;      // ||phi_n||^2 / ||phi_0||^2
    std::vector<R> candidate;  // L_n(-(gammaB-gammaA)^2)
};

template <class R>
NormTable<R> norm_table(const EigenFamily<R>& fam) {
    NormTable<R> t;
    const int n_max = int(fam.states.size()) - 1;
    const R darg = -(fam.params.gammaB - fam.params.gammaA) * (fam.params.gammaB - fam.params.gammaA);
    t.norm.reserve(n_max + 1);
    for (const auto& s : fam.states) t.norm.push_back(norm(s));
    for (int n = 0; n <= n_max; ++n) {
        t.ratio.push_back(t.norm[n] * t.norm[n] / (t.norm[0] * t.norm[0]));
        t.candidate.push_back(laguerre_value<R>(n, darg));
    }
    return t;
}

template <class R>
Eigen::Matrix<complex_t<R>, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(
    const EigenFamily<R>& phi, const EigenFamily<R>& psi) {
    if (phi.states.size() != psi.states.size())
        throw std::invalid_argument("gram_matrix: families must share n_max");
    const Eigen::Index m = Eigen::Index(phi.states.size());
    Eigen::Matrix<complex_t<R>, Eigen::Dynamic, Eigen::Dynamic> G(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) G(i, j) = inner_product(phi.states[i], psi.states[j]);
    return G;
}

// least-squares slope of log||phi_n|| against sqrt(n)
template <class R>
R growth_fit(const EigenFamily<R>& fam, const std::vector<int>& n_list) {
    using std::log;
    using std::sqrt;
    if (n_list.size() < 2) throw std::invalid_argument("growth_fit: need at least two indices");
    std::vector<R> xs, ys;
    for (int n : n_list) {
        if (n < 0 || n >= int(fam.states.size()))
            throw std::invalid_argument("growth_fit: index outside family");
        xs.push_back(sqrt(R(n)));
        ys.push_back(log(norm(fam.states[n])));
    }
    R xb = 0, yb = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        xb += xs[i];
        yb += ys[i];
    }
    xb /= int(xs.size());
    yb /= int(xs.size());
    R num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - xb) * (ys[i] - yb);
        den += (xs[i] - xb) * (xs[i] - xb);
    }
    return num / den;
}

// partial sums of the quasi-basis identity, both orderings:
// sum_n <f,phi_n><psi_n,g>  and  sum_n <f,psi_n><phi_n,g>  ->  <f,g>
template <class R>
struct QuasiBasisSums {
    complex_t<R> via_phi_psi;
    complex_t<R> via_psi_phi;
};

template <class R>
QuasiBasisSums<R> quasi_basis_partial_sum(const PolyGauss<R>& f, const PolyGauss<R>& g,
                                          const EigenFamily<R>& phi, const EigenFamily<R>& psi,
                                          int N) {
    if (N < 0 || N >= int(phi.states.size()) || N >= int(psi.states.size()))
        throw std::invalid_argument("quasi_basis_partial_sum: N outside families");
    QuasiBasisSums<R> s{complex_t<R>(0), complex_t<R>(0)};
    for (int n = 0; n <= N; ++n) {
        s.via_phi_psi += inner_product(f, phi.states[n]) * inner_product(psi.states[n], g);
        s.via_psi_phi += inner_product(f, psi.states[n]) * inner_product(phi.states[n], g);
    }
    return s;
}

}  // namespace swanson
