#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "swanson/scalar.hpp"

namespace swanson {

template <class R>
struct QuadratureRule {
    Eigen::Matrix<R, Eigen::Dynamic, 1> nodes;
    Eigen::Matrix<R, Eigen::Dynamic, 1> weights;
};

// Golub-Welsch: eigendecompose the Jacobi matrix of the weight's orthogonal
// polynomials. Works for hardware floats only (cross-check integrator).
template <class R>
QuadratureRule<R> golub_welsch(const Eigen::Matrix<R, Eigen::Dynamic, 1>& offdiag, const R& mu0) {
    static_assert(std::is_floating_point_v<R>, "quadrature needs a hardware float type");
    const Eigen::Index m = offdiag.size() + 1;
    Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic> J =
        Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m);
    for (Eigen::Index k = 0; k + 1 < m; ++k) {
        J(k + 1, k) = offdiag[k];
        J(k, k + 1) = offdiag[k];
    }
    Eigen::SelfAdjointEigenSolver<decltype(J)> es(J);
    if (es.info() != Eigen::Success) throw std::runtime_error("quadrature: eigensolver failed");
    QuadratureRule<R> rule;
    rule.nodes = es.eigenvalues();
    rule.weights.resize(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        R v0 = es.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

// weight e^{-x^2} on the real line
template <class R>
QuadratureRule<R> gauss_hermite(int m) {
    if (m < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
    using std::sqrt;
    Eigen::Matrix<R, Eigen::Dynamic, 1> off(m - 1);
    for (int k = 1; k < m; ++k) off[k - 1] = sqrt(R(k) / 2);
    return golub_welsch<R>(off, sqrt(pi_v<R>()));
}

// weight 1 on [a, b]
template <class R>
QuadratureRule<R> gauss_legendre(int m, const R& a, const R& b) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
    using std::sqrt;
    Eigen::Matrix<R, Eigen::Dynamic, 1> off(m - 1);
    for (int k = 1; k < m; ++k) off[k - 1] = R(k) / sqrt(R(4) * k * k - 1);
    auto rule = golub_welsch<R>(off, R(2));
    // map [-1,1] -> [a,b]
    const R half = (b - a) / 2, mid = (a + b) / 2;
    rule.nodes = (rule.nodes.array() * half + mid).matrix();
    rule.weights *= half;
    return rule;
}

}  // namespace swanson
