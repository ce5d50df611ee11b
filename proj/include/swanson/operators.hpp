#pragma once

#include "swanson/params.hpp"

namespace swanson {

// first-order operator  deriv_coef * d/dx + (mult_lin * x + mult_const),
// the exact class closed on PolyGauss
template <class R>
struct LadderOp {
    R deriv_coef;
    R mult_lin;
    R mult_const;
};

template <class R>
LadderOp<R> adjoint(const LadderOp<R>& op) {
    return {-op.deriv_coef, op.mult_lin, op.mult_const};
}

// the model's operators: a, b, c, c+ from the shifted bosonic pair,
// A, B and adjoints from the hyperbolic rotation
template <class R>
LadderOp<R> op_a(const ModelParams<R>& p) {
    using std::sqrt;
    const R s = 1 / sqrt(R(2));
    return {s, s, p.alpha};
}

template <class R>
LadderOp<R> op_b(const ModelParams<R>& p) {
    using std::sqrt;
    const R s = 1 / sqrt(R(2));
    return {-s, s, p.beta};
}

template <class R>
LadderOp<R> op_c() {
    using std::sqrt;
    const R s = 1 / sqrt(R(2));
    return {s, s, R(0)};
}

template <class R>
LadderOp<R> op_c_dag() {
    using std::sqrt;
    const R s = 1 / sqrt(R(2));
    return {-s, s, R(0)};
}

template <class R>
LadderOp<R> op_A(const DerivedParams<R>& d) {
    return {d.ThetaMinus, d.ThetaPlus, d.gammaA};
}

template <class R>
LadderOp<R> op_B(const DerivedParams<R>& d) {
    return {-d.ThetaMinus, d.ThetaPlus, d.gammaB};
}

template <class R>
LadderOp<R> op_A_dag(const DerivedParams<R>& d) {
    return adjoint(op_A(d));
}

template <class R>
LadderOp<R> op_B_dag(const DerivedParams<R>& d) {
    return adjoint(op_B(d));
}

// exact image of P(x) e^{-(q x^2 + l x + c)}:
// (d P' + (m - 2 d q) x P + (s - d l) P) carrying the same exponent
template <class R>
PolyGauss<R> apply(const LadderOp<R>& op, const PolyGauss<R>& f) {
    const complex_t<R> xcoef(op.mult_lin - 2 * op.deriv_coef * f.quad);
    const complex_t<R> ccoef = complex_t<R>(op.mult_const) - op.deriv_coef * f.lin;
    cvec<R> p = cvec<R>::Zero(f.poly.size() + 1);
    const cvec<R> dp = poly_diff<R>(f.poly);
    for (Eigen::Index i = 0; i < dp.size(); ++i) p[i] += op.deriv_coef * dp[i];
    for (Eigen::Index i = 0; i < f.poly.size(); ++i) {
        p[i + 1] += xcoef * f.poly[i];
        p[i] += ccoef * f.poly[i];
    }
    return PolyGauss<R>(std::move(p), f.quad, f.lin, f.cnst);
}

// (op1 op2 - op2 op1) f - f; identically zero for pseudo-bosonic pairs
template <class R>
PolyGauss<R> commutator_residual(const LadderOp<R>& op1, const LadderOp<R>& op2,
                                 const PolyGauss<R>& f) {
    PolyGauss<R> fwd = apply(op1, apply(op2, f));
    PolyGauss<R> rev = apply(op2, apply(op1, f));
    cvec<R> p = poly_add<R>(fwd.poly, cvec<R>(-rev.poly));
    p = poly_add<R>(p, cvec<R>(-f.poly));
    return PolyGauss<R>(std::move(p), f.quad, f.lin, f.cnst);
}

// constant-coefficient compatibility condition: alpha_a b_b' + alpha_b b_a' = 1
// as polynomials (the derivative-coefficient condition is automatic here)
template <class R>
bool pb_conditions_check(const R& alpha_a, const R& alpha_b, const cvec<R>& beta_a,
                         const cvec<R>& beta_b, const R& tol) {
    cvec<R> lhs = poly_add<R>(cvec<R>(poly_diff<R>(beta_b) * complex_t<R>(alpha_a)),
                              cvec<R>(poly_diff<R>(beta_a) * complex_t<R>(alpha_b)));
    lhs[0] -= complex_t<R>(1);
    return poly_max_abs<R>(lhs) <= tol;
}

// theta(x) = alpha_a beta_b(x) + alpha_b beta_a(x); equals x + k for the model
template <class R>
cvec<R> theta_poly(const R& alpha_a, const R& alpha_b, const cvec<R>& beta_a,
                   const cvec<R>& beta_b) {
    return poly_add<R>(cvec<R>(beta_b * complex_t<R>(alpha_a)), cvec<R>(beta_a * complex_t<R>(alpha_b)));
}

enum class HamiltonianForm { pseudo_bosonic, diagonal };

template <class R>
struct QuadraticHamiltonian {
    HamiltonianForm form;
    ModelParams<R> model;
    DerivedParams<R> derived;
};

// pseudo_bosonic: omega b a + lambda (b b + a a); diagonal: Omega B A + gamma
template <class R>
PolyGauss<R> hamiltonian_apply(const QuadraticHamiltonian<R>& h, const PolyGauss<R>& f) {
    if (h.form == HamiltonianForm::pseudo_bosonic) {
        const auto a = op_a(h.model), b = op_b(h.model);
        PolyGauss<R> t1 = scale(apply(b, apply(a, f)), complex_t<R>(h.model.omega));
        PolyGauss<R> t2 = apply(a, apply(a, f));
        PolyGauss<R> t3 = apply(b, apply(b, f));
        return add(t1, scale(add(t2, t3), complex_t<R>(h.model.lambda)));
    }
    const auto A = op_A(h.derived), B = op_B(h.derived);
    PolyGauss<R> t = scale(apply(B, apply(A, f)), complex_t<R>(h.derived.Omega));
    return add(t, scale(f, complex_t<R>(h.derived.gamma)));
}

}  // namespace swanson
