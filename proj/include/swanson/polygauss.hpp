#pragma once

#include <stdexcept>

#include "swanson/polynomial.hpp"

namespace swanson {

// P(x) * exp(-(q x^2 + l x + c)), q > 0: closed under the model's operators
// and integrable in closed form against Gaussian moments
template <class R>
struct PolyGauss {
    cvec<R> poly;
    R quad;
    complex_t<R> lin;
    complex_t<R> cnst;

    PolyGauss(cvec<R> p, R q, complex_t<R> l, complex_t<R> c)
        : poly(std::move(p)), quad(q), lin(l), cnst(c) {
        if (!(quad > 0)) throw std::invalid_argument("PolyGauss: quadratic coefficient must be positive");
        if (poly.size() == 0) throw std::invalid_argument("PolyGauss: empty polynomial");
    }
};

template <class R, class X>
complex_t<R> eval(const PolyGauss<R>& f, const X& x) {
    using std::exp;
    complex_t<R> e = -(f.quad * x * x + f.lin * x + f.cnst);
    return poly_eval<R>(f.poly, complex_t<R>(x)) * exp(e);
}

// M_k = integral of x^k exp(-(a x^2 + b x)) over the line;
// M_0 = sqrt(pi/a) e^{b^2/4a}, M_1 = (-b/2a) M_0,
// M_{k+1} = (-b/2a) M_k + (k/2a) M_{k-1}
template <class R>
struct GaussianMomentTable {
    R a;
    complex_t<R> b;
    cvec<R> moments;
};

template <class R>
GaussianMomentTable<R> gaussian_moments(const R& a, const complex_t<R>& b, int k_max) {
    using std::exp;
    using std::sqrt;
    if (!(a > 0)) throw std::domain_error("not integrable");
    GaussianMomentTable<R> t{a, b, cvec<R>(k_max + 1)};
    t.moments[0] = sqrt(pi_v<R>() / a) * exp(b * b / (4 * a));
    if (k_max >= 1) t.moments[1] = (-b / (2 * a)) * t.moments[0];
    for (int k = 1; k < k_max; ++k)
        t.moments[k + 1] = (-b / (2 * a)) * t.moments[k] + (R(k) / (2 * a)) * t.moments[k - 1];
    return t;
}

// <f, g> = integral of conj(f(x)) g(x) dx, exact via the moment table
template <class R>
complex_t<R> inner_product(const PolyGauss<R>& f, const PolyGauss<R>& g) {
    using std::conj;
    using std::exp;
    const R a = f.quad + g.quad;
    if (!(a > 0)) throw std::domain_error("not integrable");
    const complex_t<R> b = conj(f.lin) + g.lin;
    const cvec<R> p = poly_mul<R>(poly_conj<R>(f.poly), g.poly);
    const auto table = gaussian_moments<R>(a, b, int(p.size()) - 1);
    complex_t<R> s = 0;
    for (Eigen::Index j = 0; j < p.size(); ++j) s += p[j] * table.moments[j];
    return s * exp(-(conj(f.cnst) + g.cnst));
}

template <class R>
R norm_sq(const PolyGauss<R>& f) {
    using std::real;
    return real(inner_product(f, f));
}

template <class R>
R norm(const PolyGauss<R>& f) {
    using std::sqrt;
    return sqrt(norm_sq(f));
}

template <class R>
PolyGauss<R> scale(const PolyGauss<R>& f, const complex_t<R>& s) {
    return PolyGauss<R>(f.poly * s, f.quad, f.lin, f.cnst);
}

// valid only when the exponent triples coincide; merges the polynomial parts
template <class R>
PolyGauss<R> add(const PolyGauss<R>& f, const PolyGauss<R>& g) {
    if (f.quad != g.quad || f.lin != g.lin || f.cnst != g.cnst)
        throw std::invalid_argument("add: exponent mismatch");
    return PolyGauss<R>(poly_add<R>(f.poly, g.poly), f.quad, f.lin, f.cnst);
}

}  // namespace swanson
