#pragma once

#include <stdexcept>

#include "swanson/scalar.hpp"

namespace swanson {

// dense polynomial in the monomial basis, coefficient i belongs to x^i
template <class R>
using cvec = Eigen::Matrix<complex_t<R>, Eigen::Dynamic, 1>;

template <class R>
cvec<R> poly_zero() {
    cvec<R> p(1);
    p[0] = complex_t<R>(0);
    return p;
}

template <class R>
cvec<R> poly_one() {
    cvec<R> p(1);
    p[0] = complex_t<R>(1);
    return p;
}

template <class R>
cvec<R> poly_add(const cvec<R>& u, const cvec<R>& v) {
    cvec<R> w = cvec<R>::Zero(std::max(u.size(), v.size()));
    w.head(u.size()) += u;
    w.head(v.size()) += v;
    return w;
}

template <class R>
cvec<R> poly_mul(const cvec<R>& u, const cvec<R>& v) {
    cvec<R> w = cvec<R>::Zero(u.size() + v.size() - 1);
    for (Eigen::Index i = 0; i < u.size(); ++i)
        for (Eigen::Index j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

template <class R>
cvec<R> poly_diff(const cvec<R>& u) {
    if (u.size() <= 1) return poly_zero<R>();
    cvec<R> w(u.size() - 1);
    for (Eigen::Index i = 1; i < u.size(); ++i) w[i - 1] = R(i) * u[i];
    return w;
}

template <class R, class X>
complex_t<R> poly_eval(const cvec<R>& u, const X& x) {
    complex_t<R> acc = u[u.size() - 1];
    for (Eigen::Index i = u.size() - 2; i >= 0; --i) acc = acc * x + u[i];
    return acc;
}

template <class R>
cvec<R> poly_conj(const cvec<R>& u) {
    using std::conj;
    cvec<R> w(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) w[i] = conj(u[i]);
    return w;
}

template <class R>
R poly_max_abs(const cvec<R>& u) {
    using std::abs;
    R m = 0;
    for (Eigen::Index i = 0; i < u.size(); ++i) m = std::max<R>(m, abs(u[i]));
    return m;
}

// p(s*x + t): Horner with a linear argument
template <class R>
cvec<R> poly_affine_sub(const cvec<R>& p, const complex_t<R>& s, const complex_t<R>& t) {
    cvec<R> acc(1);
    acc[0] = p[p.size() - 1];
    for (Eigen::Index i = p.size() - 2; i >= 0; --i) {
        cvec<R> next = cvec<R>::Zero(acc.size() + 1);
        for (Eigen::Index j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * t;
            next[j + 1] += acc[j] * s;
        }
        next[0] += p[i];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace swanson
