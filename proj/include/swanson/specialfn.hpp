#pragma once

#include <stdexcept>
#include <vector>

#include "swanson/polynomial.hpp"

namespace swanson {

// physicists' Hermite coefficients, exact integers (H_20 already exceeds 2^53)
inline std::vector<bigint> hermite_exact(int n) {
    if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    std::vector<bigint> prev{1}, cur{0, 2};
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        std::vector<bigint> next(k + 2, 0);
        for (int i = 0; i <= k; ++i) next[i + 1] += 2 * cur[i];
        for (int i = 0; i < k; ++i) next[i] -= 2 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <class R>
cvec<R> hermite_coeffs(int n) {
    auto exact = hermite_exact(n);
    cvec<R> p(exact.size());
    for (size_t i = 0; i < exact.size(); ++i) p[i] = complex_t<R>(exact[i].convert_to<R>());
    return p;
}

// H_n(x) by upward recurrence; fine pointwise at the degrees used here
template <class R>
R hermite_value(int n, const R& x) {
    R hm = 1, h = 2 * x;
    if (n == 0) return hm;
    for (int k = 1; k < n; ++k) {
        R hn = 2 * x * h - 2 * k * hm;
        hm = h;
        h = hn;
    }
    return h;
}

// normalized oscillator eigenfunction e_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)),
// computed by the self-normalizing recurrence to avoid 2^n n! overflow
template <class R>
R hermite_function(int n, const R& x) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    R em = pow(pi_v<R>(), R(-0.25)) * exp(-x * x / 2);
    if (n == 0) return em;
    R e = sqrt(R(2)) * x * em;
    for (int k = 1; k < n; ++k) {
        R en = sqrt(R(2) / (k + 1)) * x * e - sqrt(R(k) / (k + 1)) * em;
        em = e;
        e = en;
    }
    return e;
}

// partial sum of sum_l t^l H_l(x)/l!  ->  exp(-t^2+2tx)
template <class R>
complex_t<R> hermite_generating_sum(const complex_t<R>& t, const R& x, int L) {
    complex_t<R> sum = complex_t<R>(1);
    if (L == 0) return sum;
    R hm = 1, h = 2 * x;
    complex_t<R> tpow = t;  // t^l / l!
    sum += tpow * h;
    for (int l = 2; l <= L; ++l) {
        R hn = 2 * x * h - 2 * (l - 1) * hm;
        hm = h;
        h = hn;
        tpow *= t / R(l);
        sum += tpow * h;
    }
    return sum;
}

template <class R>
R laguerre_value(int n, const R& x) {
    R lm = 1, l = 1 - x;
    if (n == 0) return lm;
    for (int k = 1; k < n; ++k) {
        R ln = ((2 * k + 1 - x) * l - k * lm) / (k + 1);
        lm = l;
        l = ln;
    }
    return l;
}

// L_n(x) ~ e^{x/2} e^{2 sqrt(-nx)} / (2 sqrt(pi) (-x)^{1/4} n^{1/4}), x < 0
template <class R>
R laguerre_asymptotic(int n, const R& x) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    if (!(x < 0)) throw std::domain_error("laguerre_asymptotic: requires x < 0");
    if (n < 1) throw std::domain_error("laguerre_asymptotic: requires n >= 1");
    return exp(x / 2) * exp(2 * sqrt(-R(n) * x)) /
           (2 * sqrt(pi_v<R>()) * pow(-x, R(0.25)) * pow(R(n), R(0.25)));
}

}  // namespace swanson
