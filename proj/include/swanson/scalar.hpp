#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace swanson {

using float50 = boost::multiprecision::cpp_bin_float_50;
using complex50 = boost::multiprecision::cpp_complex_50;
// reserve for norm work past n ~ 80, where the exact-moment inner products
// cancel through more digits than float50 carries
using float100 = boost::multiprecision::cpp_bin_float_100;
using complex100 = boost::multiprecision::cpp_complex_100;
using bigint = boost::multiprecision::cpp_int;

// Real scalar -> matching complex type. Everything numeric in the library is
// templated on the real type R in {double, long double, float50}.
template <class R>
struct scalar_traits {
    using complex_type = std::complex<R>;
};

template <>
struct scalar_traits<float50> {
    using complex_type = complex50;
};

template <>
struct scalar_traits<float100> {
    using complex_type = complex100;
};

template <class R>
using complex_t = typename scalar_traits<R>::complex_type;

template <class R>
R pi_v() {
    using std::acos;
    return acos(R(-1));
}

template <class R>
constexpr const char* scalar_name() {
    if constexpr (std::is_same_v<R, double>) return "double";
    else if constexpr (std::is_same_v<R, long double>) return "long double";
    else if constexpr (std::is_same_v<R, float100>) return "float100";
    else return "float50";
}

// n! in the working scalar; exact up to the scalar's mantissa
template <class R>
R factorial(int n) {
    R f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

template <class R>
R log_factorial(int n) {
    using std::log;
    R s = 0;
    for (int k = 2; k <= n; ++k) s += log(R(k));
    return s;
}

}  // namespace swanson
