#pragma once

// Complex-scalar utilities shared by the numeric verifier, templated so the
// same code runs in double precision and in boost multiprecision complex
// types (precision escalation).

#include <qstokes/exact.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qstokes::numeric {

template <class C>
struct scalar_traits {
    using real = typename C::value_type;  // std::complex
};
template <unsigned Digits>
struct scalar_traits<boost::multiprecision::cpp_complex<Digits>> {
    using real = typename boost::multiprecision::cpp_complex<Digits>::value_type;
};

template <class C>
using real_t = typename scalar_traits<C>::real;

using Cplx = std::complex<double>;
using Cplx50 = boost::multiprecision::cpp_complex_50;
using Cplx100 = boost::multiprecision::cpp_complex_100;

template <class C>
real_t<C> pi_v() {
    return boost::math::constants::pi<real_t<C>>();
}
template <class C>
real_t<C> euler_v() {
    return boost::math::constants::euler<real_t<C>>();
}
template <class C>
real_t<C> eps_v() {
    return std::numeric_limits<real_t<C>>::epsilon();
}
template <class C>
int digits10_v() {
    return std::numeric_limits<real_t<C>>::digits10;
}

template <class C>
C make_c(const real_t<C>& re, const real_t<C>& im) {
    return C(re, im);
}

template <class C>
real_t<C> arg_of(const C& z) {
    using std::atan2;
    return atan2(z.imag(), z.real());
}

// Principal-branch log Gamma via upward recurrence plus the Stirling series
// with Bernoulli numbers; accurate at working precision for any precision.
template <class C>
C lngamma(C z) {
    using std::abs;
    using std::log;
    using R = real_t<C>;
    const R threshold = R(10) + R(digits10_v<C>()) / R(2);
    C shift(0);
    while (z.real() < threshold) {
        shift -= log(z);
        z += C(1);
    }
    const C zi = C(1) / z;
    const C zi2 = zi * zi;
    C sum = (z - C(R(1) / 2)) * log(z) - z + C(log(R(2) * pi_v<C>()) / 2);
    C zpow = zi;
    const R tol = eps_v<C>();
    for (unsigned n = 1; n < 200; ++n) {
        const R b2n = boost::math::bernoulli_b2n<R>(static_cast<int>(n));
        const C term = zpow * (b2n / (R(2 * n) * R(2 * n - 1)));
        sum += term;
        if (abs(term) < tol * abs(sum)) break;
        zpow *= zi2;
    }
    return sum + shift;
}

// Dense complex matrices reuse the exact Matrix value type.
template <class C>
using CMat = Matrix<C>;

template <class C>
real_t<C> max_abs(const CMat<C>& a) {
    using std::abs;
    real_t<C> m(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, real_t<C>(abs(a(i, j))));
    return m;
}

template <class C>
real_t<C> max_abs_diff(const CMat<C>& a, const CMat<C>& b) {
    using std::abs;
    real_t<C> m(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m = std::max(m, real_t<C>(abs(a(i, j) - b(i, j))));
    return m;
}

template <class R>
R int_to_real(const Int& x) {
    if constexpr (std::is_same_v<R, double>)
        return x.get_d();
    else
        return R(x.get_str());
}

template <class C>
CMat<C> to_complex(const IMat& a) {
    CMat<C> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            r(i, j) = C(int_to_real<real_t<C>>(a(i, j)), real_t<C>(0));
    return r;
}

// Solve A X = B by Gauss elimination with partial pivoting.
template <class C>
CMat<C> solve_linear(CMat<C> a, CMat<C> b) {
    using std::abs;
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        auto best = abs(a(c, c));
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a(r, c)) > best) {
                best = abs(a(r, c));
                piv = r;
            }
        if (!(best > 0)) throw std::domain_error("singular linear system");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(b(piv, j), b(c, j));
            }
        const C d = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= d;
            b(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const C f = a(r, c);
            if (abs(f) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                b(r, j) -= f * b(c, j);
            }
        }
    }
    return b;
}

}  // namespace qstokes::numeric
