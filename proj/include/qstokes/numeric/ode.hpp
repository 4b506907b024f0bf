#pragma once

// Adaptive Dormand-Prince 5(4) integration of the matrix ODE
//   dY/dz = (U_hat + mu_hat / z) Y
// along a parametrized path z(t), t in [0, 1]. A fixed-step mode supports
// convergence-order measurements.

#include <qstokes/numeric/cplx.hpp>

#include <functional>
#include <utility>

namespace qstokes::numeric {

template <class C>
struct PathPoint {
    C z;
    C dz;  // dz/dt
};

// Piecewise paths are composed by the caller from arcs and segments.
template <class C>
using PathSpec = std::function<PathPoint<C>(const real_t<C>&)>;

template <class C>
PathSpec<C> arc_path(const real_t<C>& radius, const real_t<C>& theta0, const real_t<C>& theta1) {
    using std::cos;
    using std::sin;
    using R = real_t<C>;
    return [=](const R& t) -> PathPoint<C> {
        const R th = theta0 + (theta1 - theta0) * t;
        const C z = radius * make_c<C>(cos(th), sin(th));
        return {z, make_c<C>(R(0), theta1 - theta0) * z};
    };
}

template <class C>
PathSpec<C> segment_path(const C& z0, const C& z1) {
    using R = real_t<C>;
    return [=](const R& t) -> PathPoint<C> { return {z0 + (z1 - z0) * t, z1 - z0}; };
}

template <class C>
struct OdeOptions {
    real_t<C> rtol = real_t<C>(1e-12);
    real_t<C> atol = real_t<C>(1e-14);
    int max_steps = 2000000;
    int fixed_steps = 0;  // > 0: classical RK4 with this many equal steps
};

namespace detail {

template <class C>
CMat<C> system_rhs(int k, const CMat<C>& mu, const CMat<C>& u_hat, const PathPoint<C>& p,
                   const CMat<C>& y) {
    CMat<C> a = u_hat;
    for (int i = 0; i < k; ++i) a(i, i) += mu(i, i) / p.z;
    CMat<C> r = a * y;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r(i, j) *= p.dz;
    return r;
}

}  // namespace detail

// Continue the fundamental matrix y0 along the path. The system matrices
// are those of the CP^{k-1} problem.
template <class C>
CMat<C> ode_integrate(int k, const PathSpec<C>& path, CMat<C> y, const OdeOptions<C>& opt = {}) {
    using std::abs;
    using std::pow;
    using R = real_t<C>;
    CMat<C> u_hat(k), mu(k);
    for (int i = 0; i + 1 < k; ++i) u_hat(i, i + 1) = C(R(k));
    u_hat(k - 1, 0) = C(R(k));
    for (int i = 0; i < k; ++i) mu(i, i) = C((R(k) - 1) / 2 - R(i));
    auto f = [&](const R& t, const CMat<C>& yy) {
        return detail::system_rhs<C>(k, mu, u_hat, path(t), yy);
    };
    auto axpy = [](CMat<C> a, const R& s, const CMat<C>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) a(i, j) += C(s) * b(i, j);
        return a;
    };

    if (opt.fixed_steps > 0) {
        const R h = R(1) / opt.fixed_steps;
        R t(0);
        for (int step = 0; step < opt.fixed_steps; ++step) {
            const CMat<C> k1 = f(t, y);
            const CMat<C> k2 = f(t + h / 2, axpy(y, h / 2, k1));
            const CMat<C> k3 = f(t + h / 2, axpy(y, h / 2, k2));
            const CMat<C> k4 = f(t + h, axpy(y, h, k3));
            for (std::size_t i = 0; i < y.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j)
                    y(i, j) += C(h / 6) * (k1(i, j) + C(2) * k2(i, j) + C(2) * k3(i, j) + k4(i, j));
            t += h;
        }
        return y;
    }

    // Dormand-Prince 5(4) tableau.
    const R c2 = R(1) / 5, c3 = R(3) / 10, c4 = R(4) / 5, c5 = R(8) / 9;
    const R a21 = R(1) / 5;
    const R a31 = R(3) / 40, a32 = R(9) / 40;
    const R a41 = R(44) / 45, a42 = R(-56) / 15, a43 = R(32) / 9;
    const R a51 = R(19372) / 6561, a52 = R(-25360) / 2187, a53 = R(64448) / 6561,
            a54 = R(-212) / 729;
    const R a61 = R(9017) / 3168, a62 = R(-355) / 33, a63 = R(46732) / 5247, a64 = R(49) / 176,
            a65 = R(-5103) / 18656;
    const R b1 = R(35) / 384, b3 = R(500) / 1113, b4 = R(125) / 192, b5 = R(-2187) / 6784,
            b6 = R(11) / 84;
    const R e1 = b1 - R(5179) / 57600, e3 = b3 - R(7571) / 16695, e4 = b4 - R(393) / 640,
            e5 = b5 - R(-92097) / 339200, e6 = b6 - R(187) / 2100, e7 = R(0) - R(1) / 40;

    R t(0), h = R(1) / 100;
    int steps = 0;
    CMat<C> k1 = f(t, y);
    while (t < R(1)) {
        if (++steps > opt.max_steps) throw std::runtime_error("ode step limit exceeded");
        if (t + h > R(1)) h = R(1) - t;
        const CMat<C> k2 = f(t + c2 * h, axpy(y, h * a21, k1));
        const CMat<C> k3 = f(t + c3 * h, axpy(axpy(y, h * a31, k1), h * a32, k2));
        const CMat<C> k4 = f(t + c4 * h, axpy(axpy(axpy(y, h * a41, k1), h * a42, k2), h * a43, k3));
        const CMat<C> k5 = f(t + c5 * h,
                             axpy(axpy(axpy(axpy(y, h * a51, k1), h * a52, k2), h * a53, k3),
                                  h * a54, k4));
        const CMat<C> k6 =
            f(t + h, axpy(axpy(axpy(axpy(axpy(y, h * a61, k1), h * a62, k2), h * a63, k3),
                               h * a64, k4),
                          h * a65, k5));
        CMat<C> ynew = y;
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                ynew(i, j) += C(h) * (C(b1) * k1(i, j) + C(b3) * k3(i, j) + C(b4) * k4(i, j) +
                                      C(b5) * k5(i, j) + C(b6) * k6(i, j));
        const CMat<C> k7 = f(t + h, ynew);
        R err(0), scale(0);
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) {
                const C e = C(h) * (C(e1) * k1(i, j) + C(e3) * k3(i, j) + C(e4) * k4(i, j) +
                                    C(e5) * k5(i, j) + C(e6) * k6(i, j) + C(e7) * k7(i, j));
                const R sc = opt.atol + opt.rtol * std::max(R(abs(y(i, j))), R(abs(ynew(i, j))));
                err = std::max(err, R(abs(e)) / sc);
                scale = std::max(scale, sc);
            }
        if (err <= R(1)) {
            t += h;
            y = std::move(ynew);
            k1 = k7;  // FSAL
        }
        R fac = R(9) / 10 * pow(std::max(err, R(1) / R(1000000)), -R(1) / 5);
        fac = std::min(R(5), std::max(R(1) / 5, fac));
        h *= fac;
        if (h < eps_v<C>() * 16) throw std::runtime_error("ode step size underflow");
    }
    return y;
}

}  // namespace qstokes::numeric
