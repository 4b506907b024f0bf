#pragma once

// The solution family g^(nu) of the generalized hypergeometric equation
// (z d/dz)^k phi = (kz)^k phi, via two independent routes:
//
//  * a vertical-line integral of Gamma^k(-s) e^{-i pi k s} e^{2(nu-1) i pi s}
//    z^{ks}, evaluated by the trapezoid rule (valid inside the convergence
//    strip of each nu), and
//  * the residue expansion of the same integral at s = 0, 1, 2, ...,
//    which converges for every z and carries the analytic continuation.
//
// Arguments are arg-tracked: z enters as (log|z|, arg z) with arg unreduced,
// so rotated evaluation points stay on the correct sheet. Both routes
// support (z d/dz)-derivatives up to order k-1, taken under the integral
// (factor (ks)^p) respectively on the residue polynomials in log z.

#include <qstokes/numeric/cplx.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <vector>

namespace qstokes::numeric {

struct QuadratureConfig {
    double c = 0.5;        // abscissa of the vertical line (any c > 0)
    double h = 1.0 / 64;   // node spacing (dyadic, exact at any precision)
    double eta_max = 0;    // 0 = choose from the tail decay estimate
    double tail_log10 = 0; // 0 = working precision
};

// Convergence strip of the vertical-line integral for g^(nu):
// pi/2 - 2(nu-1)pi/k < arg z < 3pi/2 - 2(nu-1)pi/k. The decay rates of the
// integrand at eta -> +-inf are a_plus = k pi/2 + pi f + k arg z and
// a_minus = k pi/2 - pi f - k arg z, f = 2 nu - 2 - k.
inline bool in_strip(int k, int nu, double argz, double margin = 0.05) {
    const double f = 2 * nu - 2 - k;
    const double pi = 3.14159265358979323846;
    const double ap = k * pi / 2 + pi * f + k * argz;
    const double am = k * pi / 2 - pi * f - k * argz;
    return ap > margin && am > margin;
}

namespace detail {

// Prefactor -2 pi i C_nu with C_nu = (2 pi)^{-(k+1)/2} e^{-i pi (k/2 - nu - 1)}.
template <class C>
C g_prefactor(int k, int nu) {
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    using R = real_t<C>;
    const R pi = pi_v<C>();
    const R ang = -pi * (R(k) / 2 - R(nu) - 1);
    const R scale = exp(-(R(k) + 1) / 2 * log(2 * pi));
    return make_c<C>(R(0), R(-2) * pi) * make_c<C>(cos(ang), sin(ang)) * C(scale);
}

template <class R>
R lgamma_real(const R& x) {
    if constexpr (std::is_same_v<R, double>)
        return std::lgamma(x);
    else
        return boost::math::lgamma(x);
}

}  // namespace detail

// Residue-series evaluator. One instance serves every nu for a given k;
// the zeta tables are shared.
template <class C>
class GSeries {
public:
    explicit GSeries(int k, int jmax = 400) : k_(k), jmax_(jmax) {
        using R = real_t<C>;
        zeta_.assign(static_cast<std::size_t>(std::max(2, k_)), R(0));
        for (int p = 2; p < k_; ++p) zeta_[p] = boost::math::zeta<R>(R(p));
    }

    // g^(nu) and its (z d/dz)-derivatives up to order nder at
    // z = exp(log_abs + i arg); arg may lie outside (-pi, pi].
    std::vector<C> eval(int nu, const real_t<C>& log_abs, const real_t<C>& arg,
                        int nder = 0) const {
        using std::abs;
        using std::exp;
        using std::log;
        using R = real_t<C>;
        const R pi = pi_v<C>();
        const int f = 2 * nu - 2 - k_;
        const C w = make_c<C>(R(0), pi * R(f)) + R(k_) * make_c<C>(log_abs, arg);

        std::vector<C> acc(static_cast<std::size_t>(nder) + 1, C(0));
        R acc_scale(0);
        R harmonic(0), lfact(0);  // H_j and log(j!)
        const R tol = eps_v<C>();
        const int jmin = k_ * static_cast<int>(exp(std::min(double(log_abs), 6.0))) + 4;
        std::vector<R> zeta_tail = zeta_;  // zeta(p, j+1) = zeta(p) - sum_{m<=j} m^-p
        for (int j = 0; j < jmax_; ++j) {
            if (j > 0) {
                const R rj = R(j);
                harmonic += 1 / rj;
                lfact += log(rj);
                R mp = rj * rj;
                for (int p = 2; p < k_; ++p) {
                    zeta_tail[p] -= 1 / mp;
                    mp *= rj;
                }
            }
            // [u^{k-1}] exp(E(u)) as a polynomial in w, where
            // E(u) = u (w - k psi(j+1)) + sum_{p=2}^{k-1} e_p u^p,
            // e_p = -k (-1)^p zeta(p, j+1)/p + [p even] 2k zeta(p)/p.
            std::vector<R> ep(static_cast<std::size_t>(std::max(2, k_)), R(0));
            for (int p = 2; p < k_; ++p) {
                ep[p] = -zeta_tail[p] * R(k_) / R(p);
                if (p % 2) ep[p] = -ep[p];
                else ep[p] += 2 * R(k_) * zeta_[p] / R(p);
            }
            const R e1c = -R(k_) * (harmonic - euler_v<C>());
            std::vector<std::vector<C>> aw(static_cast<std::size_t>(k_));
            aw[0] = {C(1)};
            for (int m = 1; m < k_; ++m) {
                std::vector<C> s(static_cast<std::size_t>(m) + 1, C(0));
                // i = 1 term: E_1 = e1c + w (degree-1 polynomial in w)
                for (std::size_t y = 0; y < aw[m - 1].size(); ++y) {
                    s[y] += C(e1c) * aw[m - 1][y];
                    s[y + 1] += aw[m - 1][y];
                }
                for (int i = 2; i <= m && i < k_; ++i)
                    for (std::size_t y = 0; y < aw[m - i].size(); ++y)
                        s[y] += R(i) * C(ep[i]) * aw[m - i][y];
                for (auto& cv : s) cv /= R(m);
                aw[m] = std::move(s);
            }
            std::vector<C> q = aw[k_ - 1];

            const C base = exp(R(j) * w - R(k_) * lfact);
            const R sgn = ((j + 1) * k_) % 2 ? R(-1) : R(1);
            R q_scale(0);
            for (const C& cv : q) q_scale = std::max(q_scale, R(abs(cv)));
            for (int p = 0; p <= nder; ++p) {
                C val(0), wp(1);
                for (const C& cv : q) {
                    val += cv * wp;
                    wp *= w;
                }
                acc[p] += sgn * base * val;
                std::vector<C> dq(q.size(), C(0));
                for (std::size_t t = 0; t + 1 < q.size(); ++t) dq[t] = R(t + 1) * q[t + 1];
                for (std::size_t t = 0; t < q.size(); ++t)
                    q[t] = R(k_) * R(j) * q[t] + R(k_) * dq[t];
            }
            acc_scale = std::max(acc_scale, R(abs(base)) * q_scale);
            if (j > jmin && R(abs(base)) * q_scale < tol * acc_scale) break;
        }
        const C pref = detail::g_prefactor<C>(k_, nu);
        for (auto& v : acc) v *= pref;
        return acc;
    }

private:
    int k_;
    int jmax_;
    std::vector<real_t<C>> zeta_;
};

// Trapezoid evaluation of the vertical-line integral; throws when arg z is
// outside the convergence strip for this nu. The eta grid is built in
// working precision (a double-precision grid poisons the phase at high
// target accuracy).
template <class C>
std::vector<C> g_quadrature(int k, int nu, const real_t<C>& log_abs, const real_t<C>& arg,
                            int nder = 0, const QuadratureConfig& cfg = {}) {
    using std::exp;
    using std::log;
    using R = real_t<C>;
    const R pi = pi_v<C>();
    const int f = 2 * nu - 2 - k;
    const R ap = R(k) * pi / 2 + pi * R(f) + R(k) * arg;
    const R am = R(k) * pi / 2 - pi * R(f) - R(k) * arg;
    if (!(ap > R(1) / 20 && am > R(1) / 20))
        throw std::domain_error("arg z outside the convergence sector of g");

    const R digits = cfg.tail_log10 > 0 ? R(cfg.tail_log10) : R(digits10_v<C>() + 6);
    const R target = digits * log(R(10));
    const R eta_max = cfg.eta_max > 0 ? R(cfg.eta_max) : std::max(target / ap, target / am) + R(12);
    const R h = R(cfg.h);
    const long n = static_cast<long>(double(eta_max / h)) + 1;
    const C L = make_c<C>(log_abs, arg);
    const R c = R(cfg.c);

    std::vector<C> acc(static_cast<std::size_t>(nder) + 1, C(0));
    for (long m = -n; m <= n; ++m) {
        const C s = make_c<C>(-c, h * R(m));
        const C lg = R(k) * lngamma<C>(-s) + make_c<C>(R(0), pi * R(f)) * s + R(k) * s * L;
        C v = exp(lg);
        const C ks = R(k) * s;
        for (int p = 0; p <= nder; ++p) {
            acc[p] += v;
            v *= ks;
        }
    }
    const C pref = detail::g_prefactor<C>(k, nu) * C(-h / (2 * pi));
    for (auto& v : acc) v *= pref;
    return acc;
}

// Leading asymptotic term of g^(nu):
// k^{-1/2} e^{i pi (nu-1)/k} z^{-(k-1)/2} exp(k e^{2 pi i (nu-1)/k} z).
template <class C>
C g_asymptotic(int k, int nu, const real_t<C>& log_abs, const real_t<C>& arg) {
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    using R = real_t<C>;
    const R pi = pi_v<C>();
    const C L = make_c<C>(log_abs, arg);
    const R rot = 2 * pi * R(nu - 1) / R(k);
    const C u = R(k) * make_c<C>(cos(rot), sin(rot));
    const R ph = pi * R(nu - 1) / R(k);
    return C(exp(-log(R(k)) / 2)) * make_c<C>(cos(ph), sin(ph)) * exp(-(R(k) - 1) / 2 * L) *
           exp(u * exp(L));
}

}  // namespace qstokes::numeric
