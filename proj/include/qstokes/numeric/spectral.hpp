#pragma once

// Eigen-frame of the constant matrix U-hat (k on the first superdiagonal and
// in the lower-left corner): eigenvalues u_n = k e^{2 pi i (n-1)/k},
// eigenvector matrix X with x^j_n = e^{(2j-1) i pi (n-1)/k}/sqrt(k), and the
// skew-symmetric V = X^{-1} mu-hat X.

#include <qstokes/numeric/cplx.hpp>
#include <qstokes/stokes.hpp>

#include <complex>

namespace qstokes::numeric {

template <class C = Cplx>
struct SpectralData {
    int k;
    CMat<C> u_hat;   // the constant system matrix
    CMat<C> u;       // diag(u_1, ..., u_k)
    CMat<C> x;       // eigenvector matrix
    CMat<C> v;       // X^{-1} mu_hat X
    real_t<C> defect_eigen;   // |X^{-1} U_hat X - U|
    real_t<C> defect_skew;    // |V + V^T|
    real_t<C> defect_eta;     // |X X^T - eta|
};

template <class C = Cplx>
SpectralData<C> spectral_data(int k) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    using R = real_t<C>;
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    const R pi = pi_v<C>();
    SpectralData<C> d{k, CMat<C>(k), CMat<C>(k), CMat<C>(k), CMat<C>(0), R(0), R(0), R(0)};
    for (int i = 0; i + 1 < k; ++i) d.u_hat(i, i + 1) = C(R(k));
    d.u_hat(k - 1, 0) = C(R(k));
    const R rk = sqrt(R(k));
    for (int n = 0; n < k; ++n) {
        const R th = 2 * pi * R(n) / R(k);
        d.u(n, n) = R(k) * make_c<C>(cos(th), sin(th));
        for (int j = 0; j < k; ++j) {
            const R ph = (2 * R(j) + 1) * pi * R(n) / R(k);
            d.x(j, n) = make_c<C>(cos(ph), sin(ph)) / rk;
        }
    }
    CMat<C> mu(k);
    for (int i = 0; i < k; ++i) mu(i, i) = C((R(k) - 1) / 2 - R(i));
    const CMat<C> xinv = solve_linear<C>(d.x, CMat<C>::identity(k));
    d.v = xinv * mu * d.x;
    d.defect_eigen = max_abs_diff<C>(xinv * d.u_hat * d.x, d.u);
    d.defect_skew = max_abs<C>(d.v + d.v.transpose());
    CMat<C> eta(k);
    for (int i = 0; i < k; ++i) eta(i, k - 1 - i) = C(1);
    d.defect_eta = max_abs_diff<C>(d.x * d.x.transpose(), eta);
    return d;
}

}  // namespace qstokes::numeric
