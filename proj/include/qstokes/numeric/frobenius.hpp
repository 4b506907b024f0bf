#pragma once

// Local fundamental matrix Y0 = H(z) z^{mu_hat} z^R at the Fuchsian point
// z = 0, with H(z) = I + A_1 z + ... solved term by term (resonant entries
// vanish identically and are fixed to zero), and the closed form of its
// counter-clockwise monodromy e^{2 pi i mu_hat} e^{2 pi i R}.

#include <qstokes/numeric/cplx.hpp>

#include <vector>

namespace qstokes::numeric {

template <class C = Cplx>
struct LocalSolution {
    int k;
    std::vector<CMat<C>> h;        // H coefficients A_0 = I, A_1, ...
    real_t<C> resonance_defect;    // largest |rhs| seen at a resonant entry

    // Y0(z) for small |z| on the principal sheet.
    CMat<C> eval(const C& z) const {
        using std::exp;
        using std::log;
        using R = real_t<C>;
        const C lz = log(z);
        CMat<C> hh(k);
        C zp(1);
        for (const CMat<C>& a : h) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) hh(i, j) += a(i, j) * zp;
            zp *= z;
        }
        CMat<C> zmu(k);
        for (int i = 0; i < k; ++i) zmu(i, i) = exp(((R(k) - 1) / 2 - R(i)) * lz);
        // z^R = exp(R log z), R nilpotent with k on the superdiagonal
        CMat<C> zr(k);
        for (int i = 0; i < k; ++i) {
            C term(1);
            zr(i, i) = term;
            for (int p = 1; i + p < k; ++p) {
                term *= R(k) * lz / R(p);
                zr(i, i + p) = term;
            }
        }
        return hh * zmu * zr;
    }
};

template <class C = Cplx>
LocalSolution<C> local_solution(int k, int terms = 40) {
    using std::abs;
    using R = real_t<C>;
    CMat<C> u_hat(k), rmat(k);
    std::vector<R> mu(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) mu[i] = (R(k) - 1) / 2 - R(i);
    for (int i = 0; i + 1 < k; ++i) {
        u_hat(i, i + 1) = C(R(k));
        rmat(i, i + 1) = C(R(k));
    }
    u_hat(k - 1, 0) = C(R(k));

    LocalSolution<C> sol{k, {CMat<C>::identity(k)}, R(0)};
    for (int m = 1; m <= terms; ++m) {
        const CMat<C> rhs = u_hat * sol.h.back() + (-(sol.h.back() * rmat));
        CMat<C> am(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const R d = R(m) + mu[j] - mu[i];
                if (abs(d) < R(1) / 2)
                    sol.resonance_defect = std::max(sol.resonance_defect, R(abs(rhs(i, j))));
                else
                    am(i, j) = rhs(i, j) / C(d);
            }
        sol.h.push_back(am);
    }
    return sol;
}

// e^{2 pi i mu_hat} e^{2 pi i R} = (-1)^{k-1} [(2 pi i k)^{j-i} / (j-i)!].
template <class C = Cplx>
CMat<C> monodromy_origin(int k) {
    using R = real_t<C>;
    const R pi = pi_v<C>();
    CMat<C> m(k);
    const R sgn = (k % 2) ? R(1) : R(-1);
    for (int i = 0; i < k; ++i) {
        C term(sgn);
        m(i, i) = term;
        for (int p = 1; i + p < k; ++p) {
            term *= make_c<C>(R(0), 2 * pi * R(k)) / R(p);
            m(i, i + p) = term;
        }
    }
    return m;
}

}  // namespace qstokes::numeric
