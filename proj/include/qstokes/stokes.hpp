#pragma once

// Stokes data for the quantum cohomology of CP^{k-1}: the two seed Stokes
// factors, the cyclic symmetry T_F, the k-th root monodromy T, the Stokes
// matrix S, the lexicographic permutation and the upper-triangular form.

#include <qstokes/exact.hpp>

#include <cassert>
#include <cstddef>
#include <utility>

namespace qstokes {

// Dimension k of the system (quantum cohomology of CP^{k-1}, d = k-1).
struct StokesProblem {
    int k;
    std::vector<Rat> mu_hat;   // diag((k-1)/2, (k-3)/2, ..., -(k-1)/2)
    IMat nilpotent_r;          // k on the first superdiagonal
    IMat eta;                  // anti-diagonal 0/1

    explicit StokesProblem(int kk) : k(kk), nilpotent_r(kk), eta(kk) {
        if (k < 3) throw std::invalid_argument("k must be >= 3");
        for (int i = 0; i < k; ++i) {
            mu_hat.push_back(make_rat(k - 1 - 2 * i, 2));
            eta(i, k - 1 - i) = 1;
            if (i + 1 < k) nilpotent_r(i, i + 1) = k;
        }
    }
};

// K_{k2}: identity plus binomials C(k, 2(j-1)) at (j, k-j+2).
inline IMat stokes_factor_k2(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    IMat m = IMat::identity(k);
    const int jtop = (k % 2) ? (k + 1) / 2 : k / 2;
    for (int j = 2; j <= jtop; ++j) m(j - 1, k - j + 1) = binomial(k, 2 * (j - 1));
    return m;
}

// K_{k3}: identity, -C(k,1) at (2,1), and C(k, 2j-3) at (j, k-j+3).
inline IMat stokes_factor_k3(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    IMat m = IMat::identity(k);
    m(1, 0) = -binomial(k, 1);
    const int jtop = (k % 2) ? (k + 1) / 2 : k / 2 + 1;
    for (int j = 3; j <= jtop; ++j) m(j - 1, k - j + 2) = binomial(k, 2 * j - 3);
    return m;
}

// T_F implements z -> z e^{2 pi i / k} on the leading asymptotic basis:
// 1 at (1,k), -1 on the first subdiagonal.
inline IMat build_TF(int k) {
    IMat m(k);
    m(0, k - 1) = 1;
    for (int j = 1; j < k; ++j) m(j, j - 1) = -1;
    return m;
}

// T with T^{-1} = T_F^{-1} K_{k3} K_{k2}.
inline IMat build_T(int k) {
    return inverse(inverse(build_TF(k)) * stokes_factor_k3(k) * stokes_factor_k2(k));
}

// All Stokes factors K_0..K_{k-1} in ray order: K_{k-1} = K_{k2},
// K_{k-2} = K_{k3}, and K_{m-2} = T_F K_m T_F^{-1}.
inline std::vector<IMat> all_stokes_factors(int k) {
    const IMat tf = build_TF(k);
    const IMat tfi = inverse(tf);
    std::vector<IMat> ks(static_cast<std::size_t>(k), IMat(0));
    ks[k - 1] = stokes_factor_k2(k);
    ks[k - 2] = stokes_factor_k3(k);
    for (int m = k - 3; m >= 0; --m) ks[m] = tf * ks[m + 2] * tfi;
    return ks;
}

// Closed form for S: T_F^{k/2} T^{-k/2} for k even,
// T_F^{(k-1)/2} K_{k2} T^{-(k-1)/2} for k odd (k = 3 included; it agrees
// with the ordered factor product, which the tests assert).
inline IMat build_S(int k) {
    const IMat tf = build_TF(k);
    const IMat ti = inverse(build_T(k));
    if (k % 2 == 0) {
        const unsigned long h = static_cast<unsigned long>(k) / 2;
        return tf.pow(h) * ti.pow(h);
    }
    const unsigned long h = static_cast<unsigned long>(k - 1) / 2;
    return tf.pow(h) * stokes_factor_k2(k) * ti.pow(h);
}

namespace detail {

// Angle of the ray R_{rs} as a multiple of pi, normalized to (-1, 1].
// For r < s it is (2 - (r+s))/k; the reverse ray is opposite.
inline Rat ray_angle_over_pi(int k, int r, int s) {
    Rat q = make_rat(2 - (r + s), k);
    if (r > s) q += 1;
    mpq_class two(2);
    while (q <= -1) q += two;
    while (q > 1) q -= two;
    return q;
}

// Whether the ray lies in the right half plane Pi_R = (-pi+eps, eps),
// eps = pi/(2k).
inline bool ray_in_right_half_plane(int k, int r, int s) {
    const Rat q = ray_angle_over_pi(k, r, s);
    const Rat eps = make_rat(1, 2 * k);
    return q > eps - 1 && q < eps;
}

}  // namespace detail

// Order of u_1..u_k (1-based labels) lexicographic w.r.t. the admissible
// line at eps = pi/(2k): r comes after s exactly when R_{rs} is in Pi_R.
inline std::vector<int> lex_order(int k) {
    std::vector<int> order;
    for (int v = 1; v <= k; ++v) {
        std::size_t pos = 0;
        while (pos < order.size() && detail::ray_in_right_half_plane(k, v, order[pos])) ++pos;
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), v);
    }
    return order;
}

// Permutation matrix P with row i selecting u_{order[i]}; P S P^{-1} is
// upper triangular.
inline IMat lex_permutation(int k) {
    const std::vector<int> order = lex_order(k);
    IMat p(k);
    for (int i = 0; i < k; ++i) p(i, order[i] - 1) = 1;
    return p;
}

inline IMat upper_S(int k) {
    const IMat p = lex_permutation(k);
    return p * build_S(k) * inverse(p);
}

// Lemma 4 column: n(k) = k/2+1 (k even) or (k+1)/2 (k odd), 1-based.
inline int unit_column_index(int k) { return (k % 2 == 0) ? k / 2 + 1 : (k + 1) / 2; }

struct StokesData {
    StokesProblem problem;
    IMat k2, k3, tf, t, s, p, s_upper;
    std::vector<IMat> factors;

    explicit StokesData(int k)
        : problem(k),
          k2(stokes_factor_k2(k)),
          k3(stokes_factor_k3(k)),
          tf(build_TF(k)),
          t(build_T(k)),
          s(build_S(k)),
          p(lex_permutation(k)),
          s_upper(p * s * inverse(p)),
          factors(all_stokes_factors(k)) {}
};

// One labelled Stokes ray. The angle is q*pi + shift radians, q exact.
struct Ray {
    int r, s;
    Rat q;
};

// Stokes rays of the system at (0, t2, 0, ..., 0); Im t2 rotates every ray
// by -Im(t2)/k while the admissible line stays fixed at eps = pi/(2k).
struct RayDiagram {
    int k;
    Rat epsilon_over_pi;   // pi/(2k)
    double shift;          // -im_t2/k radians, applied uniformly
    std::vector<Ray> rays; // all ordered pairs r != s

    double angle_radians(const Ray& ray) const {
        double a = ray.q.get_d() * 3.14159265358979323846 + shift;
        const double two_pi = 2 * 3.14159265358979323846;
        while (a <= -3.14159265358979323846) a += two_pi;
        while (a > 3.14159265358979323846) a -= two_pi;
        return a;
    }
};

inline RayDiagram stokes_rays(int k, double im_t2 = 0.0) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    RayDiagram d;
    d.k = k;
    d.epsilon_over_pi = make_rat(1, 2 * k);
    d.shift = -im_t2 / k;
    for (int r = 1; r <= k; ++r)
        for (int s = 1; s <= k; ++s) {
            if (r == s) continue;
            d.rays.push_back(Ray{r, s, detail::ray_angle_over_pi(k, r, s)});
        }
    return d;
}

}  // namespace qstokes
