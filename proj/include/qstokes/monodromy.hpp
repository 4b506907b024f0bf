#pragma once

// Monodromy group of the quantum cohomology of CP^{k-1}: reflection
// generators R_j, the generator T, the group relations, the reduced
// (k-1)-dimensional representation for k even, and the hyperbolic
// triangle-group identification for k = 3, 4.

#include <qstokes/exact.hpp>
#include <qstokes/gram.hpp>
#include <qstokes/stokes.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace qstokes {

// R_j is the identity except row j: (-2G_{j1}, ..., -1 at (j,j), ..., -2G_{jk}).
inline std::vector<QMat> reflections(const GramData& gram) {
    const std::size_t n = gram.g.size();
    std::vector<QMat> rs;
    for (std::size_t j = 0; j < n; ++j) {
        QMat r = QMat::identity(n);
        for (std::size_t i = 0; i < n; ++i) r(j, i) = (i == j) ? Rat(-1) : Rat(-2) * gram.g(j, i);
        rs.push_back(r);
    }
    return rs;
}

struct MonodromyGenerators {
    int k;
    std::vector<QMat> r;  // R_1..R_k
    QMat t;

    explicit MonodromyGenerators(int kk) : k(kk), t(to_rational(build_T(kk))) {
        r = reflections(gram_from_stokes(build_S(kk)));
    }
};

struct RelationCheck {
    std::string name;
    bool holds;
    bool asserted;  // per-k printed relations and universal identities are
                    // asserted; beyond-range observations are reported only
};

namespace detail {

inline QMat qpow(const QMat& a, unsigned long p) { return a.pow(p); }

inline QMat conj_by(const QMat& x, const QMat& y) { return x * y * inverse(x); }

}  // namespace detail

// Exact relation checks. Universal identities run for any k; the per-k
// relation lists cover k = 3..7, and (TR_1)^k = -I (k odd) / +I (k even)
// is asserted for k <= 7 and reported as an observation beyond that.
inline std::vector<RelationCheck> verify_relations(int k) {
    using detail::conj_by;
    const MonodromyGenerators gen(k);
    const QMat& t = gen.t;
    const std::vector<QMat>& r = gen.r;
    const QMat id = QMat::identity(k);
    const QMat ti = inverse(t);
    std::vector<RelationCheck> out;

    for (int j = 0; j < k; ++j)
        out.push_back({"R" + std::to_string(j + 1) + "^2 = I", r[j] * r[j] == id, true});

    // Coxeter identity: T^k = (-1)^k R_{o(1)} ... R_{o(k)}, o = lex order.
    {
        QMat prod = id;
        std::string name = "T^k = " + std::string(k % 2 ? "-" : "") + "(";
        for (int label : lex_order(k)) {
            prod = prod * r[label - 1];
            name += "R" + std::to_string(label);
        }
        name += ")";
        if (k % 2) prod = -prod;
        out.push_back({name, detail::qpow(t, k) == prod, true});
    }

    // Corollary-2 consistency: T^k = (-1)^{k-1} S^{-1} S^T.
    {
        const IMat s = build_S(k);
        QMat rhs = to_rational(inverse(s) * s.transpose());
        if (k % 2 == 0) rhs = -rhs;
        out.push_back({"T^k = (-1)^(k-1) S^-1 S^T", detail::qpow(t, k) == rhs, true});
    }

    {
        const QMat p = detail::qpow(t * r[0], k);
        const bool expect_minus = (k % 2 == 1);
        const bool holds = p == (expect_minus ? -id : id);
        out.push_back({std::string("(TR1)^k = ") + (expect_minus ? "-I" : "I"), holds, k <= 7});
    }

    auto add = [&](const std::string& name, const QMat& lhs, const QMat& rhs) {
        out.push_back({name, lhs == rhs, true});
    };
    if (k == 3) {
        add("R2 = T R1 T^-1", r[1], conj_by(t, r[0]));
        add("R3 = T (R1 R2 R1) T^-1", r[2], conj_by(t, r[0] * r[1] * r[0]));
    } else if (k == 4) {
        add("R2 = T R1 T^-1", r[1], conj_by(t, r[0]));
        add("R3 = T R2 T^-1", r[2], conj_by(t, r[1]));
        add("R4 = T^-1 (R2 R1 R2) T", r[3], conj_by(ti, r[1] * r[0] * r[1]));
    } else if (k == 5) {
        add("R2 = T R1 T^-1", r[1], conj_by(t, r[0]));
        add("R3 = T R2 T^-1", r[2], conj_by(t, r[1]));
        add("R4 = T (R2 R3 R2) T^-1", r[3], conj_by(t, r[1] * r[2] * r[1]));
        add("R5 = T^-1 (R2 R1 R2) T", r[4], conj_by(ti, r[1] * r[0] * r[1]));
    } else if (k == 6) {
        add("R2 = T R1 T^-1", r[1], conj_by(t, r[0]));
        add("R3 = T R2 T^-1", r[2], conj_by(t, r[1]));
        add("R4 = T R3 T^-1", r[3], conj_by(t, r[2]));
        add("R5 = T (R2 R3 R4 R3 R2) T^-1", r[4], conj_by(t, r[1] * r[2] * r[3] * r[2] * r[1]));
        add("R6 = T^-1 (R2 R1 R2) T", r[5], conj_by(ti, r[1] * r[0] * r[1]));
    } else if (k == 7) {
        add("R2 = T R1 T^-1", r[1], conj_by(t, r[0]));
        add("R3 = T R2 T^-1", r[2], conj_by(t, r[1]));
        add("R4 = T R3 T^-1", r[3], conj_by(t, r[2]));
        add("R5 = T (R3 R4 R3) T^-1", r[4], conj_by(t, r[2] * r[3] * r[2]));
        add("R6 = T(TR1)^3 R2 [T(TR1)^3]^-1", r[5],
            conj_by(t * detail::qpow(t * r[0], 3), r[1]));
        add("R7 = T^-2 (R3 R2 R3) T^2", r[6], conj_by(inverse(detail::qpow(t, 2)), r[2] * r[1] * r[2]));
    }
    return out;
}

// Reduced (k-1)-dimensional representation on the basis
// phi^(1), ..., phi^(k-1), phi_0 for k even: phi^(k) is eliminated via the
// kernel vector z of G (z_k != 0 required).
struct ReducedRepresentation {
    std::vector<QMat> r;  // k matrices of size (k-1)
    QMat t;
};

inline ReducedRepresentation reduced_representation(int k) {
    if (k % 2 != 0) throw std::invalid_argument("reduced representation needs k even");
    const GramData gram = gram_from_stokes(build_S(k));
    if (!gram.kernel) throw std::domain_error("G is regular; no reduction");
    const std::vector<Int>& z = *gram.kernel;
    if (z.back() == 0) throw std::domain_error("kernel vector has vanishing last coordinate");
    const std::size_t n = static_cast<std::size_t>(k);
    const std::vector<QMat> full = reflections(gram);
    const QMat t = to_rational(build_T(k));

    ReducedRepresentation red;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        QMat m(n - 1);
        for (std::size_t a = 0; a + 1 < n; ++a)
            for (std::size_t b = 0; b + 1 < n; ++b) m(a, b) = full[j](a, b);
        red.r.push_back(m);
    }
    // R_k sends phi^(i) to phi^(i) + 2 G_{ik} (1/z_k) sum_j z_j phi^(j)
    QMat rk(n - 1);
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = 0; b + 1 < n; ++b) {
            rk(a, b) = (a == b) ? Rat(1) : Rat(0);
            rk(a, b) += Rat(2) * gram.g(b, n - 1) * Rat(z[a]) / Rat(z[n - 1]);
        }
    red.r.push_back(rk);

    QMat rt(n - 1);
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = 0; b + 1 < n; ++b)
            rt(a, b) = t(a, b) - Rat(z[a]) / Rat(z[n - 1]) * t(n - 1, b);
    red.t = rt;
    return red;
}

// Moebius transformation tau -> (a tau + b)/(c tau + d) on the upper half
// plane.
struct MoebiusMap {
    double a, b, c, d;

    std::complex<double> operator()(std::complex<double> tau) const {
        return (a * tau + b) / (c * tau + d);
    }
    MoebiusMap compose(const MoebiusMap& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    // proportional up to real scalar (PSL(2,R) equality)
    bool proportional_to(const MoebiusMap& o, double tol) const {
        const double n1 = std::sqrt(a * a + b * b + c * c + d * d);
        const double n2 = std::sqrt(o.a * o.a + o.b * o.b + o.c * o.c + o.d * o.d);
        const double dot = (a * o.a + b * o.b + c * o.c + d * o.d) / (n1 * n2);
        const double s = dot >= 0 ? 1.0 : -1.0;
        double err = 0;
        const double va[4] = {a / n1, b / n1, c / n1, d / n1};
        const double vb[4] = {o.a / n2, o.b / n2, o.c / n2, o.d / n2};
        for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(va[i] - s * vb[i]));
        return err <= tol;
    }
};

// X: tau -> -1/tau and Y: tau -> 1/(2 cos(pi/k) - tau); X^2 = Y^k = id in
// PSL(2, R).
inline std::pair<MoebiusMap, MoebiusMap> triangle_generators(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    const MoebiusMap x{0, -1, 1, 0};
    const MoebiusMap y{0, 1, -1, 2 * std::cos(3.14159265358979323846 / k)};
    return {x, y};
}

struct Theorem3Report {
    int k;
    double max_identity_error;   // Moebius-action identities on the samples
    double max_quadratic_error;  // |q - a^2| or |q - (8/9) a^2|
};

// Explicit tau-parametrizations from the k = 3 and k = 4 monodromy-group
// identifications. The overall scale of x is normalized so the invariant
// quadratic form q = x^T G x evaluates to a^2 (k = 3) and (8/9) a^2 (k = 4).
inline Theorem3Report theorem3_check(int k, const std::vector<std::complex<double>>& samples,
                                     double amplitude = 1.0) {
    using C = std::complex<double>;
    if (k != 3 && k != 4) throw std::invalid_argument("explicit parametrization known for k = 3, 4");
    Theorem3Report rep{k, 0.0, 0.0};
    const double a = amplitude;

    const auto mat3 = [](const QMat& q) {
        std::vector<std::vector<double>> m(q.size(), std::vector<double>(q.size()));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = q(i, j).get_d();
        return m;
    };
    const auto apply = [](const std::vector<std::vector<double>>& m, const std::vector<C>& v) {
        std::vector<C> out(v.size(), C(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
        return out;
    };
    const auto maxdiff = [](const std::vector<C>& u, const std::vector<C>& v) {
        double e = 0;
        for (std::size_t i = 0; i < u.size(); ++i) e = std::max(e, std::abs(u[i] - v[i]));
        return e;
    };

    if (k == 3) {
        const MonodromyGenerators gen(3);
        const auto X = mat3(gen.r[0]);
        QMat yq = -(gen.t * gen.r[0]);
        const auto Y = mat3(yq);
        const auto G = mat3(gram_from_stokes(build_S(3)).g);
        const auto param = [&](C tau, double amp) {
            const C tb = std::conj(tau);
            const C f = C(0, 1) / (tau - tb);
            return std::vector<C>{amp * (tau * tb - 1.5 * (tau + tb) + 1.0) * f,
                                  amp * (tau * tb - 0.5 * (tau + tb) - 1.0) * f,
                                  amp * (-tau * tb - 0.5 * (tau + tb) + 1.0) * f};
        };
        for (C tau : samples) {
            const auto v = param(tau, a);
            auto lhs = param(-1.0 / tau, a);
            auto rhs = apply(X, v);
            for (auto& c : rhs) c = -c;
            rep.max_identity_error = std::max(rep.max_identity_error, maxdiff(lhs, rhs));
            lhs = param(1.0 / (1.0 - tau), a);
            rhs = apply(Y, v);
            rep.max_identity_error = std::max(rep.max_identity_error, maxdiff(lhs, rhs));
            lhs = param(tau, -a);
            rhs = v;
            for (auto& c : rhs) c = -c;
            rep.max_identity_error = std::max(rep.max_identity_error, maxdiff(lhs, rhs));
            C q(0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) q += v[i] * G[i][j] * v[j];
            rep.max_quadratic_error = std::max(rep.max_quadratic_error, std::abs(q - a * a));
        }
    } else {
        const ReducedRepresentation red = reduced_representation(4);
        const auto X = mat3(red.r[0]);
        const auto Y = mat3(red.t * red.r[0]);
        const auto G = mat3(gram_from_stokes(build_S(4)).g);  // upper-left 3x3 used
        const double s2 = std::sqrt(2.0);
        const double scale = s2;  // normalizes q to (8/9) a^2
        const auto param = [&](C tau, double amp) {
            const C tb = std::conj(tau);
            const C f = C(0, 1) / (tau - tb);
            return std::vector<C>{scale * amp * (tau * tb - (tau + tb) / s2 + 1.0 / 3.0) * f,
                                  scale * amp * (-2.0 / 3.0 * tau * tb - 2.0 * s2 / 3.0 * (tau + tb) + 2.0 / 3.0) * f,
                                  scale * amp * (-1.0 / 3.0 * tau * tb - s2 / 6.0 * (tau + tb) + 1.0 / 3.0) * f};
        };
        for (C tau : samples) {
            const auto v = param(tau, a);
            auto lhs = param(-1.0 / tau, a);
            auto rhs = apply(X, v);
            for (auto& c : rhs) c = -c;
            rep.max_identity_error = std::max(rep.max_identity_error, maxdiff(lhs, rhs));
            lhs = param(1.0 / (s2 - tau), a);
            rhs = apply(Y, v);
            for (auto& c : rhs) c = -c;
            rep.max_identity_error = std::max(rep.max_identity_error, maxdiff(lhs, rhs));
            C q(0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) q += v[i] * G[i][j] * v[j];
            rep.max_quadratic_error =
                std::max(rep.max_quadratic_error, std::abs(q - 8.0 / 9.0 * a * a));
        }
    }
    return rep;
}

}  // namespace qstokes
