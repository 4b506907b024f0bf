#pragma once

// Euler-form Gram matrices of the exceptional collection O, O(1), ..., O(d)
// on CP^d, and the reflection Gram matrix G = (S + S^T)/2.

#include <qstokes/braid.hpp>
#include <qstokes/exact.hpp>
#include <qstokes/stokes.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qstokes {

// chi(O(i-1), O(j-1)) = C(d+j-i, j-i) above the unit diagonal.
inline IMat gram_chi(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const int n = d + 1;
    IMat m = IMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = binomial(d + j - i, j - i);
    return m;
}

// Inverse of gram_chi: (-1)^{j-i} C(d+1, j-i) above the diagonal.
inline IMat gram_chi_inverse(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const int n = d + 1;
    IMat m = IMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = binomial(d + 1, j - i);
            if ((j - i) % 2) m(i, j) = -m(i, j);
        }
    if (m * gram_chi(d) != IMat::identity(n)) throw std::logic_error("gram inverse mismatch");
    return m;
}

struct GramData {
    QMat g;                                // (S + S^T)/2
    std::size_t rank;
    std::optional<std::vector<Int>> kernel;  // primitive integer vector when singular
};

inline GramData gram_from_stokes(const IMat& s) {
    const std::size_t n = s.size();
    const IMat st = s.transpose();
    QMat g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = make_rat(s(i, j) + st(i, j), Int(2));
    GramData d{g, rank(g), std::nullopt};
    if (d.rank < n) d.kernel = kernel_vector(g);
    return d;
}

struct MainTheoremReport {
    int k;
    bool canonical_is_binomial;      // I-conjugated canonical form = C(k, j-i)
    bool alternating_is_chi_inverse; // alternating conjugation = gram_chi_inverse(k-1)
    bool inverse_route_agrees;       // Theorem-2' pipeline reaches the same form
    bool chi_braid_self_inverse;     // [chi^{-1}]^beta = P chi^T P
    bool all() const {
        return canonical_is_binomial && alternating_is_chi_inverse && inverse_route_agrees &&
               chi_braid_self_inverse;
    }
};

// The headline equivalence: the canonicalized Stokes matrix is the Euler
// form of the exceptional collection, in both sign normalizations.
inline MainTheoremReport verify_main_theorem(int k) {
    MainTheoremReport rep{k, false, false, false, false};
    const CanonicalResult can = to_canonical(k);
    IMat binom = IMat::identity(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) binom(i, j) = binomial(k, j - i);
    rep.canonical_is_binomial = can.canonical == binom;

    SignMatrix alt;
    for (int i = 0; i < k; ++i) alt.diag.push_back(i % 2 == 0 ? -1 : 1);
    rep.alternating_is_chi_inverse = alt.conjugate(can.canonical) == gram_chi_inverse(k - 1);

    rep.inverse_route_agrees = inverse_canonical(k).canonical == binom;

    try {
        zaslow_identity_check(gram_chi(k - 1));
        rep.chi_braid_self_inverse = true;
    } catch (const std::domain_error&) {
        rep.chi_braid_self_inverse = false;
    }
    return rep;
}

}  // namespace qstokes
