#pragma once

// Braid group action on upper unitriangular Stokes matrices, the
// canonicalizing braids for S and S^{-1}, the direct binomial template for
// the canonical braid matrix, the diagonal-by-diagonal factorization of an
// upper unitriangular matrix, and the braid identity relating S^{-1} to S.

#include <qstokes/exact.hpp>
#include <qstokes/stokes.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qstokes {

struct BraidGenerator {
    int index;  // i in beta_{i,i+1}, 1-based, 1 <= i <= k-1
    int sign;   // +1 for beta, -1 for sigma = beta^{-1}
};

using BraidWord = std::vector<BraidGenerator>;

// Compact text form: "b12 s45" = beta_{12} sigma_{45}. The digits name the
// pair (i, i+1); a lone index is also accepted ("b3" = beta_{34}).
inline std::string to_string(const BraidWord& w) {
    std::ostringstream os;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) os << ' ';
        os << (w[t].sign > 0 ? 'b' : 's') << w[t].index << (w[t].index + 1);
    }
    return os.str();
}

inline BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 's'))
            throw std::invalid_argument("bad braid token: " + tok);
        const int sign = tok[0] == 'b' ? 1 : -1;
        const std::string digits = tok.substr(1);
        for (char c : digits)
            if (c < '0' || c > '9') throw std::invalid_argument("bad braid token: " + tok);
        int index = -1;
        for (std::size_t cut = 1; cut < digits.size(); ++cut) {
            const int a = std::stoi(digits.substr(0, cut));
            const int b = std::stoi(digits.substr(cut));
            if (b == a + 1) {
                index = a;
                break;
            }
        }
        if (index < 0) {
            if (digits.size() <= 2) index = std::stoi(digits);  // lone index form
            if (index <= 0) throw std::invalid_argument("bad braid token: " + tok);
        }
        w.push_back(BraidGenerator{index, sign});
    }
    return w;
}

// Matrix of the elementary braid acting on an upper unitriangular S.
// beta_{i,i+1}: diag 1 except (i+1,i+1) = -s_{i,i+1}, plus the (i,i+1) and
// (i+1,i) unit entries; the inverse braid puts -s_{i,i+1} at (i,i).
inline IMat elementary_matrix(const IMat& s, int i, int sign) {
    const int k = static_cast<int>(s.size());
    if (i < 1 || i >= k) throw std::invalid_argument("braid index out of range");
    IMat a = IMat::identity(k);
    a(i - 1, i - 1) = 0;
    a(i, i) = 0;
    a(i - 1, i) = 1;
    a(i, i - 1) = 1;
    if (sign > 0)
        a(i, i) = -s(i - 1, i);
    else
        a(i - 1, i - 1) = -s(i - 1, i);
    return a;
}

struct BraidCertificate {
    BraidWord word;
    IMat a;        // accumulated A^beta(S)
    IMat s_before;
    IMat s_after;  // = a * s_before * a^T
};

// Fold the word left to right: the first generator of the word acts first,
// and A accumulates as A_new = A_elem * A.
inline BraidCertificate apply_braid(const IMat& s, const BraidWord& w) {
    const int k = static_cast<int>(s.size());
    BraidCertificate cert{w, IMat::identity(k), s, s};
    for (const BraidGenerator& g : w) {
        const IMat ai = elementary_matrix(cert.s_after, g.index, g.sign);
        cert.s_after = ai * cert.s_after * ai.transpose();
        cert.a = ai * cert.a;
    }
    return cert;
}

// Braid that brings the lexicographically ordered points into cyclic
// counter-clockwise order. Inner sequences m = 1.. (k/2-2 even, (k-5)/2 odd)
// run i = k-4-m down to m; the final sequence runs i = k-3 down to 1.
// Degenerate sequences are empty (the word is empty for k = 3).
inline BraidWord canonical_braid(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    BraidWord w;
    const int inner = (k % 2 == 0) ? k / 2 - 2 : (k - 5) / 2;
    for (int m = 1; m <= inner; ++m)
        for (int i = k - 4 - m; i >= m; --i) w.push_back(BraidGenerator{i, +1});
    for (int i = k - 3; i >= 1; --i) w.push_back(BraidGenerator{i, +1});
    return w;
}

// Braid for S^{-1}: arranges the points in cyclic clockwise order. Two
// blocks of inverse generators; k odd prepends beta_{12}.
inline BraidWord inverse_canonical_braid(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    BraidWord w;
    const int start = (k % 2 == 0) ? 3 : 4;
    if (k % 2 == 1) w.push_back(BraidGenerator{1, +1});
    for (int j = 0; start + j <= k - 1 - j; ++j)
        for (int i = start + j; i <= k - 1 - j; i += 2) w.push_back(BraidGenerator{i, -1});
    const int top = (k % 2 == 0) ? k / 2 + 2 : (k + 5) / 2;
    for (int r = k - 1; r >= top; --r)
        for (int i = top; i <= r; ++i) w.push_back(BraidGenerator{i, -1});
    return w;
}

// Coefficients a_{ij} of the unique factorization
//   s_{ij} = sum over chains i = c_0 < ... < c_m = j of prod a_{c_t c_{t+1}}
// where interior chain nodes are even (k even) or odd (k odd), 1-based.
// Solved diagonal by diagonal; the map key is (i, j).
class UpperFactorization {
public:
    explicit UpperFactorization(const IMat& s) : k_(static_cast<int>(s.size())) {
        const int parity = (k_ % 2 == 0) ? 0 : 1;
        for (int d = 1; d < k_; ++d)
            for (int i = 1; i + d <= k_; ++i) {
                const int j = i + d;
                a_[{i, j}] = s(i - 1, j - 1) - chain_sum(i, j, parity, true);
            }
    }

    const Int& coeff(int i, int j) const { return a_.at({i, j}); }

    IMat reconstruct() const {
        IMat s = IMat::identity(k_);
        const int parity = (k_ % 2 == 0) ? 0 : 1;
        for (int i = 1; i <= k_; ++i)
            for (int j = i + 1; j <= k_; ++j)
                s(i - 1, j - 1) = a_.at({i, j}) + chain_sum(i, j, parity, true);
        return s;
    }

private:
    Int chain_sum(int i, int j, int parity, bool require_interior) const {
        // chains with at least one interior node of the given parity
        std::vector<int> mids;
        for (int c = i + 1; c < j; ++c)
            if (c % 2 == parity) mids.push_back(c);
        Int total(0);
        const std::size_t subsets = std::size_t{1} << mids.size();
        for (std::size_t bits = require_interior ? 1 : 0; bits < subsets; ++bits) {
            Int prod(1);
            int prev = i;
            for (std::size_t t = 0; t < mids.size(); ++t)
                if (bits >> t & 1) {
                    prod *= a_.at({prev, mids[t]});
                    prev = mids[t];
                }
            prod *= a_.at({prev, j});
            total += prod;
        }
        return total;
    }

    int k_;
    std::map<std::pair<int, int>, Int> a_;
};

// Direct binomial template for the canonical braid matrix, built from the
// factorization coefficients of S_upper (equivalently the entries of
// P (sum of Stokes factors) P^{-1}).
inline IMat canonical_braid_matrix(int k) {
    const IMat su = upper_S(k);
    UpperFactorization fac(su);
    IMat a(k);
    a(k - 2, k - 2) = 1;
    a(k - 1, k - 1) = 1;
    if (k % 2 == 0) {
        for (int i = 1; i <= k / 2 - 1; ++i) {
            a(k / 2 - i - 1, 2 * i - 1) = 1;
            for (int j = 2 * i + 2; j <= k - 2; j += 2)
                a(k / 2 - i - 1, j - 1) = -fac.coeff(2 * i, j);
        }
        for (int i = 0; i <= k / 2 - 2; ++i) {
            a(k / 2 + i - 1, 2 * i) = 1;
            for (int j = 2 * i + 2; j <= k - 2; j += 2)
                a(k / 2 + i - 1, j - 1) = -fac.coeff(2 * i + 1, j);
        }
    } else {
        for (int i = 0; i <= (k - 3) / 2; ++i) {
            a((k - 1) / 2 - i - 1, 2 * i) = 1;
            for (int j = 2 * i + 3; j <= k - 2; j += 2)
                a((k - 1) / 2 - i - 1, j - 1) = -fac.coeff(2 * i + 1, j);
        }
        for (int i = 1; i <= (k - 3) / 2; ++i) {
            a((k - 1) / 2 + i - 1, 2 * i - 1) = 1;
            for (int j = 2 * i + 1; j <= k - 2; j += 2)
                a((k - 1) / 2 + i - 1, j - 1) = -fac.coeff(2 * i, j);
        }
    }
    return a;
}

// Direct binomial template for the matrix of the inverse-canonical braid.
// k even: rows 1,2 are identity rows; rows r = 3..k/2+1 carry
// -C(k, r+t) at columns 3+2t with a trailing 1 at column 2r-2; rows
// r = k/2+2..k carry +C(k, r+t) with the 1 at column 3+2(k-r).
// k odd: rows 1,2 form the block [[0,1],[1,C(k,1)]], row 3 is the identity
// row, and the signed rows start at column 4 with the 1 at 2r-3
// respectively 4+2(k-r).
inline IMat inverse_canonical_braid_matrix(int k) {
    IMat a(k);
    if (k % 2 == 0) {
        a(0, 0) = 1;
        a(1, 1) = 1;
        for (int r = 3; r <= k / 2 + 1; ++r) {
            for (int t = 0; t <= r - 3; ++t) a(r - 1, 2 + 2 * t) = -binomial(k, r + t);
            a(r - 1, 2 * r - 3) = 1;
        }
        for (int r = k / 2 + 2; r <= k; ++r) {
            for (int t = 0; t <= k - 1 - r; ++t) a(r - 1, 2 + 2 * t) = binomial(k, r + t);
            a(r - 1, 2 + 2 * (k - r)) = 1;
        }
    } else {
        a(0, 1) = 1;
        a(1, 0) = 1;
        a(1, 1) = binomial(k, 1);
        a(2, 2) = 1;
        for (int r = 4; r <= (k + 3) / 2; ++r) {
            for (int t = 0; t <= r - 4; ++t) a(r - 1, 3 + 2 * t) = -binomial(k, r + t);
            a(r - 1, 2 * r - 4) = 1;
        }
        for (int r = (k + 5) / 2; r <= k; ++r) {
            for (int t = 0; t <= k - 1 - r; ++t) a(r - 1, 3 + 2 * t) = binomial(k, r + t);
            a(r - 1, 3 + 2 * (k - r)) = 1;
        }
    }
    return a;
}

struct SignMatrix {
    std::vector<int> diag;  // entries +-1

    IMat matrix() const {
        IMat m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }
    IMat conjugate(const IMat& s) const {
        const IMat d = matrix();
        return d * s * d;
    }
};

struct CanonicalResult {
    BraidCertificate cert;   // action on S_upper (or S_upper^{-1})
    SignMatrix signs;        // conjugation making every entry positive
    IMat canonical;          // cert.s_after conjugated: s_{ij} = C(k, j-i)
};

// Theorem-2 pipeline: apply the canonical braid to S_upper; the result has
// binomial entries with negative last column, fixed by diag(1,...,1,-1).
inline CanonicalResult to_canonical(int k) {
    CanonicalResult r{apply_braid(upper_S(k), canonical_braid(k)), {}, IMat(0)};
    r.signs.diag.assign(static_cast<std::size_t>(k), 1);
    r.signs.diag.back() = -1;
    r.canonical = r.signs.conjugate(r.cert.s_after);
    return r;
}

// Theorem-2' pipeline on S_upper^{-1}: negative block for columns past
// k/2+1 (k even) or (k+3)/2 (k odd).
inline CanonicalResult inverse_canonical(int k) {
    CanonicalResult r{apply_braid(inverse(upper_S(k)), inverse_canonical_braid(k)), {}, IMat(0)};
    const int threshold = (k % 2 == 0) ? k / 2 + 1 : (k + 3) / 2;
    r.signs.diag.assign(static_cast<std::size_t>(k), 1);
    for (int j = threshold; j < k; ++j) r.signs.diag[j] = -1;
    r.canonical = r.signs.conjugate(r.cert.s_after);
    return r;
}

// Braid word beta_{12}(beta_{23}beta_{12})...(beta_{n-1,n}...beta_{12}).
inline BraidWord zaslow_braid(int n) {
    BraidWord w;
    for (int m = 1; m < n; ++m)
        for (int i = m; i >= 1; --i) w.push_back(BraidGenerator{i, +1});
    return w;
}

// Checks [S^{-1}]^beta = P S^T P with P the anti-diagonal flip; returns the
// certificate of the action on S^{-1} (callers assert the equality).
inline BraidCertificate zaslow_identity_check(const IMat& s) {
    const int n = static_cast<int>(s.size());
    BraidCertificate cert = apply_braid(inverse(s), zaslow_braid(n));
    IMat flip(n);
    for (int i = 0; i < n; ++i) flip(i, n - 1 - i) = 1;
    if (cert.s_after != flip * s.transpose() * flip)
        throw std::domain_error("braid identity for S^{-1} failed");
    return cert;
}

}  // namespace qstokes
