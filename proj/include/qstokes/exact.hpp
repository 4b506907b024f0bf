#pragma once

// Exact dense linear algebra over GMP integers and rationals.
// Everything here is a value type; operations return fresh matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstokes {

using Int = mpz_class;
using Rat = mpq_class;

// Canonically reduced rational; mpq_class(num, den) alone does not reduce.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// C(n, m); zero outside 0 <= m <= n.
inline Int binomial(unsigned long n, long m) {
    if (m < 0 || static_cast<unsigned long>(m) > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(m));
    return r;
}

template <class T>
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(std::size_t n) : n_(n), e_(n * n, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t t = 0; t < n_; ++t) {
                const T& a = (*this)(i, t);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < n_; ++j) r(i, j) += a * o(t, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] = -e_[i];
        return r;
    }

    Matrix pow(unsigned long p) const {
        Matrix r = identity(n_);
        for (unsigned long i = 0; i < p; ++i) r = r * (*this);
        return r;
    }

private:
    std::size_t n_;
    std::vector<T> e_;
};

using IMat = Matrix<Int>;
using QMat = Matrix<Rat>;

inline QMat to_rational(const IMat& a) {
    QMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

// Gauss-Jordan inverse over the rationals. Throws on singular input.
inline QMat inverse(const QMat& a) {
    const std::size_t n = a.size();
    QMat m = a, inv = QMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        const Rat d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const Rat f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Integer matrix inverse; requires the exact inverse to be integral
// (all matrices of interest here are unimodular).
inline IMat inverse(const IMat& a) {
    QMat qi = inverse(to_rational(a));
    IMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Rat& q = qi(i, j);
            if (q.get_den() != 1) throw std::domain_error("inverse is not integral");
            r(i, j) = q.get_num();
        }
    return r;
}

// Fraction-free (Bareiss) determinant; exact, no rational blow-up.
inline Int det(const IMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return Int(1);
    IMat m = a;
    Int prev(1);
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r)
            for (std::size_t j = c + 1; j < n; ++j) {
                Int t = m(r, j) * m(c, c) - m(r, c) * m(c, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(r, j) = t;
            }
        for (std::size_t r = c + 1; r < n; ++r) m(r, c) = 0;
        prev = m(c, c);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

inline Rat det(const QMat& a) {
    const std::size_t n = a.size();
    QMat m = a;
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        const Rat pv = m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            const Rat f = m(r, c) / pv;
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

namespace detail {

// Reduced row echelon form; returns pivot column per row.
inline std::vector<std::size_t> rref(QMat& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(r, j));
        const Rat pv = m(r, c);
        for (std::size_t j = 0; j < n; ++j) m(r, j) /= pv;
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == r || m(rr, c) == 0) continue;
            const Rat f = m(rr, c);
            for (std::size_t j = 0; j < n; ++j) m(rr, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const QMat& a) {
    QMat m = a;
    return detail::rref(m).size();
}

// Nonzero kernel vector when rank = n-1, scaled to primitive integers with
// positive last nonzero coordinate; nullopt when the matrix is regular.
// Throws when the kernel has dimension > 1 (not expected for any input here).
inline std::optional<std::vector<Int>> kernel_vector(const QMat& a) {
    const std::size_t n = a.size();
    QMat m = a;
    const std::vector<std::size_t> pivots = detail::rref(m);
    if (pivots.size() == n) return std::nullopt;
    if (pivots.size() + 1 != n) throw std::domain_error("kernel dimension exceeds 1");
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> z(n, Rat(0));
    z[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -m(r, free_col);
    Int lcm(1);
    for (const Rat& q : z) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> zi(n);
    Int gcd(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rat scaled = z[i] * Rat(lcm);
        zi[i] = scaled.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), zi[i].get_mpz_t());
    }
    for (auto& x : zi) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), gcd.get_mpz_t());
    std::size_t last = n;
    for (std::size_t i = n; i-- > 0;)
        if (zi[i] != 0) {
            last = i;
            break;
        }
    if (zi[last] < 0)
        for (auto& x : zi) x = -x;
    return zi;
}

}  // namespace qstokes
