#pragma once

#include <vector>

#include "porism/polynomial.hpp"
#include "porism/scalar.hpp"

namespace porism {

// Dense square matrix, row-major.
template <class K>
class SquareMatrix {
public:
    explicit SquareMatrix(size_t n) : n_(n), a_(n * n, K{}) {
        if (n == 0) fail("DomainError", "matrix size must be >= 1");
    }
    SquareMatrix(size_t n, std::vector<K> entries) : n_(n), a_(std::move(entries)) {
        if (n == 0 || a_.size() != n * n) fail("DomainError", "bad matrix entry count");
    }
    static SquareMatrix diagonal(std::vector<K> d) {
        SquareMatrix m(d.size());
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }
    static SquareMatrix identity(size_t n) {
        SquareMatrix m(n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = K{1};
        return m;
    }

    size_t size() const { return n_; }
    K& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i + 1; j < n_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    friend SquareMatrix operator*(const K& k, const SquareMatrix& m) {
        SquareMatrix r(m.n_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = k * m.a_[i];
        return r;
    }
    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r(a.n_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    size_t n_;
    std::vector<K> a_;
};

// Fraction-free (Bareiss) determinant; exact over any field or integral
// domain with exact division. Keeps intermediate entries small over Q/Z.
inline Rational det_bareiss(SquareMatrix<Rational> m) {
    const size_t n = m.size();
    Rational sign(1), prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Rational(0);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Partial-pivot LU determinant for the floating instantiations.
template <class K>
K det_lu(SquareMatrix<K> m, double tol = kDefaultTol) {
    const size_t n = m.size();
    K det{1};
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        double best = scalar_traits<K>::magnitude(m.at(k, k));
        for (size_t i = k + 1; i < n; ++i) {
            const double v = scalar_traits<K>::magnitude(m.at(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best <= tol) return K{0};
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            det = -det;
        }
        det = det * m.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            const K f = m.at(i, k) / m.at(k, k);
            for (size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return det;
}

// Division-free cofactor determinant; works for polynomial entries. Cost n!,
// meant for the 3x3 / 4x4 pencils here.
template <class K>
K det_cofactor(const SquareMatrix<K>& m) {
    const size_t n = m.size();
    if (n == 1) return m.at(0, 0);
    K acc{};
    for (size_t j = 0; j < n; ++j) {
        SquareMatrix<K> minor(n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const K term = m.at(0, j) * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline Rational det(const SquareMatrix<Rational>& m) { return det_bareiss(m); }
inline double det(const SquareMatrix<double>& m, double tol = kDefaultTol) { return det_lu(m, tol); }
inline std::complex<double> det(const SquareMatrix<std::complex<double>>& m, double tol = kDefaultTol) {
    return det_lu(m, tol);
}

// Adjugate (transposed cofactor matrix): adj(M) * M = det(M) * I.
template <class K>
SquareMatrix<K> adjugate(const SquareMatrix<K>& m) {
    const size_t n = m.size();
    SquareMatrix<K> out(n);
    if (n == 1) {
        out.at(0, 0) = K{1};
        return out;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            SquareMatrix<K> minor(n - 1);
            size_t rr = 0;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                size_t cc = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            const K cof = det_cofactor(minor);
            out.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return out;
}

// det(t*A + B) as an exact polynomial in t.
template <Scalar K>
Polynomial<K> pencil_det(const SquareMatrix<K>& a, const SquareMatrix<K>& b) {
    const size_t n = a.size();
    if (b.size() != n) fail("DomainError", "pencil of mismatched sizes");
    using PK = Polynomial<K>;
    SquareMatrix<PK> m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = PK({b.at(i, j), a.at(i, j)});
    return det_cofactor(m);
}

} // namespace porism
