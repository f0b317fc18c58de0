#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "porism/matrix.hpp"
#include "porism/roots.hpp"
#include "porism/series.hpp"

namespace porism {

// Plane conic as a 3x3 symmetric matrix: x^T M x = 0.
template <Scalar K>
struct Conic {
    SquareMatrix<K> m;

    explicit Conic(SquareMatrix<K> mat) : m(std::move(mat)) {
        if (m.size() != 3) fail("DomainError", "conic needs a 3x3 matrix");
        if (!m.is_symmetric()) fail("DomainError", "conic matrix must be symmetric");
    }

    // coefficient order (c11, c12, c13, c22, c23, c33)
    static Conic from_coeffs(const std::array<K, 6>& c) {
        SquareMatrix<K> m(3);
        m.at(0, 0) = c[0];
        m.at(0, 1) = m.at(1, 0) = c[1];
        m.at(0, 2) = m.at(2, 0) = c[2];
        m.at(1, 1) = c[3];
        m.at(1, 2) = m.at(2, 1) = c[4];
        m.at(2, 2) = c[5];
        return Conic(std::move(m));
    }

    static Conic diagonal(const K& a, const K& b, const K& c) {
        return Conic(SquareMatrix<K>::diagonal({a, b, c}));
    }

    K det() const { return porism::det(m); }
};

template <Scalar K>
Conic<K> scale(const K& k, const Conic<K>& c) {
    return Conic<K>(k * c.m);
}

inline Conic<double> to_double(const Conic<Rational>& c) {
    SquareMatrix<double> m(3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = c.m.at(i, j).to_double();
    return Conic<double>(std::move(m));
}

template <Scalar K>
Eigen::Matrix3d conic_matrix_d(const Conic<K>& c) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = scalar_traits<K>::to_double(c.m.at(i, j));
    return m;
}

// g(t) = det(t C + D), exact degree-3 polynomial for nondegenerate inputs.
template <Scalar K>
Polynomial<K> pencil_cubic(const Conic<K>& c, const Conic<K>& d, double tol = kDefaultTol) {
    if (scalar_is_zero(d.det(), tol)) fail("DegeneratePencilBase", "det D = 0");
    return pencil_det(c.m, d.m);
}

// Coefficients of sqrt(g(t)/g(0)); the scale g(0) = det D is tracked by the
// caller (Hankel vanishing is scale-invariant).
template <Scalar K>
TruncatedSeries<K> pencil_series(const Conic<K>& c, const Conic<K>& d, size_t order,
                                 double tol = kDefaultTol) {
    const auto g = pencil_cubic(c, d, tol);
    const K g0 = g.coeff(0);
    std::vector<K> s(order + 1, scalar_traits<K>::zero());
    for (size_t i = 0; i <= order; ++i) s[i] = g.coeff(i) / g0;
    return series_sqrt(TruncatedSeries<K>(std::move(s)), order);
}

// Adjugate conic: points of the dual are the lines tangent to the original.
// dual(dual(C)) = det(C) * C.
template <Scalar K>
Conic<K> dual_conic(const Conic<K>& c, double tol = kDefaultTol) {
    if (scalar_is_zero(c.det(), tol)) fail("DegenerateConic", "dual of a singular conic");
    return Conic<K>(adjugate(c.m));
}

namespace detail {

using Vec3c = Eigen::Vector3cd;

// Split a degenerate (rank <= 2) complex symmetric conic into two lines via
// the adjugate: adj(M) = -p p^T with p the singular point, and M + [p]_x has
// rank one with rows/columns proportional to the two lines.
inline std::pair<Vec3c, Vec3c> split_degenerate_conic(const Eigen::Matrix3cd& m) {
    Eigen::Matrix3cd b;
    // adjugate of a 3x3
    b(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    b(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    b(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    b(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    b(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    b(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    b(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    b(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    b(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    double best = 0;
    int bi = 0;
    for (int i = 0; i < 3; ++i)
        if (std::abs(b(i, i)) > best) { best = std::abs(b(i, i)); bi = i; }

    Eigen::Matrix3cd a = m;
    if (best > 1e-13 * (1.0 + m.cwiseAbs().maxCoeff())) {
        const std::complex<double> beta = std::sqrt(-b(bi, bi));
        const Vec3c p = b.col(bi) / beta;
        Eigen::Matrix3cd px;
        px << 0, p(2), -p(1), -p(2), 0, p(0), p(1), -p(0), 0;
        a = m + px;
    }
    // else rank 1: the two lines coincide and m itself is ~ g g^T

    int br = 0, bc = 0;
    double rbest = -1, cbest = -1;
    for (int i = 0; i < 3; ++i) {
        const double rn = a.row(i).cwiseAbs().sum(), cn = a.col(i).cwiseAbs().sum();
        if (rn > rbest) { rbest = rn; br = i; }
        if (cn > cbest) { cbest = cn; bc = i; }
    }
    return {a.row(br).transpose(), a.col(bc)};
}

// The two intersection points of a line with a conic, over C.
inline std::pair<Vec3c, Vec3c> line_conic_points(const Vec3c& l, const Eigen::Matrix3cd& c) {
    int i = 0;
    double best = 0;
    for (int k = 0; k < 3; ++k)
        if (std::abs(l(k)) > best) { best = std::abs(l(k)); i = k; }
    if (best == 0) fail("DegenerateConfiguration", "zero line");
    const int j0 = (i + 1) % 3, j1 = (i + 2) % 3;
    Vec3c p = Vec3c::Zero(), q = Vec3c::Zero();
    p(j0) = 1; p(i) = -l(j0) / l(i);
    q(j1) = 1; q(i) = -l(j1) / l(i);
    // explicit bilinear form (Eigen's dot would conjugate)
    auto bil = [&](const Vec3c& u, const Vec3c& v) {
        std::complex<double> s = 0;
        for (int r = 0; r < 3; ++r)
            for (int t = 0; t < 3; ++t) s += u(r) * c(r, t) * v(t);
        return s;
    };
    const std::complex<double> A = bil(q, q), B = 2.0 * bil(p, q), C0 = bil(p, p);
    if (std::abs(A) < 1e-300) return {p + (-C0 / B) * q, q}; // line through the conic's point at q
    const std::complex<double> disc = std::sqrt(B * B - 4.0 * A * C0);
    const std::complex<double> s1 = (-B + disc) / (2.0 * A), s2 = (-B - disc) / (2.0 * A);
    return {p + s1 * q, p + s2 * q};
}

} // namespace detail

// The four common points of two conics (complex), found by splitting a
// least-multiplicity degenerate member of the pencil into two lines and
// intersecting each with C. Tangent pairs return coincident points; the call
// fails only when the pencil has no usable degenerate member.
template <Scalar K>
std::array<Eigen::Vector3cd, 4> conic_intersection(const Conic<K>& c, const Conic<K>& d) {
    const Eigen::Matrix3d cm = conic_matrix_d(c), dm = conic_matrix_d(d);
    // roots of det(t C + D)
    Polynomial<double> g;
    {
        SquareMatrix<double> a(3), b(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) { a.at(i, j) = cm(i, j); b.at(i, j) = dm(i, j); }
        g = pencil_det(a, b);
    }
    if (g.degree() < 1) fail("NonGenericPencil", "pencil determinant is constant");
    const auto roots = complex_roots(g);
    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));
    // prefer the root farthest from the others (least multiplicity)
    std::complex<double> t0 = roots[0];
    double sep = 1.0;
    for (const auto& r : roots) {
        double mind = 1e300;
        for (const auto& s : roots)
            if (&s != &r) mind = std::min(mind, std::abs(r - s));
        if (roots.size() == 1) mind = 1.0;
        if (&r == &roots[0] || mind > sep) { sep = mind; t0 = r; }
    }
    if (sep < 1e-7 * scale)
        fail("NonGenericPencil", "every degenerate member of the pencil is multiple");
    const Eigen::Matrix3cd member = t0 * cm.cast<std::complex<double>>() + dm.cast<std::complex<double>>();
    const auto [l1, l2] = detail::split_degenerate_conic(member);
    const Eigen::Matrix3cd cc = cm.cast<std::complex<double>>();
    const auto [p1, p2] = detail::line_conic_points(l1, cc);
    const auto [p3, p4] = detail::line_conic_points(l2, cc);
    return {p1, p2, p3, p4};
}

} // namespace porism
