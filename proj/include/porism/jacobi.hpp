#pragma once

#include "porism/conic.hpp"
#include "porism/projective.hpp"

namespace porism {

namespace detail {

// Deterministic stream of complex test lines.
inline Vec3c pseudo_line(uint32_t salt) {
    auto h = [&](uint32_t k) {
        uint32_t x = salt * 2654435761u + k * 40503u + 12345u;
        x ^= x >> 13;
        x *= 1274126177u;
        x ^= x >> 16;
        return static_cast<double>(x % 2000001u) / 1000000.0 - 1.0;
    };
    return Vec3c(std::complex<double>(h(1), h(2)), std::complex<double>(h(3), h(4)),
                 std::complex<double>(h(5), h(6)));
}

inline double chordal(const Vec3c& a, const Vec3c& b) {
    // projective distance via the cross product norm
    const Vec3c x = a / a.norm(), y = b / b.norm();
    Vec3c cr(x(1) * y(2) - x(2) * y(1), x(2) * y(0) - x(0) * y(2), x(0) * y(1) - x(1) * y(0));
    return cr.norm();
}

// Legendre parameter of four points on a smooth conic: stereographic
// projection from a fifth conic point onto the pencil of lines through it.
inline std::complex<double> lambda_on_conic(const Eigen::Matrix3cd& conic,
                                            const std::array<Vec3c, 4>& pts, double tol) {
    for (uint32_t salt = 1; salt <= 64; ++salt) {
        const Vec3c l = pseudo_line(salt);
        const auto [z0, z1] = line_conic_points(l, conic);
        for (const Vec3c& z : {z0, z1}) {
            bool apart = true;
            for (const auto& p : pts)
                if (chordal(z, p) < 1e-4) apart = false;
            if (!apart) continue;
            // two independent lines through z
            int i;
            z.cwiseAbs().maxCoeff(&i);
            Vec3c e0 = Vec3c::Zero(), e1 = Vec3c::Zero();
            e0((i + 1) % 3) = 1;
            e1((i + 2) % 3) = 1;
            const Vec3c l1(z(1) * e0(2) - z(2) * e0(1), z(2) * e0(0) - z(0) * e0(2),
                           z(0) * e0(1) - z(1) * e0(0));
            const Vec3c l2(z(1) * e1(2) - z(2) * e1(1), z(2) * e1(0) - z(0) * e1(2),
                           z(0) * e1(1) - z(1) * e1(0));
            using PP = ProjPoint<std::complex<double>>;
            std::array<PP, 4> params;
            for (int k = 0; k < 4; ++k) {
                std::complex<double> a = 0, b = 0;
                for (int r = 0; r < 3; ++r) {
                    a += l1(r) * pts[k](r);
                    b += l2(r) * pts[k](r);
                }
                params[k] = PP{a, b};
            }
            return cross_ratio(params[0], params[1], params[2], params[3], tol);
        }
    }
    fail("InternalError", "could not find a projection center on the conic");
}

} // namespace detail

// Genericity of the pencil: g = det(tC + D) must be a cubic with simple roots.
inline void require_generic_pencil(const Conic<Rational>& c, const Conic<Rational>& d) {
    const auto g = pencil_cubic(c, d);
    if (g.degree() != 3) fail("NonGenericPencil", "pencil determinant is not cubic");
    if (poly_gcd(g, g.derivative()).degree() > 0)
        fail("NonGenericPencil", "pencil determinant has a repeated root (tangent conics)");
}

template <Scalar K>
void require_generic_pencil_numeric(const Conic<K>& c, const Conic<K>& d, double tol = kDefaultTol) {
    SquareMatrix<double> a(3), b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a.at(i, j) = scalar_traits<K>::to_double(c.m.at(i, j));
            b.at(i, j) = scalar_traits<K>::to_double(d.m.at(i, j));
        }
    const auto g = pencil_det(a, b);
    if (g.degree() != 3 || std::abs(g.leading()) < tol) fail("NonGenericPencil", "pencil determinant is not cubic");
    const auto roots = complex_roots(g);
    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < tol * scale)
                fail("NonGenericPencil", "pencil determinant has a repeated root (tangent conics)");
}

struct JacobiReport {
    std::complex<double> j_branch; // from the four intersection points on C
    std::complex<double> j_roots;  // from y^2 = det(tC + D)
    double rel_diff = 0;
};

// j-invariant of the Poncelet-Jacobi curve E(C, D), via the branch points of
// the double cover of C; checked against the Weierstrass route through the
// roots of g(t) = det(tC + D). The two must agree: E(C, D) is birationally
// y^2 = g(t).
template <Scalar K>
JacobiReport jacobi_j_report(const Conic<K>& c, const Conic<K>& d, double tol = kDefaultTol) {
    if constexpr (scalar_traits<K>::exact) require_generic_pencil(c, d);
    else require_generic_pencil_numeric(c, d, tol);

    const auto pts = conic_intersection(c, d);
    const Eigen::Matrix3cd cm = conic_matrix_d(c).template cast<std::complex<double>>();
    const auto lambda = detail::lambda_on_conic(cm, pts, tol);
    JacobiReport rep;
    rep.j_branch = j_from_lambda(lambda, 1e-12);

    SquareMatrix<double> a(3), b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a.at(i, j) = scalar_traits<K>::to_double(c.m.at(i, j));
            b.at(i, j) = scalar_traits<K>::to_double(d.m.at(i, j));
        }
    const auto g = pencil_det(a, b);
    auto roots = complex_roots(g);
    using PP = ProjPoint<std::complex<double>>;
    const auto lam2 = cross_ratio(PP::affine(roots[0]), PP::affine(roots[1]), PP::affine(roots[2]),
                                  PP::infinity(), 1e-12);
    rep.j_roots = j_from_lambda(lam2, 1e-12);
    rep.rel_diff = std::abs(rep.j_branch - rep.j_roots) / (1.0 + std::abs(rep.j_roots));
    return rep;
}

template <Scalar K>
std::complex<double> jacobi_j(const Conic<K>& c, const Conic<K>& d, double tol = kDefaultTol) {
    const auto rep = jacobi_j_report(c, d, tol);
    if (rep.rel_diff > 1e-6)
        fail("InternalError", "branch-point and Weierstrass j-invariants disagree");
    return rep.j_branch;
}

// j of the dual family: the double cover of D* branched at the four common
// tangents of C_t and D, computed by intersecting the dual conics. Unlike the
// fixed-C family this varies with the pencil member.
template <Scalar K>
std::complex<double> dual_family_j(const Conic<K>& ct, const Conic<K>& d, double tol = kDefaultTol) {
    const auto cd = dual_conic(ct, tol);
    const auto dd = dual_conic(d, tol);
    if constexpr (scalar_traits<K>::exact) require_generic_pencil(dd, cd);
    else require_generic_pencil_numeric(dd, cd, tol);
    const auto pts = conic_intersection(dd, cd);
    const Eigen::Matrix3cd covered = conic_matrix_d(dd).template cast<std::complex<double>>();
    const auto lambda = detail::lambda_on_conic(covered, pts, tol);
    return j_from_lambda(lambda, 1e-12);
}

} // namespace porism
