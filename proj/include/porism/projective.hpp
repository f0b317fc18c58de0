#pragma once

#include "porism/scalar.hpp"

namespace porism {

// Point of the projective line, homogeneous (x : w); infinity is (1 : 0).
template <Scalar K>
struct ProjPoint {
    K x, w;

    static ProjPoint affine(const K& x) { return {x, scalar_traits<K>::one()}; }
    static ProjPoint infinity() { return {scalar_traits<K>::one(), scalar_traits<K>::zero()}; }

    bool is_infinite(double tol = kDefaultTol) const { return scalar_is_zero(w, tol); }
};

namespace detail {
// 2x2 bracket [p, q] = x_p w_q - x_q w_p; zero iff the points coincide.
template <Scalar K>
K bracket(const ProjPoint<K>& p, const ProjPoint<K>& q) {
    return p.x * q.w - q.x * p.w;
}
} // namespace detail

// Cross-ratio in the normalization convention: the image of p4 under the
// Moebius map sending (p1, p2, p3) to (0, 1, infinity), so that
// cross_ratio(0, 1, inf, lambda) = lambda. Projective-infinity conventions
// are built into the homogeneous brackets.
template <Scalar K>
K cross_ratio(const ProjPoint<K>& p1, const ProjPoint<K>& p2, const ProjPoint<K>& p3,
              const ProjPoint<K>& p4, double tol = kDefaultTol) {
    const ProjPoint<K> pts[4] = {p1, p2, p3, p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (scalar_is_zero(detail::bracket(pts[i], pts[j]), tol))
                fail("DegenerateConfiguration", "cross-ratio of coincident points");
    const K num = detail::bracket(p4, p1) * detail::bracket(p2, p3);
    const K den = detail::bracket(p4, p3) * detail::bracket(p2, p1);
    return num / den;
}

template <Scalar K>
K cross_ratio(const K& a, const K& b, const K& c, const K& d, double tol = kDefaultTol) {
    return cross_ratio(ProjPoint<K>::affine(a), ProjPoint<K>::affine(b), ProjPoint<K>::affine(c),
                       ProjPoint<K>::affine(d), tol);
}

// Klein's j-invariant from the Legendre parameter: invariant under the
// S3 orbit lambda -> {1 - lambda, 1/lambda, ...}.
template <Scalar K>
K j_from_lambda(const K& lambda, double tol = kDefaultTol) {
    const K one = scalar_traits<K>::one();
    if (scalar_is_zero(lambda, tol) || scalar_is_zero(lambda - one, tol))
        fail("DegenerateCurve", "lambda in {0, 1}");
    const K n = lambda * lambda - lambda + one;
    const K d = lambda * lambda * (one - lambda) * (one - lambda);
    const K four = (one + one) * (one + one);
    const K sixteen = four * four;
    return sixteen * sixteen * (n * n * n) / d; // 256 (lam^2-lam+1)^3 / (lam^2 (1-lam)^2)
}

} // namespace porism
