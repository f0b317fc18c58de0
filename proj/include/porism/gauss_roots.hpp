#pragma once

#include <optional>

#include "porism/pentagram.hpp"
#include "porism/roots.hpp"

namespace porism {

// Sorted real roots G < 0 < G' <= G'' of the characteristic cubic, with exact
// forms where available: a rational root plus a conjugate pair over Q(sqrt(d)),
// or all three rational.
struct GaussRoots {
    double g = 0, gp = 0, gpp = 0; // numeric values, ascending

    std::optional<Rational> rational_root;
    int rational_index = -1; // position of the rational root among the sorted triple
    std::optional<QuadExt> quad_lo, quad_hi; // remaining pair when a rational root exists

    // quotient of the cubic by (t - rational_root), leading coefficient 4
    std::optional<Polynomial<Rational>> deflated;
};

inline GaussRoots gauss_roots(const Rational& omega) {
    if (omega.sign() <= 0) fail("NotRealizable", "omega must be positive");
    const auto cubic = characteristic_cubic(omega);
    GaussRoots out;

    const auto rats = find_rational_roots(cubic);
    if (!rats.empty()) {
        const Rational r = *rats.begin();
        out.rational_root = r;
        // deflate: cubic = (t - r) * (4 t^2 + B t + C)
        const auto [quot, rem] = divmod(cubic, Polynomial<Rational>({-r, Rational(1)}));
        if (!rem.is_zero()) fail("InternalError", "deflation left a remainder");
        out.deflated = quot;
        const Rational A = quot.coeff(2), B = quot.coeff(1), C = quot.coeff(0);
        const Rational disc = B * B - Rational(4) * A * C;
        if (disc.sign() < 0) fail("NotRealizable", "complex roots");
        const Rational half = Rational(1) / (Rational(2) * A);
        out.quad_lo = QuadExt(-B * half, -half, disc);
        out.quad_hi = QuadExt(-B * half, half, disc);
        // collect numeric values and sort
        std::array<std::pair<double, int>, 3> vals{{{out.quad_lo->to_double(), 0},
                                                    {out.quad_hi->to_double(), 1},
                                                    {r.to_double(), 2}}};
        std::sort(vals.begin(), vals.end());
        out.g = vals[0].first;
        out.gp = vals[1].first;
        out.gpp = vals[2].first;
        for (int i = 0; i < 3; ++i)
            if (vals[i].second == 2) out.rational_index = i;
        // keep quad_lo <= quad_hi (they already are: -half*sqrt < +half*sqrt for A>0)
    } else {
        const auto rr = real_roots_numeric(cubic);
        if (rr.size() != 3) fail("NotRealizable", "complex roots");
        out.g = rr[0];
        out.gp = rr[1];
        out.gpp = rr[2];
    }
    if (!(out.g < 0 && out.gp > 0)) fail("NotRealizable", "root signs are not G < 0 < G' <= G''");
    return out;
}

inline GaussRoots gauss_roots(double omega, double tol = kDefaultTol) {
    if (omega <= 0) fail("NotRealizable", "omega must be positive");
    using C = std::complex<double>;
    const auto cubic = characteristic_cubic(C(omega, 0.0));
    auto rts = complex_roots(cubic);
    std::vector<double> rr;
    double scale = 1.0;
    for (const auto& z : rts) scale = std::max(scale, std::abs(z));
    for (const auto& z : rts) {
        if (std::abs(z.imag()) > tol * scale) fail("NotRealizable", "complex roots");
        rr.push_back(z.real());
    }
    std::sort(rr.begin(), rr.end());
    GaussRoots out;
    out.g = rr[0];
    out.gp = rr[1];
    out.gpp = rr[2];
    if (!(out.g < 0 && out.gp > 0)) fail("NotRealizable", "root signs are not G < 0 < G' <= G''");
    return out;
}

struct FibRationalRoot {
    Rational value;     // F_{n+3} / (2 F_{n+1})
    bool is_largest;    // G'' (n odd) vs G' (n even)
};

// The rational eigenvalue of the Fibonacci pentagram's characteristic cubic,
// verified against the full root computation. Position (middle vs largest) is
// decided by exact sign comparisons against the conjugate pair.
inline FibRationalRoot fib_rational_root(unsigned long n) {
    if (n < 1) fail("OutOfDomain", "index must be >= 1");
    const Rational r(fibonacci(n + 3), 2 * fibonacci(n + 1));
    const auto cubic = characteristic_cubic(fibonacci_omega(n));
    if (!cubic(r).is_zero()) fail("InternalError", "closed-form root does not satisfy the cubic");
    const auto [quot, rem] = divmod(cubic, Polynomial<Rational>({-r, Rational(1)}));
    if (!rem.is_zero()) fail("InternalError", "deflation left a remainder");
    const Rational A = quot.coeff(2), B = quot.coeff(1), C = quot.coeff(0);
    const Rational disc = B * B - Rational(4) * A * C;
    if (disc.sign() <= 0) fail("NotRealizable", "conjugate pair is not real");
    const Rational half = Rational(1) / (Rational(2) * A);
    const QuadExt hi(-B * half, half, disc);
    const bool is_largest = (QuadExt(r) - hi).sign() > 0;

    const auto roots = gauss_roots(fibonacci_omega(n)); // cross-check numerics
    const double expect = is_largest ? roots.gpp : roots.gp;
    if (!approx_equal(r.to_double(), expect, 1e-9))
        fail("InternalError", "closed form disagrees with root computation");
    return FibRationalRoot{r, is_largest};
}

// Legendre modulus k^2 = (G'^-2 - G''^-2) / (G'^-2 - G^-2) from the sorted
// eigenvalues; the double-root limit G' = G'' (regular pentagram) gives 0.
// A double root perturbed by coefficient noise eps splits by O(sqrt(eps)),
// so the numeric guard must sit above sqrt of machine epsilon.
inline double legendre_k2_from_roots(const GaussRoots& r, double double_root_eps) {
    const double scale = std::max({std::abs(r.g), std::abs(r.gp), std::abs(r.gpp)});
    if (std::abs(r.gp - r.gpp) <= double_root_eps * scale) return 0.0;
    const double ip = 1.0 / (r.gp * r.gp), ipp = 1.0 / (r.gpp * r.gpp), ig = 1.0 / (r.g * r.g);
    return (ip - ipp) / (ip - ig);
}

template <Scalar K>
double legendre_k2(const Pentagram<K>& p, double tol = kDefaultTol) {
    if constexpr (scalar_traits<K>::exact) {
        const auto roots = gauss_roots(pentagram_omega(p));
        if (roots.quad_lo && *roots.quad_lo == *roots.quad_hi) return 0.0; // exact double root
        return legendre_k2_from_roots(roots, 1e-14);
    } else {
        const double omega = scalar_traits<K>::to_double(pentagram_omega(p));
        const auto roots = gauss_roots(omega, tol);
        return legendre_k2_from_roots(roots, std::max(tol, 1e-7));
    }
}

} // namespace porism
