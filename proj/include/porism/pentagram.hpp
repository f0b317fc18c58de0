#pragma once

#include <array>
#include <vector>

#include "porism/polynomial.hpp"
#include "porism/scalar.hpp"

namespace porism {

// Gauss coordinates x1..x5 of a pentagram: five positive scalars satisfying
// the cyclic frieze relations 1 + x_i = x_{i+2} x_{i+3}.
template <Scalar K>
struct Pentagram {
    std::array<K, 5> x;

    const K& operator[](size_t i) const { return x[i]; }
};

template <Scalar K>
std::array<K, 5> frieze_residuals(const Pentagram<K>& p) {
    const K one = scalar_traits<K>::one();
    std::array<K, 5> r;
    for (size_t i = 0; i < 5; ++i)
        r[i] = one + p.x[i] - p.x[(i + 2) % 5] * p.x[(i + 3) % 5];
    return r;
}

template <Scalar K>
bool is_valid_pentagram(const Pentagram<K>& p, double tol = kDefaultTol) {
    for (const auto& xi : p.x)
        if (scalar_traits<K>::to_double(xi) <= 0) return false;
    for (const auto& r : frieze_residuals(p))
        if (!scalar_is_zero(r, tol)) return false;
    return true;
}

template <Scalar K>
Pentagram<K> cyclic_shift(const Pentagram<K>& p, int k) {
    Pentagram<K> q;
    for (size_t i = 0; i < 5; ++i) q.x[i] = p.x[(i + k) % 5];
    return q;
}

// Completion in the (x1, x2) chart: x4, x5, x3 follow from three of the
// relations and the remaining two hold identically (the solution surface is
// two-dimensional). They are still re-verified.
template <Scalar K>
Pentagram<K> complete_frieze(const K& x1, const K& x2, double tol = kDefaultTol) {
    const K one = scalar_traits<K>::one();
    if (scalar_traits<K>::to_double(x1) <= 0 || scalar_traits<K>::to_double(x2) <= 0)
        fail("OutOfDomain", "coordinates must be positive");
    const K x4 = x1 * x2 - one;
    if (scalar_traits<K>::to_double(x4) <= 0)
        fail("OutOfDomain", "x1*x2 must exceed 1");
    const K x5 = (one + x2) / x4;
    const K x3 = (one + x5) / x2;
    Pentagram<K> p{{x1, x2, x3, x4, x5}};
    for (const auto& r : frieze_residuals(p))
        if (!scalar_is_zero(r, tol)) fail("OutOfDomain", "frieze relations failed to close");
    return p;
}

// Completion in the (gamma, epsilon) = (x3, x5) chart.
template <Scalar K>
Pentagram<K> complete_from_gamma_epsilon(const K& gamma, const K& epsilon, double tol = kDefaultTol) {
    const K one = scalar_traits<K>::one();
    if (scalar_traits<K>::to_double(gamma) <= 0 || scalar_traits<K>::to_double(epsilon) <= 0)
        fail("OutOfDomain", "coordinates must be positive");
    const K x1 = (one + gamma) / epsilon;
    const K x2 = (one + epsilon) / gamma;
    return complete_frieze(x1, x2, tol);
}

// Orbit of the Lyness recurrence y_{n+1} = (1 + y_n) / y_{n-1}; exact period 5.
template <Scalar K>
std::vector<K> lyness_orbit(const K& y1, const K& y2, size_t k, double tol = 0.0) {
    std::vector<K> out;
    out.reserve(k);
    if (k >= 1) out.push_back(y1);
    if (k >= 2) out.push_back(y2);
    const K one = scalar_traits<K>::one();
    while (out.size() < k) {
        const K& prev = out[out.size() - 2];
        if (scalar_is_zero(prev, tol)) fail("DegenerateOrbit", "zero term in Lyness orbit");
        out.push_back((one + out.back()) / prev);
    }
    return out;
}

// phi_n = F_{n+1} / F_n, the n-th convergent of the golden ratio.
inline Rational phi_ratio(unsigned long n) {
    return Rational(fibonacci(n + 1), fibonacci(n));
}

// The n-th Fibonacci pentagram P_n = (phi_{n+1}, phi_{n+1}, phi_n, delta, phi_n)
// with gamma = epsilon = phi_n.
inline Pentagram<Rational> fibonacci_pentagram(unsigned long n) {
    if (n < 1) fail("OutOfDomain", "index must be >= 1");
    return complete_from_gamma_epsilon(phi_ratio(n), phi_ratio(n));
}

template <Scalar K>
K pentagram_omega(const Pentagram<K>& p) {
    return p.x[0] * p.x[1] * p.x[2] * p.x[3] * p.x[4];
}

// Product of coordinates for P_n: phi_n phi_{n+1}^3 phi_{n+2}
// = F_{n+2}^2 F_{n+3} / (F_{n+1}^2 F_n).
inline Rational fibonacci_omega(unsigned long n) {
    const Integer fn = fibonacci(n), fn1 = fibonacci(n + 1), fn2 = fibonacci(n + 2),
                  fn3 = fibonacci(n + 3);
    return Rational(fn2 * fn2 * fn3, fn1 * fn1 * fn);
}

// Characteristic cubic of the circumscribed quadratic form, t(2t-1)^2 = (t-1) w
// brought to standard form 4t^3 - 4t^2 + (1-w)t + w.
template <Scalar K>
Polynomial<K> characteristic_cubic(const K& omega) {
    const K one = scalar_traits<K>::one();
    const K four = (one + one) * (one + one);
    return Polynomial<K>({omega, one - omega, -four, four});
}

} // namespace porism
