#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include "porism/rational.hpp"

namespace porism {

// Relative tolerance used by numeric instantiations; every numeric operation
// takes an override.
inline constexpr double kDefaultTol = 1e-9;

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x, double /*tol*/ = 0) { return x.is_zero(); }
    static double to_double(const Rational& x) { return x.to_double(); }
    static double magnitude(const Rational& x) { return std::abs(x.to_double()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x, double tol = kDefaultTol) { return std::abs(x) <= tol; }
    static double to_double(double x) { return x; }
    static double magnitude(double x) { return std::abs(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x, double tol = kDefaultTol) {
        return std::abs(x) <= tol;
    }
    static double to_double(const std::complex<double>& x) { return x.real(); }
    static double magnitude(const std::complex<double>& x) { return std::abs(x); }
};

template <class K>
concept Scalar = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    scalar_traits<K>::zero();
};

template <Scalar K>
bool scalar_is_zero(const K& x, double tol = kDefaultTol) {
    return scalar_traits<K>::is_zero(x, tol);
}

inline bool approx_equal(double a, double b, double tol = kDefaultTol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline bool approx_equal(const std::complex<double>& a, const std::complex<double>& b,
                         double tol = kDefaultTol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace porism
