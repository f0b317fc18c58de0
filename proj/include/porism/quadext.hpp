#pragma once

#include <cmath>
#include <string>

#include "porism/rational.hpp"

namespace porism {

// Value p + q*sqrt(d) with rational p, q and d >= 0. Arithmetic is defined
// between values sharing the same radicand. Equality is semantic: it compares
// the real numbers, so (0, 2, 3) == (0, 1, 12).
struct QuadExt {
    Rational p, q, d;

    QuadExt() = default;
    QuadExt(Rational p_, Rational q_, Rational d_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {
        if (d.sign() < 0) fail("DomainError", "negative radicand");
        normalize();
    }
    /*implicit*/ QuadExt(const Rational& r) : p(r), q(0), d(0) {}

    void normalize() {
        if (q.is_zero()) { d = Rational(0); return; }
        Rational root;
        if (rational_square_root(d, &root)) { // radicand is a perfect square
            p += q * root;
            q = Rational(0);
            d = Rational(0);
        }
    }

    bool is_rational() const { return q.is_zero(); }

    QuadExt conj() const { return QuadExt(p, -q, d); }

    double to_double() const { return p.to_double() + q.to_double() * std::sqrt(d.to_double()); }

    // Exact sign of p + q*sqrt(d).
    int sign() const {
        if (q.is_zero()) return p.sign();
        if (p.is_zero()) return q.sign();
        if (p.sign() == q.sign()) return p.sign();
        const Rational diff = p * p - q * q * d; // signs differ: |p| vs |q|sqrt(d)
        if (diff.is_zero()) return 0;
        return diff.sign() > 0 ? p.sign() : q.sign();
    }

    std::string str() const {
        if (is_rational()) return p.str();
        return p.str() + (q.sign() < 0 ? " - " : " + ") + abs(q).str() + "*sqrt(" + d.str() + ")";
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.q.is_zero() != b.q.is_zero()) return false;
        if (a.q.is_zero()) return a.p == b.p;
        return a.p == b.p && a.q.sign() == b.q.sign() && a.q * a.q * a.d == b.q * b.q * b.d;
    }

    friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.p, -a.q, a.d); }
};

namespace detail {
inline Rational common_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.is_rational()) return b.d;
    if (b.is_rational()) return a.d;
    if (!(a.d == b.d)) fail("DomainError", "mixed radicands in quadratic-field arithmetic");
    return a.d;
}
} // namespace detail

inline QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    const Rational d = detail::common_radicand(a, b);
    return QuadExt(a.p + b.p, a.q + b.q, d);
}
inline QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
inline QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    const Rational d = detail::common_radicand(a, b);
    return QuadExt(a.p * b.p + a.q * b.q * d, a.p * b.q + a.q * b.p, d);
}
inline QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    const Rational norm = b.p * b.p - b.q * b.q * b.d;
    if (norm.is_zero()) fail("DivisionByZero", "division by zero in quadratic field");
    const QuadExt num = a * b.conj();
    return QuadExt(num.p / norm, num.q / norm, detail::common_radicand(a, b));
}

} // namespace porism
