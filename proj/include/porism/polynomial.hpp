#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "porism/quadext.hpp"
#include "porism/scalar.hpp"

namespace porism {

// Dense univariate polynomial, coefficients lowest degree first.
// Normalized: no trailing (leading-degree) zero coefficients.
template <Scalar K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const K& k) { return Polynomial({k}); }
    static Polynomial identity() { return Polynomial({scalar_traits<K>::zero(), scalar_traits<K>::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(size_t i) const { return i < c_.size() ? c_[i] : scalar_traits<K>::zero(); }
    const K& leading() const { return c_.back(); }

    K operator()(const K& t) const {
        K acc = scalar_traits<K>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        K n = scalar_traits<K>::one();
        for (size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * n;
            n = n + scalar_traits<K>::one();
        }
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<K> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& k, const Polynomial& a) {
        std::vector<K> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = k * a.c_[i];
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Euclidean division; K must be a field.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
        std::vector<K> rem = a.c_;
        if (rem.size() < b.c_.size()) return {{}, a};
        std::vector<K> quot(rem.size() - b.c_.size() + 1, scalar_traits<K>::zero());
        const K& lead = b.leading();
        for (size_t k = quot.size(); k-- > 0;) {
            K q = rem[k + b.c_.size() - 1] / lead;
            quot[k] = q;
            for (size_t j = 0; j < b.c_.size(); ++j)
                rem[k + j] = rem[k + j] - q * b.c_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && scalar_traits<K>::is_zero(c_.back(), 0.0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <Scalar K>
std::string Polynomial<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (scalar_traits<K>::is_zero(c_[i], 0.0)) continue;
        if (!out.empty()) out += " + ";
        if constexpr (std::is_same_v<K, Rational>) out += c_[i].str();
        else out += std::to_string(scalar_traits<K>::to_double(c_[i]));
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// Monic gcd over an exact field.
inline Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
    auto monic = [](Polynomial<Rational> p) {
        if (p.is_zero()) return p;
        const Rational inv = Rational(1) / p.leading();
        return inv * p;
    };
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a;
}

inline Polynomial<Rational> squarefree_part(const Polynomial<Rational>& p) {
    const auto g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divmod(p, g).first;
}

// Evaluate a rational polynomial in Q(sqrt(d)).
inline QuadExt evaluate(const Polynomial<Rational>& p, const QuadExt& t) {
    QuadExt acc(Rational(0), Rational(0), t.d);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * t + QuadExt(*it);
    return acc;
}

} // namespace porism
