#pragma once

#include <vector>

#include "porism/scalar.hpp"

namespace porism {

// Prefix a0..aN of a formal power series; arithmetic never consults
// coefficients beyond the truncation order.
template <Scalar K>
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, scalar_traits<K>::zero()) {}
    explicit TruncatedSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(scalar_traits<K>::zero());
    }
    TruncatedSeries(std::initializer_list<K> coeffs) : TruncatedSeries(std::vector<K>(coeffs)) {}

    static TruncatedSeries one(size_t order) {
        std::vector<K> c(order + 1, scalar_traits<K>::zero());
        c[0] = scalar_traits<K>::one();
        return TruncatedSeries(std::move(c));
    }

    size_t order() const { return c_.size() - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }

    TruncatedSeries truncated(size_t order) const {
        std::vector<K> c(order + 1, scalar_traits<K>::zero());
        for (size_t i = 0; i <= order && i < c_.size(); ++i) c[i] = c_[i];
        return TruncatedSeries(std::move(c));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const size_t n = std::min(a.order(), b.order());
        std::vector<K> c(n + 1);
        for (size_t i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const size_t n = std::min(a.order(), b.order());
        std::vector<K> c(n + 1);
        for (size_t i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
        return TruncatedSeries(std::move(c));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const size_t n = std::min(a.order(), b.order());
        std::vector<K> c(n + 1, scalar_traits<K>::zero());
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; i + j <= n && j <= b.order(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return TruncatedSeries(std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<K> c_;
};

// Multiplicative inverse through the series order; constant term must be a unit.
template <Scalar K>
TruncatedSeries<K> series_inverse(const TruncatedSeries<K>& s) {
    if (scalar_traits<K>::is_zero(s[0], 0.0))
        fail("NormalizationError", "series inverse needs nonzero constant term");
    const size_t n = s.order();
    std::vector<K> b(n + 1, scalar_traits<K>::zero());
    b[0] = scalar_traits<K>::one() / s[0];
    for (size_t k = 1; k <= n; ++k) {
        K acc = scalar_traits<K>::zero();
        for (size_t j = 1; j <= k; ++j) acc = acc + s[j] * b[k - j];
        b[k] = -(acc / s[0]);
    }
    return TruncatedSeries<K>(std::move(b));
}

// Square root h of s with h0 = 1, valid through order N. The caller normalizes
// the constant term to exactly 1 and tracks the overall scale separately.
template <Scalar K>
TruncatedSeries<K> series_sqrt(const TruncatedSeries<K>& s, size_t N) {
    const auto sn = s.truncated(N);
    const K one = scalar_traits<K>::one();
    if (!scalar_traits<K>::is_zero(sn[0] - one, 0.0))
        fail("NormalizationError", "series sqrt needs constant term exactly 1");
    std::vector<K> h(N + 1, scalar_traits<K>::zero());
    h[0] = one;
    const K two = one + one;
    for (size_t n = 1; n <= N; ++n) {
        K acc = sn[n];
        for (size_t j = 1; j < n; ++j) acc = acc - h[j] * h[n - j];
        h[n] = acc / two;
    }
    return TruncatedSeries<K>(std::move(h));
}

} // namespace porism
