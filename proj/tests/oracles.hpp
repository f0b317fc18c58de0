#pragma once

// Independent oracles used by the tests; these never call the code paths they
// check.

#include <vector>

#include "porism/rational.hpp"

namespace porism::oracle {

// Coefficients of (1 + alpha t)^(1/2) through order N via the binomial series
// C(1/2, k) alpha^k.
inline std::vector<Rational> binomial_sqrt(const Rational& alpha, size_t N) {
    std::vector<Rational> out;
    out.reserve(N + 1);
    Rational coef(1);
    out.push_back(coef);
    for (size_t k = 1; k <= N; ++k) {
        // C(1/2,k) = C(1/2,k-1) * (1/2 - (k-1)) / k
        coef *= (Rational(1, 2) - Rational(static_cast<long>(k - 1))) / Rational(static_cast<long>(k));
        out.push_back(coef * pow(alpha, k));
    }
    return out;
}

// Coefficients of (1 + t) * s for a coefficient prefix s.
inline std::vector<Rational> shift_add(const std::vector<Rational>& s) {
    std::vector<Rational> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        out[i] = s[i];
        if (i >= 1) out[i] += s[i - 1];
    }
    return out;
}

// Coefficient stream of p(t)/q(t) through order N by long division.
inline std::vector<Rational> rational_function_stream(const std::vector<Rational>& p,
                                                      const std::vector<Rational>& q, size_t N) {
    std::vector<Rational> out(N + 1, Rational(0));
    for (size_t n = 0; n <= N; ++n) {
        Rational acc = n < p.size() ? p[n] : Rational(0);
        for (size_t j = 1; j <= n && j < q.size(); ++j) acc -= q[j] * out[n - j];
        out[n] = acc / q[0];
    }
    return out;
}

} // namespace porism::oracle
