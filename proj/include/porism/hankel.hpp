#pragma once

#include <optional>
#include <span>

#include "porism/matrix.hpp"

namespace porism {

// N_{n,m} = det of the (m+1)x(m+1) Hankel matrix with entries a_n .. a_{n+2m}.
template <Scalar K>
K hankel_det(std::span<const K> coeffs, size_t n, size_t m) {
    if (coeffs.size() < n + 2 * m + 1)
        fail("LengthError", "need coefficients up to index " + std::to_string(n + 2 * m));
    SquareMatrix<K> h(m + 1);
    for (size_t i = 0; i <= m; ++i)
        for (size_t j = 0; j <= m; ++j)
            h.at(i, j) = coeffs[n + i + j];
    if constexpr (scalar_traits<K>::exact) return det_bareiss(h);
    else return det_lu(h);
}

template <Scalar K>
K hankel_det(const std::vector<K>& coeffs, size_t n, size_t m) {
    return hankel_det(std::span<const K>(coeffs), n, m);
}

template <Scalar K>
struct BorelReport {
    bool rational = false;                 // Hankel window vanished
    std::optional<size_t> witness_index;   // first n with N_{n,m} != 0
    K witness_value{};
};

// Borel rationality test: true iff N_{n,m} = 0 for all n0 <= n <= n0 + window.
template <Scalar K>
BorelReport<K> borel_is_rational(const std::vector<K>& coeffs, size_t m, size_t n0, size_t window,
                                 double tol = kDefaultTol) {
    BorelReport<K> rep;
    for (size_t n = n0; n <= n0 + window; ++n) {
        const K v = hankel_det(std::span<const K>(coeffs), n, m);
        if (!scalar_is_zero(v, tol)) {
            rep.rational = false;
            rep.witness_index = n;
            rep.witness_value = v;
            return rep;
        }
    }
    rep.rational = true;
    return rep;
}

} // namespace porism
