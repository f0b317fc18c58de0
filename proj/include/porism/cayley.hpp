#pragma once

#include <optional>

#include "porism/conic.hpp"
#include "porism/hankel.hpp"

namespace porism {

// Cayley's closure criterion: a k-sided Poncelet polygon inscribed in C and
// circumscribed about D exists iff N_{2,m-1} = 0 for k = 2m+1, or
// N_{3,m-2} = 0 for k = 2m, where N are Hankel determinants of
// sqrt(det(tC + D)). Evaluated exactly over the rationals.
//
// Closure at k implies closure at every multiple of k (the polygon retraced),
// and the determinant vanishes there too. Tangent pencils (e.g. concentric
// circles, which touch at the circular points) are accepted: the criterion
// needs only det C != 0 and det D != 0.
inline Rational cayley_hankel_value(const Conic<Rational>& c, const Conic<Rational>& d, size_t k) {
    if (k < 3) fail("OutOfDomain", "polygons need at least 3 sides");
    if (c.det().is_zero()) fail("DegenerateConic", "det C = 0");
    const auto series = pencil_series(c, d, k - 1); // entries up to a_{k-1}
    if (k % 2 == 1) {
        const size_t m = (k - 1) / 2;
        return hankel_det(series.coeffs(), 2, m - 1);
    }
    const size_t m = k / 2;
    return hankel_det(series.coeffs(), 3, m - 2);
}

inline bool cayley_closes(const Conic<Rational>& c, const Conic<Rational>& d, size_t k) {
    return cayley_hankel_value(c, d, k).is_zero();
}

// Smallest 3 <= k <= kmax with cayley_closes(C, D, k), if any.
inline std::optional<size_t> min_closure(const Conic<Rational>& c, const Conic<Rational>& d,
                                         size_t kmax) {
    for (size_t k = 3; k <= kmax; ++k)
        if (cayley_closes(c, d, k)) return k;
    return std::nullopt;
}

} // namespace porism
