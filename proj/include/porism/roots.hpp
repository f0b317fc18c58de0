#pragma once

#include <complex>
#include <optional>
#include <set>
#include <vector>

#include "porism/polynomial.hpp"

namespace porism {

namespace detail {

// Sturm chain with sign-preserving normalization (positive scaling only).
inline std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& p) {
    std::vector<Polynomial<Rational>> chain{p, p.derivative()};
    auto positive_scale = [](Polynomial<Rational> q) {
        if (q.is_zero()) return q;
        const Rational inv = Rational(1) / abs(q.leading());
        return inv * q;
    };
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(positive_scale(-r));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

inline int sturm_variations(const std::vector<Polynomial<Rational>>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = q(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of roots in (a, b].
inline int sturm_count(const std::vector<Polynomial<Rational>>& chain, const Rational& a,
                       const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

} // namespace detail

// Cauchy bound: all real roots lie in [-B, B].
inline Rational root_bound(const Polynomial<Rational>& p) {
    Rational m(0);
    const Rational lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i)) / lead);
    return m + 1;
}

struct RootInterval {
    Rational lo, hi; // open-ish (lo, hi], exactly one root inside
};

// Isolating intervals for the real roots of a squarefree rational polynomial.
inline std::vector<RootInterval> isolate_real_roots(const Polynomial<Rational>& sf) {
    std::vector<RootInterval> out;
    if (sf.degree() <= 0) return out;
    const auto chain = detail::sturm_chain(sf);
    const Rational B = root_bound(sf);
    std::vector<RootInterval> work{{-B, B}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const int n = detail::sturm_count(chain, lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({lo, hi});
            continue;
        }
        Rational mid = (lo + hi) / Rational(2);
        // nudge off a root so interval endpoints stay sign-definite
        Rational step = (hi - lo) / Rational(1024);
        while (sf(mid).is_zero()) mid += step;
        work.push_back({lo, mid});
        work.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Shrink an isolating interval below `width` by exact bisection.
inline RootInterval refine_root(const Polynomial<Rational>& sf, RootInterval iv, const Rational& width) {
    int slo = sf(iv.lo).sign();
    if (slo == 0) { // exact root at endpoint
        return {iv.lo, iv.lo};
    }
    while (iv.hi - iv.lo > width) {
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        const int sm = sf(mid).sign();
        if (sm == 0) return {mid, mid};
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

// Exactly the rational roots of p, by divisor candidates on the primitive
// integer form, each verified by exact evaluation.
inline std::set<Rational> find_rational_roots(const Polynomial<Rational>& p) {
    if (p.is_zero()) fail("DegenerateInput", "zero polynomial has every root");
    std::set<Rational> roots;

    Polynomial<Rational> q = p;
    while (!q.is_zero() && q.coeff(0).is_zero()) { // strip t^k
        roots.insert(Rational(0));
        std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Polynomial<Rational>(std::move(shifted));
    }
    if (q.degree() <= 0) return roots;
    if (q.degree() == 1) {
        roots.insert(-q.coeff(0) / q.coeff(1));
        return roots;
    }

    const auto sf = squarefree_part(q);

    // primitive integer form: scale by lcm of denominators
    Integer denlcm = 1;
    for (const auto& c : sf.coeffs()) {
        Integer g = gcd(denlcm, c.den());
        denlcm = denlcm / g * c.den();
    }
    const Integer lead = abs((sf.leading() * Rational(denlcm)).num());

    const auto divs = divisors(lead);
    const Rational target = Rational(Integer(1), 2 * lead * lead);
    for (const auto& iv0 : isolate_real_roots(sf)) {
        const auto iv = refine_root(sf, iv0, target);
        if (iv.lo == iv.hi) { // landed exactly on the root
            if (sf(iv.lo).is_zero()) roots.insert(iv.lo);
            continue;
        }
        for (const auto& d : divs) {
            // at most one fraction with denominator dividing lead fits in iv
            const Integer num = floor(iv.hi * Rational(d));
            const Rational cand(num, d);
            if (cand < iv.lo || iv.hi < cand) continue;
            if (q(cand).is_zero()) roots.insert(cand);
            break;
        }
    }
    return roots;
}

// Durand-Kerner simultaneous iteration; returns all complex roots.
inline std::vector<std::complex<double>> complex_roots(const Polynomial<std::complex<double>>& p,
                                                       double tol = 1e-13, int max_iters = 600) {
    using C = std::complex<double>;
    const int n = p.degree();
    if (n <= 0) return {};
    std::vector<C> a(p.coeffs().begin(), p.coeffs().end());
    const C lead = a.back();
    for (auto& c : a) c /= lead;

    double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;

    std::vector<C> z(n);
    const C seed(0.4, 0.9);
    C w = radius * seed / std::abs(seed);
    for (int i = 0; i < n; ++i) {
        z[i] = w;
        w *= seed;
    }
    auto eval = [&](const C& t) {
        C acc = 1.0;
        for (int i = n - 1; i >= 0; --i) acc = acc * t + a[i];
        return acc;
    };
    for (int iter = 0; iter < max_iters; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            const C delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[i])));
        }
        if (worst < tol) break;
    }
    return z;
}

inline std::vector<std::complex<double>> complex_roots(const Polynomial<Rational>& p,
                                                       double tol = 1e-13) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r.to_double(), 0.0);
    return complex_roots(Polynomial<std::complex<double>>(std::move(c)), tol);
}

inline std::vector<std::complex<double>> complex_roots(const Polynomial<double>& p,
                                                       double tol = 1e-13) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coeffs().size());
    for (const double r : p.coeffs()) c.emplace_back(r, 0.0);
    return complex_roots(Polynomial<std::complex<double>>(std::move(c)), tol);
}

// Real roots of a rational polynomial to ~1e-14 relative accuracy, ascending,
// via exact Sturm isolation plus bisection (robust even for close roots).
inline std::vector<double> real_roots_numeric(const Polynomial<Rational>& p) {
    const auto sf = squarefree_part(p);
    std::vector<double> out;
    const Integer two54 = Integer(1) << 54;
    for (const auto& iv0 : isolate_real_roots(sf)) {
        const Rational w = std::max(abs(iv0.hi) + abs(iv0.lo), Rational(1));
        const auto iv = refine_root(sf, iv0, w / Rational(two54));
        out.push_back(((iv.lo + iv.hi) / Rational(2)).to_double());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace porism
