#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "porism/error.hpp"

namespace porism {

using Integer = mpz_class;

inline Integer fibonacci(unsigned long n) {
    Integer f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Integer square root of a perfect square.
inline Integer exact_sqrt(const Integer& n) {
    if (!is_perfect_square(n)) fail("DomainError", "exact_sqrt of a non-square");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace detail {

// Brent-cycle Pollard rho; n odd composite, not a prime power of small primes.
inline Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer ys = y, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
            if (r > (1ul << 24)) break;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n && d != 1) return d;
    }
}

inline void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(static_cast<long>(p))];
            n /= static_cast<long>(p);
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // trial division up to 10^5 before rho
    for (unsigned long p = 41; p < 100000; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(static_cast<long>(p))];
            n /= static_cast<long>(p);
        }
        if (n == 1) return;
    }
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

inline std::map<Integer, int> factorize(const Integer& n) {
    std::map<Integer, int> out;
    detail::factor_into(abs(n), out);
    return out;
}

// All positive divisors, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t len = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < len; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace porism
