#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "porism/gauss_roots.hpp"
#include "porism/pentagram.hpp"

using namespace porism;

namespace {
Pentagram<Rational> ints(std::array<long, 5> v) {
    Pentagram<Rational> p;
    for (size_t i = 0; i < 5; ++i) p.x[i] = Rational(v[i]);
    return p;
}
} // namespace

TEST_CASE("frieze completion reproduces the first Fibonacci pentagrams") {
    const auto p1 = complete_frieze(Rational(2), Rational(2));
    CHECK(p1.x == std::array<Rational, 5>{Rational(2), Rational(2), Rational(1), Rational(3), Rational(1)});
    const auto p2 = complete_frieze(Rational(3, 2), Rational(3, 2));
    CHECK(p2.x == std::array<Rational, 5>{Rational(3, 2), Rational(3, 2), Rational(2), Rational(5, 4),
                                          Rational(2)});
}

TEST_CASE("frieze completion at the golden ratio is the regular pentagram") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto p = complete_frieze(phi, phi, 1e-12);
    for (const double xi : p.x) CHECK(xi == Catch::Approx(phi).margin(1e-12));
}

TEST_CASE("frieze completion domain guard") {
    CHECK_THROWS_AS(complete_frieze(Rational(1, 2), Rational(1)), Error);
    CHECK_THROWS_AS(complete_frieze(Rational(-2), Rational(2)), Error);
}

TEST_CASE("frieze completion satisfies all five relations on random seeds") {
    std::mt19937 rng(11u);
    int done = 0;
    while (done < 1000) {
        const Rational x1(static_cast<long>(rng() % 40) + 1, static_cast<long>(rng() % 12) + 1);
        const Rational x2(static_cast<long>(rng() % 40) + 1, static_cast<long>(rng() % 12) + 1);
        if (!(x1 * x2 > Rational(1))) continue;
        const auto p = complete_frieze(x1, x2);
        for (const auto& r : frieze_residuals(p)) REQUIRE(r.is_zero());
        REQUIRE(is_valid_pentagram(p));
        // cyclic shifts stay valid
        REQUIRE(is_valid_pentagram(cyclic_shift(p, 1 + static_cast<int>(rng() % 4))));
        ++done;
    }
}

TEST_CASE("lyness orbit has exact period 5") {
    const auto orbit = lyness_orbit(Rational(1), Rational(1), 7);
    CHECK(orbit == std::vector<Rational>{Rational(1), Rational(1), Rational(2), Rational(3),
                                         Rational(2), Rational(1), Rational(1)});
    std::mt19937 rng(99u);
    int done = 0;
    while (done < 1000) {
        const Rational y1(static_cast<long>(rng() % 30) + 1, static_cast<long>(rng() % 9) + 1);
        const Rational y2(static_cast<long>(rng() % 30) + 1, static_cast<long>(rng() % 9) + 1);
        const auto o = lyness_orbit(y1, y2, 12);
        for (size_t i = 0; i + 5 < o.size(); ++i) REQUIRE(o[i] == o[i + 5]);
        ++done;
    }
}

TEST_CASE("lyness orbit at the golden ratio is constant") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (const double y : lyness_orbit(phi, phi, 9, 1e-12))
        CHECK(y == Catch::Approx(phi).margin(1e-10));
}

TEST_CASE("fibonacci pentagrams match the printed tuples") {
    auto tup = [](std::array<Rational, 5> v) { return v; };
    CHECK(fibonacci_pentagram(1).x == tup({Rational(2), Rational(2), Rational(1), Rational(3), Rational(1)}));
    CHECK(fibonacci_pentagram(2).x == tup({Rational(3, 2), Rational(3, 2), Rational(2), Rational(5, 4), Rational(2)}));
    CHECK(fibonacci_pentagram(3).x == tup({Rational(5, 3), Rational(5, 3), Rational(3, 2), Rational(16, 9), Rational(3, 2)}));
    CHECK(fibonacci_pentagram(4).x == tup({Rational(8, 5), Rational(8, 5), Rational(5, 3), Rational(39, 25), Rational(5, 3)}));
}

TEST_CASE("fibonacci pentagram equals its (x1,x2)-chart completion") {
    for (unsigned long n = 1; n <= 12; ++n) {
        const auto p = fibonacci_pentagram(n);
        const auto q = complete_frieze(phi_ratio(n + 1), phi_ratio(n + 1));
        CHECK(p.x == q.x);
    }
}

TEST_CASE("omega of P1 and the closed form") {
    CHECK(pentagram_omega(ints({2, 2, 1, 3, 1})) == Rational(12));
    for (unsigned long n = 1; n <= 20; ++n) {
        const auto p = fibonacci_pentagram(n);
        const Rational direct = pentagram_omega(p);
        CHECK(direct == fibonacci_omega(n));
        const Rational viaphi = phi_ratio(n) * pow(phi_ratio(n + 1), 3) * phi_ratio(n + 2);
        CHECK(direct == viaphi);
    }
}

TEST_CASE("omega of the regular pentagram is phi^5") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto p = complete_frieze(phi, phi, 1e-12);
    CHECK(pentagram_omega(p) == Catch::Approx(std::pow(phi, 5)).epsilon(1e-12));
}

TEST_CASE("gauss roots for omega = 12") {
    const auto r = gauss_roots(Rational(12));
    REQUIRE(r.rational_root.has_value());
    CHECK(*r.rational_root == Rational(3, 2));
    // remaining pair (-1 +- sqrt(33))/4
    CHECK(*r.quad_lo == QuadExt(Rational(-1, 4), Rational(-1, 4), Rational(33)));
    CHECK(*r.quad_hi == QuadExt(Rational(-1, 4), Rational(1, 4), Rational(33)));
    // deflated quadratic is 2(2t^2 + t - 4)
    REQUIRE(r.deflated.has_value());
    CHECK(*r.deflated == Polynomial<Rational>({Rational(-8), Rational(2), Rational(4)}));
    CHECK(r.gpp == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(r.g < 0);
    CHECK(r.gp > 0);
}

TEST_CASE("gauss roots satisfy the cubic and vieta") {
    for (const Rational omega : {Rational(12), Rational(45, 4), Rational(832, 75)}) {
        const auto cubic = characteristic_cubic(omega);
        const auto r = gauss_roots(omega);
        if (r.rational_root) CHECK(cubic(*r.rational_root).is_zero());
        if (r.quad_lo) {
            CHECK(evaluate(cubic, *r.quad_lo).sign() == 0);
            CHECK(evaluate(cubic, *r.quad_hi).sign() == 0);
        }
        // vieta: sum = 1, product = -omega/4
        CHECK(r.g + r.gp + r.gpp == Catch::Approx(1.0).margin(1e-9));
        CHECK(r.g * r.gp * r.gpp == Catch::Approx(-omega.to_double() / 4.0).epsilon(1e-9));
    }
}

TEST_CASE("gauss roots double root at the regular pentagram") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto r = gauss_roots(std::pow(phi, 5), 1e-9);
    CHECK(r.gp == Catch::Approx(phi * phi / 2.0).epsilon(1e-6));
    CHECK(r.gpp == Catch::Approx(phi * phi / 2.0).epsilon(1e-6));
}

TEST_CASE("gauss roots rejects nonpositive omega") {
    CHECK_THROWS_AS(gauss_roots(Rational(-3)), Error);
}

TEST_CASE("fib rational root values and parity") {
    const std::array<Rational, 10> expected{Rational(3, 2),  Rational(5, 4),  Rational(4, 3),
                                            Rational(13, 10), Rational(21, 16), Rational(17, 13),
                                            Rational(55, 42), Rational(89, 68), Rational(72, 55),
                                            Rational(233, 178)};
    for (unsigned long n = 1; n <= 10; ++n) {
        const auto fr = fib_rational_root(n);
        CHECK(fr.value == expected[n - 1]);
        CHECK(fr.is_largest == (n % 2 == 1));
    }
    for (unsigned long n = 1; n <= 30; ++n) {
        const auto fr = fib_rational_root(n);
        CHECK(characteristic_cubic(fibonacci_omega(n))(fr.value).is_zero());
        CHECK(fr.is_largest == (n % 2 == 1));
    }
}

TEST_CASE("legendre modulus") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto regular = complete_frieze(phi, phi, 1e-12);
    CHECK(legendre_k2(regular) < 1e-10);

    // k^2(P1) = 1/2 + 25 sqrt(33)/594, from the exact roots
    const double expected = 0.5 + 25.0 * std::sqrt(33.0) / 594.0;
    CHECK(legendre_k2(fibonacci_pentagram(1)) == Catch::Approx(expected).epsilon(1e-12));
    const double k1 = legendre_k2(fibonacci_pentagram(1));
    CHECK(k1 > 0.0);
    CHECK(k1 < 1.0);

    double prev = 2.0;
    for (unsigned long n = 1; n <= 15; ++n) {
        const double k = legendre_k2(fibonacci_pentagram(n));
        CHECK(k < prev);
        prev = k;
    }
    CHECK(prev < legendre_k2(fibonacci_pentagram(1)) / 100.0);
}
