#include <catch2/catch_amalgamated.hpp>

#include "porism/quadext.hpp"
#include "porism/rational.hpp"

using namespace porism;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(3, 2).den() == 2);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("13/10") == Rational(13, 10));
    CHECK(Rational::parse("-5") == Rational(-5, 1));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("rational arithmetic and order") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("rational square roots") {
    Rational r;
    CHECK(rational_square_root(Rational(9, 4), &r));
    CHECK(r == Rational(3, 2));
    CHECK_FALSE(rational_square_root(Rational(2), nullptr));
    CHECK_FALSE(rational_square_root(Rational(-4), nullptr));
}

TEST_CASE("integer factorization and divisors") {
    const auto f = factorize(Integer(2 * 2 * 3 * 97));
    CHECK(f.at(2) == 2);
    CHECK(f.at(3) == 1);
    CHECK(f.at(97) == 1);
    CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    // a 64-bit-scale semiprime goes through the rho path
    const Integer p(1000003), q(999983);
    const auto g = factorize(p * q);
    CHECK(g.at(p) == 1);
    CHECK(g.at(q) == 1);
}

TEST_CASE("quadratic field values") {
    // (1 + sqrt(5))/2 squared is (3 + sqrt(5))/2
    const QuadExt phi(Rational(1, 2), Rational(1, 2), Rational(5));
    CHECK(phi * phi == QuadExt(Rational(3, 2), Rational(1, 2), Rational(5)));
    CHECK((phi * phi - phi - QuadExt(Rational(1))).sign() == 0);
    // semantic equality across radicand scaling: 2 sqrt(3) == sqrt(12)
    CHECK(QuadExt(Rational(0), Rational(2), Rational(3)) ==
          QuadExt(Rational(0), Rational(1), Rational(12)));
    // perfect-square radicand collapses
    CHECK(QuadExt(Rational(1), Rational(1), Rational(9, 4)).is_rational());
    CHECK(QuadExt(Rational(1), Rational(1), Rational(9, 4)) == QuadExt(Rational(5, 2)));
    // exact sign with mixed terms: 2 - sqrt(3) > 0, 1 - sqrt(3) < 0
    CHECK(QuadExt(Rational(2), Rational(-1), Rational(3)).sign() > 0);
    CHECK(QuadExt(Rational(1), Rational(-1), Rational(3)).sign() < 0);
}
