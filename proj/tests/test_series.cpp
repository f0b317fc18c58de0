#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "porism/series.hpp"

using namespace porism;
using TS = TruncatedSeries<Rational>;

namespace {
TS from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return TS(std::move(v));
}
} // namespace

TEST_CASE("series sqrt of 1 + 4t matches the binomial oracle") {
    const auto expected = oracle::binomial_sqrt(Rational(4), 4);
    CHECK(expected == std::vector<Rational>{Rational(1), Rational(2), Rational(-2), Rational(4),
                                            Rational(-10)});
    const auto h = series_sqrt(from_ints({1, 4, 0, 0, 0}), 4);
    CHECK(h.coeffs() == expected);
}

TEST_CASE("series sqrt trivial cases") {
    CHECK(series_sqrt(TS::one(6), 6) == TS::one(6));
    // (1+t)^2 -> 1 + t
    const auto h = series_sqrt(from_ints({1, 2, 1, 0, 0, 0}), 5);
    CHECK(h == from_ints({1, 1, 0, 0, 0, 0}));
}

TEST_CASE("series sqrt rejects unnormalized input") {
    CHECK_THROWS_AS(series_sqrt(from_ints({2, 1}), 1), Error);
}

TEST_CASE("series sqrt squares back exactly (random rationals)") {
    std::mt19937 rng(20240811u);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> c{Rational(1)};
        for (int i = 0; i < 8; ++i)
            c.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1);
        const TS s(c);
        const auto h = series_sqrt(s, 8);
        CHECK(h * h == s);
    }
}

TEST_CASE("series inverse reproduces rational function streams") {
    // (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    const auto inv = series_inverse(from_ints({1, -1, 0, 0, 0, 0}));
    const auto s = from_ints({1, 1, 0, 0, 0, 0}) * inv;
    CHECK(s == from_ints({1, 2, 2, 2, 2, 2}));
    const auto oracle_stream = oracle::rational_function_stream({Rational(1), Rational(1)},
                                                                {Rational(1), Rational(-1)}, 5);
    CHECK(s.coeffs() == oracle_stream);
}
