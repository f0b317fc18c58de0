#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "porism/poncelet.hpp"

using namespace porism;
using CQ = Conic<Rational>;

namespace {
CQ diag(long a, long b, long c) { return CQ::diagonal(Rational(a), Rational(b), Rational(c)); }

Eigen::Vector3d circle_point(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta), 1.0};
}
} // namespace

TEST_CASE("triangle pair closes after 3 steps from any start") {
    const auto C = diag(1, 1, -4), D = diag(1, 1, -1);
    for (double theta : {0.0, 0.3, 1.1, 2.5, 4.0}) {
        const auto flag = initial_flag(C, D, circle_point(2.0, theta));
        const auto rep = poncelet_iterate(C, D, flag, 12);
        CHECK(rep.closed);
        CHECK(rep.steps == 3);
        CHECK(rep.gap < 1e-9);
    }
}

TEST_CASE("square pair closes after 4 steps") {
    const auto C = diag(1, 1, -2), D = diag(1, 1, -1);
    const auto flag = initial_flag(C, D, circle_point(std::sqrt(2.0), 0.7));
    const auto rep = poncelet_iterate(C, D, flag, 12);
    CHECK(rep.closed);
    CHECK(rep.steps == 4);
    CHECK(rep.gap < 1e-8);
}

TEST_CASE("half-step involutions square to the identity") {
    const auto C = diag(1, 1, -4), D = diag(1, 1, -1);
    const auto flag = initial_flag(C, D, circle_point(2.0, 0.9));
    const auto f1 = involution_point(C, involution_point(C, flag));
    CHECK(flag_gap(f1, flag) < 1e-10);
    const auto f2 = involution_line(D, involution_line(D, flag));
    CHECK(flag_gap(f2, flag) < 1e-10);
}

TEST_CASE("flag validation rejects off-curve data") {
    const auto C = diag(1, 1, -4), D = diag(1, 1, -1);
    PonceletFlag bad{Eigen::Vector3d(1, 0, 1).normalized(), Eigen::Vector3d(0, 1, 0)};
    CHECK_THROWS_AS(validate_flag(C, D, bad), Error);
}

TEST_CASE("generic nested pairs do not close within 12 steps") {
    std::mt19937 rng(24601u);
    auto frac = [&](long lo, long hi, long den) {
        return Rational(lo + static_cast<long>(rng() % (hi - lo + 1)), den);
    };
    int done = 0;
    while (done < 20) {
        // inner ellipse x^2/p + y^2/q = 1 strictly inside circle of radius^2 R2
        const Rational p = frac(2, 9, 4), q = frac(2, 9, 4), R2 = frac(5, 12, 1);
        if (!(p < R2) || !(q < R2)) continue;
        const auto C = CQ::diagonal(Rational(1), Rational(1), -R2);
        const auto D = CQ::diagonal(Rational(1) / p, Rational(1) / q, Rational(-1));
        const auto flag = initial_flag(C, D, circle_point(std::sqrt(R2.to_double()), 0.37));
        const auto rep = poncelet_iterate(C, D, flag, 12, 1e-9);
        CHECK_FALSE(rep.closed);
        CHECK(rep.gap > 1e-3);
        ++done;
    }
}
