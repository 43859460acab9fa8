#include "mushy/numerics.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

namespace num = mushy::numerics;

TEST_CASE("erf: zero, odd symmetry and the value at 1")
{
    CHECK(num::erf(0.0) == 0.0);
    CHECK(num::erf(-0.7) == -num::erf(0.7));

    // Frozen from the 60-term Taylor oracle; recomputed live as well.
    const double at_one = 0.8427007929497149;
    CHECK(std::abs(static_cast<double>(oracle::erf_taylor(1.0L)) - at_one) < 1e-16);
    CHECK(std::abs(num::erf(1.0) - at_one) <= 1e-15);
}

TEST_CASE("erf: absolute error against long-double references")
{
    double worst = 0.0;
    for (int i = -60000; i <= 60000; ++i) {
        const double x = i * 1e-4;
        const long double ref = std::erf(static_cast<long double>(x));
        worst = std::max(worst, static_cast<double>(std::abs(num::erf(x) - ref)));
    }
    CHECK(worst <= 1e-15);

    // Taylor oracle converges well in long double for |x| <= 2.
    for (int i = 0; i <= 200; ++i) {
        const double x = i * 0.01;
        CHECK(std::abs(num::erf(x) - static_cast<double>(oracle::erf_taylor(x, 80))) <= 1e-15);
    }
}

TEST_CASE("erf: series and continued-fraction branches meet at |x| = 3")
{
    const double below = num::erf(3.0);
    const double above = num::erf(std::nextafter(3.0, 4.0));
    CHECK(std::abs(below - above) <= 1e-15);
    CHECK(std::abs((1.0 - num::erfc(std::nextafter(3.0, 4.0))) - below) <= 1e-15);
    CHECK(num::erf(-3.5) == -num::erf(3.5));
    CHECK(num::erf(40.0) == 1.0);
    CHECK(std::isnan(num::erf(std::nan(""))));
}

TEST_CASE("erf: strictly increasing and bounded tail")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
        double a = u(rng), b = u(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        // erf saturates to 1 in double beyond ~5.9
        if (std::abs(a) < 5.8 && std::abs(b) < 5.8 && b - a > 1e-12) CHECK(num::erf(a) < num::erf(b));
        CHECK(num::erf(a) <= num::erf(b));
    }
    for (int i = 0; i <= 590; ++i) {
        const double x = 0.1 + 0.01 * i;
        const double tail = num::erfc(x);
        CHECK(tail > 0.0);
        CHECK(tail < std::exp(-x * x));
        if (x <= 5.0) CHECK(1.0 - num::erf(x) > 0.0);
    }
}

TEST_CASE("exp_minus_square matches long double")
{
    for (double x : {0.0, 0.3, 1.7, 2.9, 5.5, 12.0}) {
        const long double ref = std::exp(-static_cast<long double>(x) * x);
        CHECK(std::abs(num::exp_minus_square(x) - ref) <= 2e-16 * ref);
    }
}

TEST_CASE("find_root_increasing: documented examples")
{
    CHECK(num::find_root_increasing([](double x) { return x - 1.0; }, {0.0, 2.0}, 1e-13) ==
          doctest::Approx(1.0).epsilon(1e-13));

    // Bisection oracle on the Taylor erf, 60 iterations.
    long double lo = 0.0L, hi = 1.0L;
    for (int i = 0; i < 60; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (oracle::erf_taylor(mid) < 0.5L ? lo : hi) = mid;
    }
    const double expected = 0.4769362762044699;
    CHECK(std::abs(static_cast<double>(0.5L * (lo + hi)) - expected) < 1e-15);
    const double root = num::find_root_increasing([](double x) { return num::erf(x) - 0.5; }, {0.0, 1.0}, 1e-13);
    CHECK(std::abs(root - expected) <= 1e-13);

    CHECK_THROWS_AS(num::find_root_increasing([](double x) { return x + 1.0; }, {0.0, 2.0}, 1e-13),
                    num::NoSignChange);
}

TEST_CASE("find_root_increasing: bracket expansion and its cap")
{
    CHECK(num::find_root_increasing([](double x) { return x - 100.0; }) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(num::find_root_increasing([](double x) { return x - 999.0; }) == doctest::Approx(999.0).epsilon(1e-14));
    CHECK_THROWS_AS(num::find_root_increasing([](double x) { return x - 2000.0; }), num::NoSignChange);
    // overflow to +inf on the upper end is still a valid sign
    CHECK(num::find_root_increasing([](double x) { return std::exp(x * x) - 1e300; }) ==
          doctest::Approx(std::sqrt(std::log(1e300))).epsilon(1e-13));
    CHECK_THROWS_AS(num::find_root_increasing([](double x) { return x; }, {0.0, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(num::find_root_increasing([](double x) { return x; }, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("find_root_increasing: sign change within tol, idempotent, deterministic")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> shift(0.01, 50.0);
    std::uniform_real_distribution<double> slope(0.1, 10.0);
    const double tol = 1e-13;
    for (int i = 0; i < 300; ++i) {
        const double a = shift(rng);
        const double b = slope(rng);
        const auto f = [a, b](double x) { return b * (x - a) + std::atan(x - a); };
        const double r = num::find_root_increasing(f, {1e-12, 1.0}, tol);
        CHECK(f(r - tol) <= 0.0);
        CHECK(f(r + tol) >= 0.0);
        const double again = num::find_root_increasing(f, {r - 1e-3, r + 1e-3}, tol);
        CHECK(std::abs(again - r) <= tol);
        CHECK(num::find_root_increasing(f, {1e-12, 1.0}, tol) == r);
    }
}
