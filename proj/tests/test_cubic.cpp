#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "invitelab/cubic.hpp"
#include "invitelab/rng.hpp"

using namespace invitelab;

namespace {

// Expand a * (x - r1)(x - r2)(x - r3); the independent oracle for the solver.
CubicPoly from_real_roots(double a, double r1, double r2, double r3) {
    return {a, -a * (r1 + r2 + r3), a * (r1 * r2 + r1 * r3 + r2 * r3), -a * r1 * r2 * r3};
}

// Expand a * (x - r0)(x^2 - 2 re x + re^2 + im^2).
CubicPoly from_mixed_roots(double a, double r0, double re, double im) {
    const double p = -2.0 * re;
    const double q = re * re + im * im;
    return {a, a * (p - r0), a * (q - r0 * p), -a * r0 * q};
}

double max_residual(const CubicPoly& c) {
    double worst = 0.0;
    for (const auto& root : cubic_roots(c)) worst = std::max(worst, std::abs(c(root)));
    return worst;
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("cubic_roots on factorable cubics") {
    const auto r = cubic_roots({1, 0, -1, 0});  // x^3 - x
    CHECK(close(r[0], {-1, 0}, 1e-9));
    CHECK(close(r[1], {0, 0}, 1e-9));
    CHECK(close(r[2], {1, 0}, 1e-9));

    const auto t = cubic_roots({1, -3, 3, -1});  // (x-1)^3
    for (const auto& root : t) CHECK(close(root, {1, 0}, 1e-9));
}

TEST_CASE("cubic_roots rejects a degenerate leading coefficient") {
    CHECK_THROWS_AS((void)cubic_roots({0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)cubic_discriminant({0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("routh_hurwitz_cubic") {
    CHECK_FALSE(routh_hurwitz_cubic({1, 1, 1, 2}));  // b*c = 1 < a*d = 2
    CHECK(routh_hurwitz_cubic({1, 3, 3.5, 1.5}));
    CHECK_FALSE(routh_hurwitz_cubic({1, -1, 1, 1}));
    CHECK_THROWS_AS((void)routh_hurwitz_cubic({-1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)routh_hurwitz_cubic({0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("cubic_discriminant sign classifies the root pattern") {
    CHECK(cubic_discriminant({1, 0, -1, 0}) == doctest::Approx(4.0));
    CHECK(cubic_discriminant({1, -3, 3, -1}) == doctest::Approx(0.0));
    CHECK(cubic_discriminant({1, 0, 0, -1}) < 0.0);  // x^3 = 1: one real root
}

TEST_CASE("recovers constructed real roots and keeps a positive discriminant") {
    SplitMix64 rng(31);
    for (int i = 0; i < 300; ++i) {
        double rs[3];
        for (double& v : rs) v = -5.0 + 10.0 * rng.next_double();
        std::sort(rs, rs + 3);
        if (rs[1] - rs[0] < 1e-2 || rs[2] - rs[1] < 1e-2) continue;
        const double a = (rng.next_double() < 0.5 ? -1.0 : 1.0) * (0.1 + 9.9 * rng.next_double());
        const CubicPoly c = from_real_roots(a, rs[0], rs[1], rs[2]);

        CHECK(cubic_discriminant(c) > 0.0);
        const auto roots = cubic_roots(c);
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(roots[k].imag()) <= 1e-9 * (1.0 + std::abs(roots[k].real())));
            CHECK(roots[k].real() == doctest::Approx(rs[k]).epsilon(1e-7));
        }
        CHECK(max_residual(c) <= 1e-8 * c.max_abs_coeff());
    }
}

TEST_CASE("recovers constructed conjugate pairs and keeps a negative discriminant") {
    SplitMix64 rng(32);
    for (int i = 0; i < 300; ++i) {
        const double r0 = -5.0 + 10.0 * rng.next_double();
        const double re = -5.0 + 10.0 * rng.next_double();
        const double im = 0.05 + 5.0 * rng.next_double();
        const double a = (rng.next_double() < 0.5 ? -1.0 : 1.0) * (0.1 + 9.9 * rng.next_double());
        const CubicPoly c = from_mixed_roots(a, r0, re, im);

        CHECK(cubic_discriminant(c) < 0.0);
        const auto roots = cubic_roots(c);
        int reals = 0, complexes = 0;
        for (const auto& root : roots) {
            if (std::abs(root.imag()) <= 1e-9 * (1.0 + std::abs(root.real()))) {
                ++reals;
                CHECK(root.real() == doctest::Approx(r0).epsilon(1e-7));
            } else {
                ++complexes;
                CHECK(root.real() == doctest::Approx(re).epsilon(1e-7));
                CHECK(std::abs(root.imag()) == doctest::Approx(im).epsilon(1e-7));
            }
        }
        CHECK(reals == 1);
        CHECK(complexes == 2);
        CHECK(max_residual(c) <= 1e-8 * c.max_abs_coeff());
    }
}

TEST_CASE("double roots are detected with a near-zero discriminant") {
    SplitMix64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const double u = -3.0 + 6.0 * rng.next_double();
        double v = -3.0 + 6.0 * rng.next_double();
        if (std::abs(u - v) < 0.1) v += 0.5;
        const CubicPoly c = from_real_roots(1.0, u, u, v);

        const double disc = cubic_discriminant(c);
        CHECK(std::abs(disc) <= 1e-9 * std::pow(1.0 + c.max_abs_coeff(), 4));
        const auto roots = cubic_roots(c);
        // Multiset {u, u, v} within the sqrt(eps) accuracy a double root allows.
        double best_v = 1e9;
        for (const auto& root : roots) best_v = std::min(best_v, std::abs(root.real() - v));
        CHECK(best_v <= 1e-5 * (1.0 + std::abs(v)));
        int near_u = 0;
        for (const auto& root : roots)
            if (std::abs(root.real() - u) <= 1e-4 * (1.0 + std::abs(u))) ++near_u;
        CHECK(near_u >= 2);
        CHECK(max_residual(c) <= 1e-8 * c.max_abs_coeff());
    }
}

TEST_CASE("residual bound holds on random coefficient cubics") {
    SplitMix64 rng(34);
    for (int i = 0; i < 1000; ++i) {
        CubicPoly c{-10.0 + 20.0 * rng.next_double(), -10.0 + 20.0 * rng.next_double(),
                    -10.0 + 20.0 * rng.next_double(), -10.0 + 20.0 * rng.next_double()};
        if (std::abs(c.a) < 1e-3) c.a = std::copysign(1e-3, c.a == 0.0 ? 1.0 : c.a);
        CHECK(max_residual(c) <= 1e-8 * c.max_abs_coeff());
    }
}

TEST_CASE("has_negative_real_eigenvalue") {
    CHECK(has_negative_real_eigenvalue({1, 0, -1, 0}));       // roots -1, 0, 1
    CHECK_FALSE(has_negative_real_eigenvalue({1, -3, 3, -1}));  // all roots at +1
    // Conjugate pair with negative real part does not count as a real eigenvalue.
    CHECK_FALSE(has_negative_real_eigenvalue(from_mixed_roots(1.0, 2.0, -1.0, 3.0)));
    CHECK(has_negative_real_eigenvalue(from_mixed_roots(1.0, -2.0, 1.0, 3.0)));
}
