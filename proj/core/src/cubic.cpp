#include "invitelab/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace invitelab {

double CubicPoly::max_abs_coeff() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool routh_hurwitz_cubic(const CubicPoly& p) {
    if (!(p.a > 0.0))
        throw std::invalid_argument("routh_hurwitz_cubic: leading coefficient must be positive");
    return p.b > 0.0 && p.c > 0.0 && p.d > 0.0 && p.b * p.c > p.a * p.d;
}

double cubic_discriminant(const CubicPoly& p) {
    if (p.a == 0.0)
        throw std::invalid_argument("cubic_discriminant: leading coefficient must be nonzero");
    const double a = p.a, b = p.b, c = p.c, d = p.d;
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
           27.0 * a * a * d * d;
}

namespace {

// Guarded Newton refinement; a step is kept only when it shrinks the residual.
std::complex<double> polish(const CubicPoly& p, std::complex<double> x) {
    for (int it = 0; it < 3; ++it) {
        const std::complex<double> f = p(x);
        if (f == 0.0) break;
        const std::complex<double> df = (3.0 * p.a * x + 2.0 * p.b) * x + p.c;
        if (df == 0.0) break;
        const std::complex<double> xn = x - f / df;
        if (std::abs(p(xn)) < std::abs(f))
            x = xn;
        else
            break;
    }
    return x;
}

}  // namespace

std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& cp) {
    if (cp.a == 0.0)
        throw std::invalid_argument("cubic_roots: leading coefficient must be nonzero");

    // Depressed form: x = t - B/3 turns the monic cubic into t^3 + p t + q.
    const double B = cp.b / cp.a;
    const double C = cp.c / cp.a;
    const double D = cp.d / cp.a;
    const double shift = B / 3.0;
    const double p = C - B * B / 3.0;
    const double q = (2.0 * B * B * B - 9.0 * B * C) / 27.0 + D;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;

    std::array<std::complex<double>, 3> t;
    if (p == 0.0 && q == 0.0) {
        t = {0.0, 0.0, 0.0};
    } else if (disc > 0.0) {
        // Three distinct real roots (implies p < 0): trigonometric branch.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            t[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
    } else if (disc < 0.0) {
        // One real root plus a conjugate pair: Cardano, picking the
        // cancellation-free cube-root branch.
        const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u = std::cbrt(-q / 2.0 - std::copysign(s, q));
        const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
        const double real_root = u + v;
        const double re = -real_root / 2.0;
        const double im = std::sqrt(3.0) / 2.0 * std::abs(u - v);
        t = {real_root, {re, im}, {re, -im}};
    } else {
        // Repeated real roots: simple root 3q/p, double root -3q/(2p).
        t = {3.0 * q / p, -1.5 * q / p, -1.5 * q / p};
    }

    std::array<std::complex<double>, 3> roots;
    for (int k = 0; k < 3; ++k) roots[k] = polish(cp, t[k] - shift);
    if (disc < 0.0) roots[2] = std::conj(roots[1]);

    std::sort(roots.begin(), roots.end(),
              [](const std::complex<double>& l, const std::complex<double>& r) {
                  return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
              });
    return roots;
}

bool has_negative_real_eigenvalue(const CubicPoly& p, double tol) {
    for (const auto& root : cubic_roots(p)) {
        const bool is_real = std::abs(root.imag()) <= tol * (1.0 + std::abs(root.real()));
        if (is_real && root.real() < -tol) return true;
    }
    return false;
}

}  // namespace invitelab
