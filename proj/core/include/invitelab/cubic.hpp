#pragma once

#include <array>
#include <complex>

namespace invitelab {

/// Coefficients of a x^3 + b x^2 + c x + d.
struct CubicPoly {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    double operator()(double x) const { return ((a * x + b) * x + c) * x + d; }
    std::complex<double> operator()(std::complex<double> x) const {
        return ((a * x + b) * x + c) * x + d;
    }
    double max_abs_coeff() const;
};

/// Routh-Hurwitz test for a cubic with positive leading coefficient: all
/// roots lie strictly in the open left half-plane iff b, c, d are positive
/// and b*c > a*d. Throws std::invalid_argument when a <= 0.
bool routh_hurwitz_cubic(const CubicPoly& p);

/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
/// > 0: three distinct real roots; = 0: a repeated real root;
/// < 0: one real root and a complex-conjugate pair.
/// Throws std::invalid_argument when a == 0.
double cubic_discriminant(const CubicPoly& p);

/// Closed-form roots (trigonometric and Cardano branches of the depressed
/// cubic) followed by a guarded Newton polish, sorted by (re, im).
/// Residuals satisfy |p(root)| <= 1e-8 * max |coefficient|.
/// Throws std::invalid_argument when a == 0.
std::array<std::complex<double>, 3> cubic_roots(const CubicPoly& p);

/// True iff some root is numerically real with real part < -tol. A root
/// counts as real when |im| <= tol * (1 + |re|).
bool has_negative_real_eigenvalue(const CubicPoly& p, double tol = 1e-9);

}  // namespace invitelab
