#pragma once

#include <array>

#include "invitelab/cubic.hpp"

namespace invitelab {

/// Dense 3x3 real matrix, row-major.
struct Matrix3 {
    std::array<double, 9> m{};

    double& operator()(int row, int col) { return m[3 * row + col]; }
    double operator()(int row, int col) const { return m[3 * row + col]; }

    static Matrix3 identity();

    Matrix3 operator*(const Matrix3& o) const;
    Matrix3 operator-(const Matrix3& o) const;
    std::array<double, 3> operator*(const std::array<double, 3>& v) const;

    double trace() const;
    double det() const;
    /// Sum of the three principal 2x2 minors.
    double principal_minor_sum() const;

    bool operator==(const Matrix3&) const = default;
};

/// Characteristic polynomial det(M - x I) = 0 normalized to a positive
/// leading coefficient: x^3 - tr(M) x^2 + m2(M) x - det(M).
CubicPoly char_poly(const Matrix3& M);

/// Numerical rank: singular directions below rel_tol * (largest column norm)
/// count as zero. Column-pivoted orthogonalization; no squaring of the
/// matrix, so the threshold is honest at double precision.
int numerical_rank(const Matrix3& M, double rel_tol = 1e-10);

}  // namespace invitelab
