#include "invitelab/matrix3.hpp"

#include <cmath>
#include <utility>

namespace invitelab {

Matrix3 Matrix3::identity() {
    Matrix3 I;
    I(0, 0) = I(1, 1) = I(2, 2) = 1.0;
    return I;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            out(i, j) = s;
        }
    return out;
}

Matrix3 Matrix3::operator-(const Matrix3& o) const {
    Matrix3 out;
    for (int i = 0; i < 9; ++i) out.m[i] = m[i] - o.m[i];
    return out;
}

std::array<double, 3> Matrix3::operator*(const std::array<double, 3>& v) const {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    return out;
}

double Matrix3::trace() const { return m[0] + m[4] + m[8]; }

double Matrix3::det() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double Matrix3::principal_minor_sum() const {
    const auto& a = *this;
    return (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) +
           (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
           (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
}

CubicPoly char_poly(const Matrix3& M) {
    return CubicPoly{1.0, -M.trace(), M.principal_minor_sum(), -M.det()};
}

namespace {

double col_norm(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double col_dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

int numerical_rank(const Matrix3& M, double rel_tol) {
    std::array<std::array<double, 3>, 3> col;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) col[c][r] = M(r, c);

    std::array<int, 3> live{0, 1, 2};
    int nlive = 3;
    int rank = 0;
    double sigma_max = 0.0;
    for (int step = 0; step < 3; ++step) {
        int best = -1;
        double best_norm = -1.0;
        for (int i = 0; i < nlive; ++i) {
            const double n = col_norm(col[live[i]]);
            if (n > best_norm) {
                best_norm = n;
                best = i;
            }
        }
        if (step == 0) sigma_max = best_norm;
        if (best_norm == 0.0 || best_norm <= rel_tol * sigma_max) break;
        ++rank;

        const int pivot = live[best];
        std::swap(live[best], live[nlive - 1]);
        --nlive;

        std::array<double, 3> q = col[pivot];
        for (double& x : q) x /= best_norm;
        // Two orthogonalization passes keep the residual columns clean.
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < nlive; ++i) {
                const double proj = col_dot(q, col[live[i]]);
                for (int r = 0; r < 3; ++r) col[live[i]][r] -= proj * q[r];
            }
    }
    return rank;
}

}  // namespace invitelab
