#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "atn/errors.hpp"
#include "atn/matrix.hpp"

namespace atn {

inline constexpr double kSymmetryTol = 1e-12;  // absolute, entry-wise
inline constexpr int kMaxJacobiSweeps = 100;

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // columns; M ~ V diag(values) V^T
    int sweeps = 0;
};

namespace jacobi_detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace jacobi_detail

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops below
/// tol * max(1, ||M||_F). Input must be symmetric to 1e-12 entry-wise.
inline EigenDecomposition symmetric_eigen(const Matrix& m, double tol = 1e-12,
                                          bool want_vectors = false) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    if (max_abs_asymmetry(m) > kSymmetryTol)
        throw std::domain_error("matrix is not symmetric");

    const int n = m.order();
    Matrix a = m;
    // Work on the exact symmetrization; a no-op for symmetric input.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }

    EigenDecomposition result;
    result.vectors = want_vectors ? identity(n) : Matrix();

    const double threshold = tol * std::max(1.0, frobenius_norm(m));
    int sweep = 0;
    while (jacobi_detail::off_diagonal_norm(a) >= threshold) {
        if (sweep++ >= kMaxJacobiSweeps)
            throw NumericalError("Jacobi eigensolver did not converge in " +
                                 std::to_string(kMaxJacobiSweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(p, k) = a(k, p);
                    a(k, q) = s * akp + c * akq;
                    a(q, k) = a(k, q);
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = result.vectors(k, p), vkq = result.vectors(k, q);
                        result.vectors(k, p) = c * vkp - s * vkq;
                        result.vectors(k, q) = s * vkp + c * vkq;
                    }
                }
            }
    }
    result.sweeps = sweep;

    result.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });
    for (int i = 0; i < n; ++i) result.values[i] = a(order[i], order[i]);
    if (want_vectors) {
        Matrix sorted(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) sorted(i, j) = result.vectors(i, order[j]);
        result.vectors = sorted;
    }
    return result;
}

/// Eigenvalues only, descending.
inline std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol = 1e-12) {
    return symmetric_eigen(m, tol, false).values;
}

}  // namespace atn
