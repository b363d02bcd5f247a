#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "atn/digraph.hpp"
#include "atn/errors.hpp"
#include "atn/jacobi.hpp"
#include "atn/matrix.hpp"

namespace atn {

inline constexpr double kDefaultEigenTol = 1e-12;   // Jacobi convergence
inline constexpr double kDefaultCompareTol = 1e-9;  // equality / bound comparisons
inline constexpr double kGramClampFactor = 1e-10;   // relative PSD clamp window
inline constexpr double kMultiplicityTol = 1e-8;    // grouping of repeated values

inline void validate_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("alpha must lie in [0,1)");
}

/// A_alpha(D) = alpha * Delta^+(D) + (1 - alpha) * A(D).
inline Matrix alpha_matrix(const Digraph& d, double alpha) {
    validate_alpha(alpha);
    Matrix m(d.order());
    for (int u = 0; u < d.order(); ++u) m(u, u) = alpha * d.out_degree(u);
    for (const Arc& a : d.arcs()) m(a.first, a.second) = 1.0 - alpha;
    return m;
}

inline Matrix adjacency_matrix(const Digraph& d) {
    Matrix m(d.order());
    for (const Arc& a : d.arcs()) m(a.first, a.second) = 1.0;
    return m;
}

inline Matrix out_degree_matrix(const Digraph& d) {
    Matrix m(d.order());
    for (int u = 0; u < d.order(); ++u) m(u, u) = d.out_degree(u);
    return m;
}

inline Matrix laplacian_matrix(const Digraph& d) {
    Matrix m = out_degree_matrix(d);
    for (const Arc& a : d.arcs()) m(a.first, a.second) -= 1.0;
    return m;
}

inline Matrix signless_laplacian_matrix(const Digraph& d) {
    Matrix m = out_degree_matrix(d);
    for (const Arc& a : d.arcs()) m(a.first, a.second) += 1.0;
    return m;
}

struct SingularSpectrum {
    std::vector<double> values;  // descending, nonnegative
    double trace_norm = 0.0;
};

/// Singular values via the Gram route: eigenvalues of M M^T, square-rooted.
/// Eigenvalues inside the window [-1e-10 * scale, 1e-10 * scale] count as
/// zero, where scale is the squared Frobenius norm of M (1 if that is zero).
/// The symmetric window matters: a rank-deficient Gram matrix leaves
/// sqrt(eps)-sized residue on its zero eigenvalues, which would otherwise
/// leak relabelling-dependent noise into the trace norm. Anything below the
/// window means the solver lost PSD-ness and is a hard error.
inline SingularSpectrum singular_values(const Matrix& m, double tol = kDefaultEigenTol) {
    const Matrix g = gram(m);
    const std::vector<double> mu = symmetric_eigenvalues(g, tol);
    const double fro2 = frobenius_norm_squared(m);
    const double scale = fro2 == 0.0 ? 1.0 : fro2;
    SingularSpectrum s;
    s.values.reserve(mu.size());
    for (double e : mu) {
        if (e < -kGramClampFactor * scale)
            throw NumericalError("Gram matrix eigenvalue " + std::to_string(e) +
                                 " below PSD clamp window");
        s.values.push_back(e <= kGramClampFactor * scale ? 0.0 : std::sqrt(e));
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    for (double v : s.values) s.trace_norm += v;
    return s;
}

/// The alpha trace norm of D: sum of the singular values of A_alpha(D).
inline double trace_norm(const Digraph& d, double alpha, double tol = kDefaultEigenTol) {
    return singular_values(alpha_matrix(d, alpha), tol).trace_norm;
}

inline double trace_norm(const Matrix& m, double tol = kDefaultEigenTol) {
    return singular_values(m, tol).trace_norm;
}

/// ||M1 + M2||_* <= ||M1||_* + ||M2||_* + tol.
inline bool subadditivity_check(const Matrix& m1, const Matrix& m2,
                                double tol = kDefaultCompareTol) {
    check_same_order(m1, m2);
    return trace_norm(m1 + m2) <= trace_norm(m1) + trace_norm(m2) + tol;
}

/// Group a descending value list into (value, multiplicity) runs; adjacent
/// values within `tol` fall in one group, represented by the group's largest.
inline std::vector<std::pair<double, int>> group_multiplicities(
    const std::vector<double>& descending, double tol = kMultiplicityTol) {
    std::vector<std::pair<double, int>> groups;
    for (double v : descending) {
        if (!groups.empty() && groups.back().first - v <= tol)
            ++groups.back().second;
        else
            groups.push_back({v, 1});
    }
    return groups;
}

}  // namespace atn
