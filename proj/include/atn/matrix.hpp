#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace atn {

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
        if (n < 0) throw std::invalid_argument("matrix order must be nonnegative");
    }

    int order() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

    bool operator==(const Matrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline void check_same_order(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_order(a, b);
    Matrix c = a;
    for (size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_order(a, b);
    Matrix c = a;
    for (size_t k = 0; k < c.data().size(); ++k) c.data()[k] -= b.data()[k];
    return c;
}

inline Matrix operator*(double s, const Matrix& a) {
    Matrix c = a;
    for (double& x : c.data()) x *= s;
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    check_same_order(a, b);
    const int n = a.order();
    Matrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// M * M^T, filled symmetrically so both triangles are bit-identical.
inline Matrix gram(const Matrix& m) {
    const int n = m.order();
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += m(i, k) * m(j, k);
            g(i, j) = s;
            g(j, i) = s;
        }
    return g;
}

inline double frobenius_norm_squared(const Matrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return s;
}

inline double frobenius_norm(const Matrix& m) {
    return std::sqrt(frobenius_norm_squared(m));
}

inline double max_abs_asymmetry(const Matrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
    return worst;
}

}  // namespace atn
