// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fermimagic {

/// Dense row-major matrix of doubles. Everything in this project is tiny:
/// K <= 4 orbital bases, CI blocks <= 16x16.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Eigenvalues ascending; vectors.col(i) is the eigenvector for values[i].
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;
};

namespace detail {

inline double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

inline double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

} // namespace detail

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-14 relative to the matrix norm,
/// at most 100 sweeps. Throws if the threshold is not reached.
inline EigenSystem jacobi_eigh(Matrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("jacobi_eigh: matrix not square");
    Matrix v = Matrix::identity(n);
    const double scale = std::max(1.0, detail::frobenius(a));
    const double threshold = 1e-14 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (detail::offdiag_frobenius(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (detail::offdiag_frobenius(a) > threshold)
        throw std::runtime_error("jacobi_eigh: no convergence, off-diagonal norm " +
                                 std::to_string(detail::offdiag_frobenius(a)));

    // sort ascending, carrying the columns along
    EigenSystem es;
    es.values.resize(n);
    es.vectors = Matrix(n, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(order[j], order[j]) < a(order[i], order[i])) std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
        es.values[i] = a(order[i], order[i]);
        for (std::size_t r = 0; r < n; ++r) es.vectors(r, i) = v(r, order[i]);
    }
    return es;
}

/// S^{-1/2} of a symmetric positive definite matrix. Throws when the smallest
/// eigenvalue is not safely positive (near-linear-dependent basis).
inline Matrix inverse_sqrt_spd(const Matrix& s) {
    EigenSystem es = jacobi_eigh(s);
    const std::size_t n = s.rows();
    if (es.values.front() <= 1e-10)
        throw std::runtime_error("inverse_sqrt_spd: matrix not safely positive definite (min eig " +
                                 std::to_string(es.values.front()) + ")");
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += es.vectors(i, k) * es.vectors(j, k) / std::sqrt(es.values[k]);
            x(i, j) = acc;
        }
    return x;
}

} // namespace fermimagic
