#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"

namespace cyclospec {

/// Dense symmetric matrix in row-major storage.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    [[nodiscard]] double off_diagonal_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j) s += data_[i * n_ + j] * data_[i * n_ + j];
        return std::sqrt(s);
    }

    [[nodiscard]] double frobenius_norm() const {
        double s = 0.0;
        for (double x : data_) s += x * x;
        return std::sqrt(s);
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Sweeps stop once the off-diagonal Frobenius norm falls below
/// `tolerance` times the norm of the input.
inline std::vector<double> jacobi_eigenvalues(SymmetricMatrix a, double tolerance = 1e-12, int max_sweeps = 100) {
    const std::size_t n = a.size();
    const double target = tolerance * std::max(a.frobenius_norm(), 1e-300);
    int sweep = 0;
    for (; sweep < max_sweeps && a.off_diagonal_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double g = a(r, p);
                    const double h = a(r, q);
                    a(r, p) = a(p, r) = g - s * (h + g * tau);
                    a(r, q) = a(q, r) = h + s * (g - h * tau);
                }
            }
        }
    }
    if (a.off_diagonal_norm() > target) throw Error("Jacobi eigensolver did not converge");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclospec
