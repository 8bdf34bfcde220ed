#include "learnlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace learnlab {

double det_lu(Mat a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const size_t n = a.rows();
    if (n == 0) return 1.0;
    for (double x : a.data())
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite matrix entry");

    double det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        double best = std::fabs(a(col, col));
        for (size_t row = col + 1; row < n; ++row) {
            double cand = std::fabs(a(row, col));
            if (cand > best) {
                best = cand;
                pivot = row;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (size_t row = col + 1; row < n; ++row) {
            double factor = a(row, col) / a(col, col);
            if (factor == 0.0) continue;
            for (size_t j = col; j < n; ++j) a(row, j) -= factor * a(col, j);
        }
    }
    return det;
}

std::vector<double> singular_values(Mat a) {
    const size_t m = a.rows(), n = a.cols();
    for (double x : a.data())
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite matrix entry");

    // One-sided Jacobi: orthogonalize column pairs until every pair is
    // numerically orthogonal; column norms are then the singular values.
    const double tol = 1e-15;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (size_t i = 0; i + 1 < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (size_t k = 0; k < m; ++k) {
                    alpha += a(k, i) * a(k, i);
                    beta += a(k, j) * a(k, j);
                    gamma += a(k, i) * a(k, j);
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::fabs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (size_t k = 0; k < m; ++k) {
                    double ai = a(k, i), aj = a(k, j);
                    a(k, i) = c * ai - s * aj;
                    a(k, j) = s * ai + c * aj;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (size_t k = 0; k < m; ++k) sum += a(k, j) * a(k, j);
        sigma[j] = std::sqrt(sum);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    return sigma;
}

int numerical_rank(const std::vector<double>& sigma, size_t dim_scale) {
    if (sigma.empty() || sigma.front() == 0.0) return 0;
    double threshold = sigma.front() * static_cast<double>(dim_scale) * 1e-12;
    int rank = 0;
    for (double s : sigma)
        if (s > threshold) ++rank;
    return rank;
}

double hadamard_scaled_det(const Mat& a) {
    double det = det_lu(a);
    double prod = 1.0;
    for (size_t i = 0; i < a.rows(); ++i) {
        double sum = 0.0;
        for (size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
        double norm = std::sqrt(sum);
        if (norm == 0.0) return 0.0;
        prod *= norm;
    }
    return std::fabs(det) / prod;
}

}  // namespace learnlab
