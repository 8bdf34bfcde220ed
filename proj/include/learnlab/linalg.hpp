#pragma once

#include <cstddef>
#include <vector>

namespace learnlab {

// Dense row-major matrix, value semantics. Sized for the laboratory's
// needs (p, q <= ~64); nothing here is blocked or parallel.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// Determinant by partially pivoted LU. Square input required; all entries
// must be finite.
double det_lu(Mat a);

// Singular values in descending order, via one-sided Jacobi rotations on
// column pairs. Accurate at these sizes without scaffolding.
std::vector<double> singular_values(Mat a);

// Count of sigma_i > sigma_1 * dim_scale * 1e-12, the laboratory's numerical
// rank convention. dim_scale is max(rows, cols) of the matrix the values
// came from, or a larger context dimension when the caller says so.
int numerical_rank(const std::vector<double>& sigma, size_t dim_scale);

// |det| / prod of row 2-norms, in [0, 1]; 0 when any row vanishes.
double hadamard_scaled_det(const Mat& a);

}  // namespace learnlab
