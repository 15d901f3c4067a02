#pragma once

#include <cstddef>
#include <vector>

namespace relbohm {

// Dense column-major matrix, sized at runtime. Small problems only
// (calibration designs are n x 3, inversion designs 6 x 3).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;  // column-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<size_t>(j) * rows + i]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(j) * rows + i]; }
};

struct LeastSquaresResult {
    std::vector<double> coeff;      // solution, original column scaling
    std::vector<double> std_error;  // per-coefficient standard errors
    double residual_norm = 0.0;     // ||A x - b||_2
    double condition = 0.0;         // cond_2 of the standardized design
    int rank = 0;
};

// Householder-QR least squares with internal column standardization.
// Columns are scaled to unit 2-norm before factorization and the solution
// is de-standardized on output; raw design columns here differ by up to
// nine orders of magnitude (k ~ 1e6, omega ~ 1e15, constant 1), which
// raw normal equations do not survive in double precision.
// Standard errors come from the residual variance and R^{-1} R^{-T}
// (set compute_errors = false to skip them and the extra solve).
LeastSquaresResult solve_least_squares(const Matrix& design,
                                       const std::vector<double>& rhs,
                                       bool compute_errors = true);

// Weighted variant: each equation i is scaled by sqrt(weight[i]).
LeastSquaresResult solve_weighted_least_squares(const Matrix& design,
                                                const std::vector<double>& rhs,
                                                const std::vector<double>& weights,
                                                bool compute_errors = true);

// 2-norm condition number of the column-standardized design, via Jacobi
// eigenvalues of the (small) normal matrix. Infinite if rank-deficient.
double standardized_condition(const Matrix& design);

}  // namespace relbohm
