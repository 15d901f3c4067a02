#include "relbohm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relbohm {

namespace {

// In-place Householder QR of a column-major m x n matrix (m >= n).
// Returns the scalar factors tau; reflectors are stored below the
// diagonal, R on and above it.
std::vector<double> householder_qr(Matrix& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<double> tau(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double normx = 0.0;
        for (int i = j; i < rows; ++i) normx = std::hypot(normx, m(i, j));
        if (normx == 0.0) continue;  // zero column, reflector is identity
        const double alpha = m(j, j) >= 0.0 ? -normx : normx;
        const double u0 = m(j, j) - alpha;
        m(j, j) = alpha;
        for (int i = j + 1; i < rows; ++i) m(i, j) /= u0;
        tau[j] = -u0 / alpha;
        for (int k = j + 1; k < cols; ++k) {
            double dot = m(j, k);
            for (int i = j + 1; i < rows; ++i) dot += m(i, j) * m(i, k);
            const double s = tau[j] * dot;
            m(j, k) -= s;
            for (int i = j + 1; i < rows; ++i) m(i, k) -= m(i, j) * s;
        }
    }
    return tau;
}

void apply_qt(const Matrix& qr, const std::vector<double>& tau, std::vector<double>& v) {
    for (int j = 0; j < qr.cols; ++j) {
        if (tau[j] == 0.0) continue;
        double dot = v[j];
        for (int i = j + 1; i < qr.rows; ++i) dot += qr(i, j) * v[i];
        const double s = tau[j] * dot;
        v[j] -= s;
        for (int i = j + 1; i < qr.rows; ++i) v[i] -= qr(i, j) * s;
    }
}

// Solve R x = y for the leading n x n upper triangle.
bool back_substitute(const Matrix& qr, std::vector<double>& y) {
    const int n = qr.cols;
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= qr(i, k) * y[k];
        if (qr(i, i) == 0.0) return false;
        y[i] = s / qr(i, i);
    }
    return true;
}

// Jacobi eigenvalues of a symmetric n x n matrix (column-major, n small).
std::vector<double> jacobi_eigenvalues(Matrix s) {
    const int n = s.rows;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (s(p, q) == 0.0) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = s(i, i);
    return ev;
}

std::vector<double> column_norms(const Matrix& m) {
    std::vector<double> norms(m.cols, 0.0);
    for (int j = 0; j < m.cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < m.rows; ++i) s = std::hypot(s, m(i, j));
        norms[j] = s;
    }
    return norms;
}

double condition_of_standardized(const Matrix& std_design) {
    const int n = std_design.cols;
    Matrix gram(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int i = 0; i < std_design.rows; ++i)
                s += std_design(i, j) * std_design(i, k);
            gram(j, k) = s;
        }
    std::vector<double> ev = jacobi_eigenvalues(gram);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double e : ev) {
        hi = std::max(hi, e);
        lo = std::min(lo, e);
    }
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

}  // namespace

LeastSquaresResult solve_least_squares(const Matrix& design,
                                       const std::vector<double>& rhs,
                                       bool compute_errors) {
    const int rows = design.rows, cols = design.cols;
    if (rows < cols) throw std::invalid_argument("least squares: fewer equations than unknowns");
    if (static_cast<int>(rhs.size()) != rows)
        throw std::invalid_argument("least squares: rhs size mismatch");

    Matrix work = design;
    const std::vector<double> scale = column_norms(work);
    for (int j = 0; j < cols; ++j) {
        if (scale[j] == 0.0) continue;
        for (int i = 0; i < rows; ++i) work(i, j) /= scale[j];
    }

    LeastSquaresResult out;
    out.condition = condition_of_standardized(work);

    const std::vector<double> tau = householder_qr(work);
    std::vector<double> y = rhs;
    apply_qt(work, tau, y);

    double rn = 0.0;
    for (int i = cols; i < rows; ++i) rn = std::hypot(rn, y[i]);
    out.residual_norm = rn;

    std::vector<double> x(y.begin(), y.begin() + cols);
    if (!back_substitute(work, x)) {
        out.rank = 0;
        out.condition = std::numeric_limits<double>::infinity();
        return out;
    }
    out.rank = cols;

    out.coeff.resize(cols);
    for (int j = 0; j < cols; ++j)
        out.coeff[j] = scale[j] != 0.0 ? x[j] / scale[j] : 0.0;

    if (compute_errors) {
        // cov = s^2 (R^T R)^{-1} = s^2 R^{-1} R^{-T}; diagonal element k is
        // the squared norm of row k of R^{-1}. Solving R col = e_j yields
        // column j of R^{-1}, so accumulate col[k]^2 into slot k.
        const int dof = rows - cols;
        const double s2 = dof > 0 ? (rn * rn) / dof : 0.0;
        out.std_error.assign(cols, 0.0);
        for (int j = 0; j < cols; ++j) {
            std::vector<double> col(cols, 0.0);
            col[j] = 1.0;
            if (!back_substitute(work, col)) continue;
            for (int k = 0; k < cols; ++k) out.std_error[k] += col[k] * col[k];
        }
        for (int j = 0; j < cols; ++j) {
            const double se = std::sqrt(s2 * out.std_error[j]);
            out.std_error[j] = scale[j] != 0.0 ? se / scale[j] : 0.0;
        }
    }
    return out;
}

LeastSquaresResult solve_weighted_least_squares(const Matrix& design,
                                                const std::vector<double>& rhs,
                                                const std::vector<double>& weights,
                                                bool compute_errors) {
    if (static_cast<int>(weights.size()) != design.rows)
        throw std::invalid_argument("least squares: weight size mismatch");
    Matrix scaled = design;
    std::vector<double> b = rhs;
    for (int i = 0; i < design.rows; ++i) {
        if (!(weights[i] >= 0.0))
            throw std::invalid_argument("least squares: weights must be nonnegative");
        const double s = std::sqrt(weights[i]);
        for (int j = 0; j < design.cols; ++j) scaled(i, j) *= s;
        b[i] *= s;
    }
    return solve_least_squares(scaled, b, compute_errors);
}

double standardized_condition(const Matrix& design) {
    Matrix work = design;
    const std::vector<double> scale = column_norms(work);
    for (int j = 0; j < work.cols; ++j) {
        if (scale[j] == 0.0) return std::numeric_limits<double>::infinity();
        for (int i = 0; i < work.rows; ++i) work(i, j) /= scale[j];
    }
    return condition_of_standardized(work);
}

}  // namespace relbohm
