#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace tcsd {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Largest singular value; 0 for empty matrices.
double op_norm(const Mat& m);

/// Frobenius norm; an upper bound for op_norm, cheap enough for residuals.
inline double frob_norm(const Mat& m) { return m.norm(); }

inline Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

/// Smallest eigenvalue of a Hermitian matrix (the input is Hermitized first).
double min_eigenvalue(const Mat& m);
double max_abs_eigenvalue(const Mat& m);

/// One eigenvalues-only pass over the Hermitized matrix: smallest eigenvalue,
/// spectral scale, and the Frobenius size of the non-Hermitian part.
struct HermReport {
    double min_eig = 0.0;
    double scale = 0.0;
    double herm_residual = 0.0;
};
HermReport herm_report(const Mat& m);

Mat kron(const Mat& a, const Mat& b);

/// q·(a⊗b)·q† without materializing a⊗b (q maps the product index
/// (i_a·rows_b + i_b) to a smaller space).
Mat kron_compress(const Mat& q, const Mat& a, const Mat& b);

/// exp(i·H) for Hermitian H, computed through the spectral decomposition.
Mat unitary_exp_i(const Mat& h);

/// Orthonormal basis of the right null space: columns v with ‖Mv‖ ≤ rel_tol·σ_max.
Mat null_space(const Mat& m, double rel_tol);

/// Moore-Penrose pseudoinverse with a relative singular-value cutoff.
Mat pinv(const Mat& m, double rel_tol = 1e-12);

/// Numerical rank with a relative singular-value cutoff.
int rank_of(const Mat& m, double rel_tol);

inline bool nearly_zero(double x, double scale, double tol) {
    return x <= tol * std::max(1.0, scale);
}

}  // namespace tcsd
