#include "linalg.hpp"

namespace tcsd {

double op_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    // sqrt of the top eigenvalue of m†m; robust for the small dense matrices here
    Eigen::SelfAdjointEigenSolver<Mat> es;
    es.compute(hermitize(m.adjoint() * m), Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

double min_eigenvalue(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Mat> es;
    es.compute(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_abs_eigenvalue(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Mat> es;
    es.compute(hermitize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

HermReport herm_report(const Mat& m) {
    HermReport report;
    if (m.size() == 0) return report;
    report.herm_residual = frob_norm(m - m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es;
    es.compute(hermitize(m), Eigen::EigenvaluesOnly);
    report.min_eig = es.eigenvalues().minCoeff();
    report.scale = es.eigenvalues().cwiseAbs().maxCoeff();
    return report;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat kron_compress(const Mat& q, const Mat& a, const Mat& b) {
    const Eigen::Index m2 = b.rows();
    Mat qk(q.rows(), a.cols() * b.cols());
    Vec row(q.cols());
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
        row = q.row(r);
        // row r of q viewed as an m1×m2 matrix R gives row r of q·(a⊗b) as aᵀ·R·b
        Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            rmat(row.data(), a.rows(), m2);
        Mat slice = a.transpose() * rmat * b;
        for (Eigen::Index j1 = 0; j1 < slice.rows(); ++j1)
            for (Eigen::Index j2 = 0; j2 < slice.cols(); ++j2)
                qk(r, j1 * slice.cols() + j2) = slice(j1, j2);
    }
    return qk * q.adjoint();
}

Mat unitary_exp_i(const Mat& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h));
    Vec phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(Cplx(0.0, es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat null_space(const Mat& m, double rel_tol) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

Mat pinv(const Mat& m, double rel_tol) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
    Vec inv(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        inv(i) = sv(i) > cutoff ? Cplx(1.0 / sv(i), 0.0) : Cplx(0.0, 0.0);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

int rank_of(const Mat& m, double rel_tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

}  // namespace tcsd
