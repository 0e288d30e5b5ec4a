#include "algebra.hpp"

#include <sstream>

namespace tcsd {

namespace {

std::vector<Mat> zero_blocks(const std::vector<int>& sizes) {
    std::vector<Mat> blocks;
    blocks.reserve(sizes.size());
    for (int n : sizes) blocks.push_back(Mat::Zero(n, n));
    return blocks;
}

}  // namespace

CStarAlgebra::CStarAlgebra(std::vector<int> block_sizes) : block_sizes_(std::move(block_sizes)) {
    require(!block_sizes_.empty(), ErrorKind::Structure, "algebra needs at least one block");
    for (int n : block_sizes_)
        require(n >= 1, ErrorKind::Structure, "block sizes must be positive");
    for (int n : block_sizes_) {
        coord_offsets_.push_back(dim_);
        rep_offsets_.push_back(rep_dim_);
        dim_ += n * n;
        rep_dim_ += n;
    }
}

AlgebraPtr CStarAlgebra::make(std::vector<int> block_sizes) {
    auto alg = std::shared_ptr<CStarAlgebra>(new CStarAlgebra(std::move(block_sizes)));

    alg->one_coords_ = Vec::Zero(alg->dim_);
    for (int k = 0; k < alg->block_count(); ++k)
        for (int p = 0; p < alg->block_size(k); ++p)
            alg->one_coords_(alg->basis_index(k, p, p)) = 1.0;

    alg->left_mult_.resize(alg->dim_);
    alg->right_mult_.resize(alg->dim_);
    alg->rep_basis_.resize(alg->dim_);
    for (int j = 0; j < alg->dim_; ++j) {
        auto [k, p, q] = alg->basis_location(j);
        int n = alg->block_size(k);
        // e_{(k,p,q)} e_{(k,r,s)} = δ_{qr} e_{(k,p,s)}
        Mat lm = Mat::Zero(alg->dim_, alg->dim_);
        Mat rm = Mat::Zero(alg->dim_, alg->dim_);
        for (int s = 0; s < n; ++s)
            lm(alg->basis_index(k, p, s), alg->basis_index(k, q, s)) = 1.0;
        for (int r = 0; r < n; ++r)
            rm(alg->basis_index(k, r, q), alg->basis_index(k, r, p)) = 1.0;
        alg->left_mult_[j] = std::move(lm);
        alg->right_mult_[j] = std::move(rm);

        Mat rep = Mat::Zero(alg->rep_dim_, alg->rep_dim_);
        rep(alg->rep_offsets_[k] + p, alg->rep_offsets_[k] + q) = 1.0;
        alg->rep_basis_[j] = std::move(rep);
    }
    return alg;
}

int CStarAlgebra::basis_index(int block, int row, int col) const {
    return coord_offsets_[block] + row * block_sizes_[block] + col;
}

CStarAlgebra::BasisLoc CStarAlgebra::basis_location(int j) const {
    int k = 0;
    while (k + 1 < block_count() && coord_offsets_[k + 1] <= j) ++k;
    int rel = j - coord_offsets_[k];
    return {k, rel / block_sizes_[k], rel % block_sizes_[k]};
}

AlgebraElement CStarAlgebra::zero() const {
    return AlgebraElement(shared_from_this(), zero_blocks(block_sizes_));
}

AlgebraElement CStarAlgebra::one() const {
    auto blocks = zero_blocks(block_sizes_);
    for (auto& b : blocks) b.setIdentity();
    return AlgebraElement(shared_from_this(), std::move(blocks));
}

AlgebraElement CStarAlgebra::scalar(Cplx z) const {
    auto blocks = zero_blocks(block_sizes_);
    for (auto& b : blocks) b.setIdentity(), b *= z;
    return AlgebraElement(shared_from_this(), std::move(blocks));
}

AlgebraElement CStarAlgebra::basis_element(int j) const {
    auto blocks = zero_blocks(block_sizes_);
    auto [k, p, q] = basis_location(j);
    blocks[k](p, q) = 1.0;
    return AlgebraElement(shared_from_this(), std::move(blocks));
}

AlgebraElement CStarAlgebra::from_coords(const Vec& coords) const {
    require(coords.size() == dim_, ErrorKind::Structure, "coordinate vector has wrong length");
    auto blocks = zero_blocks(block_sizes_);
    for (int k = 0; k < block_count(); ++k) {
        int n = block_sizes_[k];
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) blocks[k](p, q) = coords(basis_index(k, p, q));
    }
    return AlgebraElement(shared_from_this(), std::move(blocks));
}

AlgebraElement CStarAlgebra::from_rep(const Mat& rep, double tol) const {
    require(rep.rows() == rep_dim_ && rep.cols() == rep_dim_, ErrorKind::Structure,
            "representation matrix has wrong shape");
    auto blocks = zero_blocks(block_sizes_);
    for (int k = 0; k < block_count(); ++k)
        blocks[k] = rep.block(rep_offsets_[k], rep_offsets_[k], block_sizes_[k], block_sizes_[k]);
    if (tol >= 0.0) {
        Mat residual = rep;
        for (int k = 0; k < block_count(); ++k)
            residual.block(rep_offsets_[k], rep_offsets_[k], block_sizes_[k], block_sizes_[k])
                .setZero();
        require(op_norm(residual) <= tol * std::max(1.0, op_norm(rep)), ErrorKind::Structure,
                "matrix is not block-diagonal over the algebra");
    }
    return AlgebraElement(shared_from_this(), std::move(blocks));
}

Mat CStarAlgebra::left_mult_of(const Vec& coords) const {
    Mat m = Mat::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        if (coords(j) != 0.0) m += coords(j) * left_mult_[j];
    return m;
}

Mat CStarAlgebra::right_mult_of(const Vec& coords) const {
    Mat m = Mat::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        if (coords(j) != 0.0) m += coords(j) * right_mult_[j];
    return m;
}

Vec CStarAlgebra::adjoint_coords(const Vec& coords) const {
    Vec out(dim_);
    for (int j = 0; j < dim_; ++j) {
        auto [k, p, q] = basis_location(j);
        out(basis_index(k, q, p)) = std::conj(coords(j));
    }
    return out;
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Mat> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    require(static_cast<int>(blocks_.size()) == algebra_->block_count(), ErrorKind::Structure,
            "element has wrong number of blocks");
    for (int k = 0; k < algebra_->block_count(); ++k)
        require(blocks_[k].rows() == algebra_->block_size(k) &&
                    blocks_[k].cols() == algebra_->block_size(k),
                ErrorKind::Structure, "element block has wrong shape");
}

namespace {
void check_compatible(const AlgebraElement& a, const AlgebraElement& b) {
    require(a.algebra()->same_as(*b.algebra()), ErrorKind::InvalidArgument,
            "elements belong to different algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    check_compatible(*this, rhs);
    auto blocks = blocks_;
    for (int k = 0; k < block_count(); ++k) blocks[k] += rhs.blocks_[k];
    return AlgebraElement(algebra_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    check_compatible(*this, rhs);
    auto blocks = blocks_;
    for (int k = 0; k < block_count(); ++k) blocks[k] -= rhs.blocks_[k];
    return AlgebraElement(algebra_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator-() const {
    auto blocks = blocks_;
    for (auto& b : blocks) b = -b;
    return AlgebraElement(algebra_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    check_compatible(*this, rhs);
    auto blocks = blocks_;
    for (int k = 0; k < block_count(); ++k) blocks[k] = blocks_[k] * rhs.blocks_[k];
    return AlgebraElement(algebra_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator*(Cplx z) const {
    auto blocks = blocks_;
    for (auto& b : blocks) b *= z;
    return AlgebraElement(algebra_, std::move(blocks));
}

AlgebraElement AlgebraElement::adjoint() const {
    auto blocks = blocks_;
    for (auto& b : blocks) b = b.adjoint().eval();
    return AlgebraElement(algebra_, std::move(blocks));
}

double AlgebraElement::norm() const {
    double n = 0.0;
    for (const auto& b : blocks_) n = std::max(n, op_norm(b));
    return n;
}

Vec AlgebraElement::coords() const {
    Vec c(algebra_->dim());
    for (int k = 0; k < block_count(); ++k) {
        int n = algebra_->block_size(k);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) c(algebra_->basis_index(k, p, q)) = blocks_[k](p, q);
    }
    return c;
}

Mat AlgebraElement::rep() const {
    Mat m = Mat::Zero(algebra_->rep_dim(), algebra_->rep_dim());
    for (int k = 0; k < block_count(); ++k)
        m.block(algebra_->block_offset(k), algebra_->block_offset(k), algebra_->block_size(k),
                algebra_->block_size(k)) = blocks_[k];
    return m;
}

bool is_positive(const AlgebraElement& a, double tol) {
    double scale = std::max(1.0, a.norm());
    double herm = (a - a.adjoint()).norm();
    if (herm > tol * scale) return false;
    for (int k = 0; k < a.block_count(); ++k)
        if (min_eigenvalue(a.block(k)) < -tol * scale) return false;
    return true;
}

bool is_unitary(const AlgebraElement& a, double tol) {
    const auto one = a.algebra()->one();
    return (a * a.adjoint() - one).norm() <= tol && (a.adjoint() * a - one).norm() <= tol;
}

PsdReport matrix_over_A_psd(const std::vector<AlgebraElement>& entries, int n) {
    require(n >= 1 && static_cast<int>(entries.size()) == n * n, ErrorKind::Structure,
            "matrix over A must be square with n*n entries");
    const auto& alg = entries.front().algebra();
    for (const auto& e : entries)
        require(e.algebra()->same_as(*alg), ErrorKind::Structure,
                "matrix over A mixes different algebras");
    // the flattening through the faithful representation splits along the
    // algebra blocks; positivity holds iff every block flattening is PSD
    PsdReport report;
    for (int k = 0; k < alg->block_count(); ++k) {
        int nk = alg->block_size(k);
        Mat flat(n * nk, n * nk);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                flat.block(i * nk, j * nk, nk, nk) = entries[i * n + j].block(k);
        auto block_report = herm_report(flat);
        report.min_eig = k == 0 ? block_report.min_eig
                                : std::min(report.min_eig, block_report.min_eig);
        report.scale = std::max(report.scale, block_report.scale);
        report.herm_residual = std::max(report.herm_residual, block_report.herm_residual);
    }
    return report;
}

bool matrix_over_A_positive(const std::vector<AlgebraElement>& entries, int n, double tol) {
    return matrix_over_A_psd(entries, n).positive(tol);
}

// ---------------------------------------------------------------------------

Automorphism::Automorphism(AlgebraPtr algebra, std::vector<int> perm, AlgebraElement unitary)
    : algebra_(std::move(algebra)), perm_(std::move(perm)), unitary_(std::move(unitary)) {
    coord_matrix_ = Mat::Zero(algebra_->dim(), algebra_->dim());
    for (int j = 0; j < algebra_->dim(); ++j)
        coord_matrix_.col(j) = (*this)(algebra_->basis_element(j)).coords();
}

Automorphism Automorphism::identity(AlgebraPtr algebra) {
    std::vector<int> perm(algebra->block_count());
    for (int k = 0; k < algebra->block_count(); ++k) perm[k] = k;
    auto one = algebra->one();
    return Automorphism(std::move(algebra), std::move(perm), std::move(one));
}

Automorphism Automorphism::make(AlgebraPtr algebra, std::vector<int> block_perm,
                                AlgebraElement unitary, double tol) {
    require(static_cast<int>(block_perm.size()) == algebra->block_count(), ErrorKind::Structure,
            "block permutation has wrong length");
    std::vector<bool> seen(algebra->block_count(), false);
    for (int k = 0; k < algebra->block_count(); ++k) {
        int t = block_perm[k];
        require(t >= 0 && t < algebra->block_count() && !seen[t], ErrorKind::Structure,
                "block permutation is not a permutation");
        require(algebra->block_size(t) == algebra->block_size(k), ErrorKind::Structure,
                "block permutation must map equal-sized blocks to each other");
        seen[t] = true;
    }
    require(unitary.algebra()->same_as(*algebra), ErrorKind::InvalidArgument,
            "unitary belongs to a different algebra");
    require(is_unitary(unitary, tol), ErrorKind::Validation, "automorphism unitary is not unitary");
    return Automorphism(std::move(algebra), std::move(block_perm), std::move(unitary));
}

Automorphism Automorphism::inner(const AlgebraElement& unitary, double tol) {
    auto algebra = unitary.algebra();
    std::vector<int> perm(algebra->block_count());
    for (int k = 0; k < algebra->block_count(); ++k) perm[k] = k;
    return make(algebra, std::move(perm), unitary, tol);
}

AlgebraElement Automorphism::operator()(const AlgebraElement& a) const {
    require(a.algebra()->same_as(*algebra_), ErrorKind::InvalidArgument,
            "element belongs to a different algebra");
    std::vector<Mat> blocks(algebra_->block_count());
    for (int k = 0; k < algebra_->block_count(); ++k) {
        int t = perm_[k];
        blocks[t] = unitary_.block(t) * a.block(k) * unitary_.block(t).adjoint();
    }
    return AlgebraElement(algebra_, std::move(blocks));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
    require(algebra_->same_as(*other.algebra_), ErrorKind::InvalidArgument,
            "automorphisms act on different algebras");
    // (this ∘ other)(a) = u1·P1(u2)·(P1 P2)(a)·(u1·P1(u2))*
    std::vector<int> perm(perm_.size());
    for (size_t k = 0; k < perm_.size(); ++k) perm[k] = perm_[other.perm_[k]];
    std::vector<Mat> ublocks(algebra_->block_count());
    for (int k = 0; k < algebra_->block_count(); ++k)
        ublocks[perm_[k]] = unitary_.block(perm_[k]) * other.unitary_.block(k);
    return Automorphism(algebra_, std::move(perm),
                        AlgebraElement(algebra_, std::move(ublocks)));
}

Automorphism Automorphism::inverse() const {
    std::vector<int> inv_perm(perm_.size());
    for (size_t k = 0; k < perm_.size(); ++k) inv_perm[perm_[k]] = static_cast<int>(k);
    // β⁻¹ = Ad(P⁻¹(u*)) ∘ P⁻¹ with (P⁻¹ x)_k = x_{perm(k)}
    std::vector<Mat> ublocks(algebra_->block_count());
    for (int k = 0; k < algebra_->block_count(); ++k)
        ublocks[k] = unitary_.block(perm_[k]).adjoint();
    return Automorphism(algebra_, std::move(inv_perm),
                        AlgebraElement(algebra_, std::move(ublocks)));
}

Mat Automorphism::rep_unitary() const {
    int d = algebra_->rep_dim();
    Mat w = Mat::Zero(d, d);
    for (int k = 0; k < algebra_->block_count(); ++k) {
        int n = algebra_->block_size(k);
        for (int p = 0; p < n; ++p)
            w(algebra_->block_offset(perm_[k]) + p, algebra_->block_offset(k) + p) = 1.0;
    }
    return unitary_.rep() * w;
}

std::optional<Automorphism> Automorphism::from_coord_matrix(const AlgebraPtr& algebra,
                                                            const Mat& coord_map, double tol) {
    if (coord_map.rows() != algebra->dim() || coord_map.cols() != algebra->dim()) return {};
    auto apply = [&](const AlgebraElement& a) {
        return algebra->from_coords(coord_map * a.coords());
    };

    // recover the block permutation from images of the central projections
    int r = algebra->block_count();
    std::vector<int> perm(r, -1);
    std::vector<bool> taken(r, false);
    for (int k = 0; k < r; ++k) {
        auto unit_k = algebra->zero();
        unit_k.block(k).setIdentity();
        auto image = apply(unit_k);
        for (int t = 0; t < r; ++t) {
            if (taken[t] || algebra->block_size(t) != algebra->block_size(k)) continue;
            auto unit_t = algebra->zero();
            unit_t.block(t).setIdentity();
            if ((image - unit_t).norm() <= tol * 10.0) {
                perm[k] = t;
                taken[t] = true;
                break;
            }
        }
        if (perm[k] < 0) return {};
    }

    // recover the implementing unitary block by block
    auto u = algebra->zero();
    for (int k = 0; k < r; ++k) {
        int n = algebra->block_size(k);
        int t = perm[k];
        Mat f = apply(algebra->basis_element(algebra->basis_index(k, 0, 0))).block(t);
        Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(f));
        if (std::abs(es.eigenvalues()(n - 1) - 1.0) > 1e-6) return {};
        Vec xi = es.eigenvectors().col(n - 1);
        Mat ub(n, n);
        for (int row = 0; row < n; ++row)
            ub.col(row) = apply(algebra->basis_element(algebra->basis_index(k, row, 0))).block(t) * xi;
        if (op_norm(ub * ub.adjoint() - Mat::Identity(n, n)) > 1e-6) return {};
        u.block(t) = ub;
    }

    auto candidate = Automorphism(algebra, std::move(perm), std::move(u));
    double residual = op_norm(candidate.coord_matrix() - coord_map);
    if (residual > std::max(tol * 100.0, 1e-7) * std::max(1.0, op_norm(coord_map))) return {};
    return candidate;
}

}  // namespace tcsd
