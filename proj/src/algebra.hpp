#pragma once

#include "error.hpp"
#include "linalg.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tcsd {

class AlgebraElement;
class CStarAlgebra;
using AlgebraPtr = std::shared_ptr<const CStarAlgebra>;

/**
 * Finite-dimensional C*-algebra, a direct sum of full matrix blocks
 * M_{n_1} ⊕ ... ⊕ M_{n_r}, together with its faithful block-diagonal
 * representation on C^d, d = Σ n_k.
 *
 * Elements are written in the matrix-unit basis; the flat coordinate index j
 * runs over (block, row, col) with row-major entries inside each block, so
 * coordinates of an element are literally its matrix entries.
 */
class CStarAlgebra : public std::enable_shared_from_this<CStarAlgebra> {
public:
    static AlgebraPtr make(std::vector<int> block_sizes);

    int block_count() const { return static_cast<int>(block_sizes_.size()); }
    int block_size(int k) const { return block_sizes_[k]; }
    const std::vector<int>& block_sizes() const { return block_sizes_; }
    int block_offset(int k) const { return rep_offsets_[k]; }  // offset in C^d
    int dim() const { return dim_; }                           // Σ n_k²
    int rep_dim() const { return rep_dim_; }                   // d = Σ n_k

    int basis_index(int block, int row, int col) const;
    struct BasisLoc {
        int block, row, col;
    };
    BasisLoc basis_location(int j) const;

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement scalar(Cplx z) const;
    AlgebraElement basis_element(int j) const;
    AlgebraElement from_coords(const Vec& coords) const;
    /// Inverse of the faithful representation; off-block entries must vanish.
    AlgebraElement from_rep(const Mat& rep, double tol = -1.0) const;

    const Vec& one_coords() const { return one_coords_; }
    const Mat& left_mult(int j) const { return left_mult_[j]; }    // a ↦ e_j·a
    const Mat& right_mult(int j) const { return right_mult_[j]; }  // a ↦ a·e_j
    Mat left_mult_of(const Vec& coords) const;
    Mat right_mult_of(const Vec& coords) const;
    Vec adjoint_coords(const Vec& coords) const;
    const Mat& rep_basis(int j) const { return rep_basis_[j]; }  // π(e_j)

    /// Algebras compare by shape; elements from equal-shaped algebras mix freely.
    bool same_as(const CStarAlgebra& other) const { return block_sizes_ == other.block_sizes_; }

private:
    explicit CStarAlgebra(std::vector<int> block_sizes);

    std::vector<int> block_sizes_;
    std::vector<int> coord_offsets_;  // flat coordinate offset per block
    std::vector<int> rep_offsets_;    // row offset per block in C^d
    int dim_ = 0;
    int rep_dim_ = 0;
    std::vector<Mat> left_mult_;
    std::vector<Mat> right_mult_;
    std::vector<Mat> rep_basis_;
    Vec one_coords_;
};

/// Element of a CStarAlgebra, one complex matrix per block.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr algebra, std::vector<Mat> blocks);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Mat& block(int k) const { return blocks_[k]; }
    Mat& block(int k) { return blocks_[k]; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;
    AlgebraElement operator*(Cplx z) const;
    AlgebraElement adjoint() const;

    double norm() const;  // largest singular value over blocks
    Vec coords() const;
    Mat rep() const;  // d×d block-diagonal image

    bool is_zero(double tol) const { return norm() <= tol; }

private:
    AlgebraPtr algebra_;
    std::vector<Mat> blocks_;
};

inline AlgebraElement operator*(Cplx z, const AlgebraElement& a) { return a * z; }

bool is_positive(const AlgebraElement& a, double tol);
bool is_unitary(const AlgebraElement& a, double tol);

struct PsdReport {
    double min_eig = 0.0;        // smallest eigenvalue of the Hermitized flattening
    double herm_residual = 0.0;  // ‖M − M*‖
    double scale = 0.0;          // ‖M‖ of the flattening
    bool positive(double tol) const {
        double s = std::max(1.0, scale);
        return herm_residual <= tol * s && min_eig >= -tol * s;
    }
};

/**
 * Positivity of a square n×n matrix over A (entries row-major), decided through
 * the faithful representation: the flattened (n·d)×(n·d) complex matrix is
 * positive semidefinite iff the matrix is positive in M_n(A).
 */
PsdReport matrix_over_A_psd(const std::vector<AlgebraElement>& entries, int n);
bool matrix_over_A_positive(const std::vector<AlgebraElement>& entries, int n, double tol);

/**
 * *-automorphism of A stored structurally: a permutation of equal-sized blocks
 * followed by conjugation by a unitary, β(a) = u·P(a)·u*. Every automorphism of
 * a finite-dimensional C*-algebra has this form, so the axioms hold by
 * construction; from_coord_matrix recovers the structure from a raw linear map
 * or rejects it.
 */
class Automorphism {
public:
    static Automorphism identity(AlgebraPtr algebra);
    static Automorphism make(AlgebraPtr algebra, std::vector<int> block_perm,
                             AlgebraElement unitary, double tol);
    static Automorphism inner(const AlgebraElement& unitary, double tol);
    static std::optional<Automorphism> from_coord_matrix(const AlgebraPtr& algebra,
                                                         const Mat& coord_map, double tol);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<int>& block_perm() const { return perm_; }
    const AlgebraElement& unitary() const { return unitary_; }

    AlgebraElement operator()(const AlgebraElement& a) const;
    Vec apply_coords(const Vec& coords) const { return coord_matrix_ * coords; }

    /// this ∘ other
    Automorphism compose(const Automorphism& other) const;
    Automorphism inverse() const;

    const Mat& coord_matrix() const { return coord_matrix_; }
    /// Unitary U on C^d with π(β(a)) = U·π(a)·U*.
    Mat rep_unitary() const;

private:
    Automorphism(AlgebraPtr algebra, std::vector<int> perm, AlgebraElement unitary);

    AlgebraPtr algebra_;
    std::vector<int> perm_;  // block k maps to perm_[k]
    AlgebraElement unitary_;
    Mat coord_matrix_;
};

}  // namespace tcsd
