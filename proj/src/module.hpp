#pragma once

#include "system.hpp"

namespace tcsd {

class HilbertModule;
using ModulePtr = std::shared_ptr<const HilbertModule>;

/**
 * Finite Hilbert A-module in coordinates: a carrier C^m, the right action of A
 * as one m×m matrix per algebra basis element, and the A-valued inner product
 * ⟨·,·⟩ (conjugate-linear in the first variable, linear in the second) stored
 * coordinate-wise as Gram matrices G_c with coord_c(⟨x,y⟩) = x†·G_c·y.
 *
 * Construction validates the module axioms on the carrier basis — conjugate
 * symmetry, ⟨x, y·a⟩ = ⟨x,y⟩a, (x·a)·b = x·(ab), x·1 = x, positivity of the
 * Gram pushed through the faithful representation — naming the violated axiom
 * on failure, and then eagerly quotients null vectors (⟨x,x⟩ = 0); the
 * quotient map from the raw carrier is kept.
 */
class HilbertModule {
public:
    struct RawData {
        int dim = 0;
        std::vector<Mat> right_action;  // per algebra basis index j
        std::vector<Mat> gram;          // per algebra coordinate c
    };

    static ModulePtr validated(AlgebraPtr algebra, RawData raw, double tol);
    /// A^rank with the standard structure; carrier basis (slot, algebra coord).
    static ModulePtr free_module(AlgebraPtr algebra, int rank);

    const AlgebraPtr& algebra() const { return algebra_; }
    int dim() const { return dim_; }
    int raw_dim() const { return raw_dim_; }
    /// dim × raw_dim isometry with the null space as kernel; identity block
    /// when nothing was quotiented.
    const Mat& quotient_map() const { return from_raw_; }

    const Mat& right_action(int j) const { return right_action_[j]; }
    const Mat& gram(int c) const { return gram_[c]; }

    Vec inner_coords(const Vec& x, const Vec& y) const;
    AlgebraElement inner(const Vec& x, const Vec& y) const;
    Mat right_mul_of(const AlgebraElement& a) const;
    Vec right_mul(const Vec& x, const AlgebraElement& a) const;
    double vec_norm(const Vec& x) const;  // ‖⟨x,x⟩‖^{1/2}

    Mat localized_gram() const;  // (m·d)×(m·d), block (i,j) = π(⟨b_i,b_j⟩)
    Mat trace_gram() const;      // m×m, entries tr π(⟨b_i,b_j⟩)

private:
    HilbertModule() = default;

    AlgebraPtr algebra_;
    int dim_ = 0;
    int raw_dim_ = 0;
    Mat from_raw_;
    std::vector<Mat> right_action_;
    std::vector<Mat> gram_;
};

/// Inner-product space obtained by tensoring the module with C^d through the
/// faithful representation and dividing out null vectors.
struct LocalizedSpace {
    int dim = 0;
    int rep_dim = 0;  // d
    Mat coords;       // dim × (m·d); ⟨w,w'⟩ = (coords·w)†(coords·w')
    Mat embed;        // (m·d) × dim, right inverse of coords

    /// Image of a carrier operator under localization (T ⊗ I_d compressed).
    Mat localize_op(const Mat& carrier_op) const;
    double op_norm_of(const Mat& carrier_op) const { return op_norm(localize_op(carrier_op)); }
    double op_norm_of(const class ModuleOperator& op) const;
};
LocalizedSpace localize(const HilbertModule& module, double rel_tol = 1e-12);

/// Adjointable map between modules; the declared adjoint is checked against
/// ⟨T·x, y⟩ = ⟨x, T*·y⟩ on carrier basis pairs.
class ModuleOperator {
public:
    static ModuleOperator validated(ModulePtr domain, ModulePtr codomain, Mat mat, Mat adjoint,
                                    double tol);

    const ModulePtr& domain() const { return domain_; }
    const ModulePtr& codomain() const { return codomain_; }
    const Mat& mat() const { return mat_; }
    const Mat& adjoint_mat() const { return adjoint_; }

private:
    ModuleOperator(ModulePtr domain, ModulePtr codomain, Mat mat, Mat adjoint);

    ModulePtr domain_;
    ModulePtr codomain_;
    Mat mat_;
    Mat adjoint_;
};

struct DirectSum {
    ModulePtr module;
    std::vector<int> offsets;  // carrier offset of each summand
};
DirectSum direct_sum(const std::vector<ModulePtr>& modules, double tol = 1e-9);

/**
 * Internal tensor product X₁ ⊗_{ρ₂} X₂ for a representation ρ₂ of A on X₂:
 * carrier C^{m₁·m₂} (first factor major) with
 * ⟨x⊗y, x'⊗y'⟩ = ⟨y, ρ₂(⟨x,x'⟩)·y'⟩ and the right action through X₂. The
 * balancing (x·a)⊗y = x⊗ρ₂(a)y holds after the null-vector quotient performed
 * by the module constructor.
 */
ModulePtr internal_tensor(const HilbertModule& x1, const HilbertModule& x2,
                          const std::vector<Mat>& rho2, double tol = 1e-9);

/// Basis of Z_X = {z : ρ(a)z = z·a for all a}, solved over the algebra basis.
/// The carrier is already null-free, so no further intersection is needed.
std::vector<Vec> central_part(const HilbertModule& module, const std::vector<Mat>& rho,
                              double rel_tol = 1e-9);

}  // namespace tcsd
