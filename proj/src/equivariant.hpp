#pragma once

#include "module.hpp"

namespace tcsd {

/**
 * Equivariant pair (ρ, v) of a twisted system on a Hilbert A-module:
 * ρ a *-representation of A by adjointable operators, v(g) invertible
 * C-linear maps. Construction validates, on the carrier and algebra bases,
 *   (i)   ρ(α_g(a)) = v(g)·ρ(a)·v(g)⁻¹,
 *   (ii)  v(g)·v(h) = ad_ρ(σ(g,h))·v(gh),   ad_ρ(u)x = (ρ(u)x)·u*,
 *   (iii) α_g(⟨x,x'⟩) = ⟨v(g)x, v(g)x'⟩,
 *   (iv)  v(g)(x·a) = (v(g)x)·α_g(a),
 * and v(e) = 1. Inverses v(g)⁻¹ are taken from the closed form
 * ad_ρ(σ(g⁻¹,g)*)·v(g⁻¹) instead of a numerical inverse.
 */
class EquivariantRep {
public:
    static EquivariantRep validated(SystemPtr system, ModulePtr module, std::vector<Mat> rho,
                                    std::vector<Mat> v, double tol);

    const SystemPtr& system() const { return system_; }
    const ModulePtr& module() const { return module_; }
    int dim() const { return module_->dim(); }

    const Mat& rho_basis(int j) const { return rho_[j]; }
    const std::vector<Mat>& rho_all() const { return rho_; }
    Mat rho(const AlgebraElement& a) const;
    const Mat& v(int g) const { return v_[g]; }
    const Mat& v_inv(int g) const { return v_inv_[g]; }

    Mat ad_rho(const AlgebraElement& u) const;

private:
    EquivariantRep(SystemPtr system, ModulePtr module, std::vector<Mat> rho, std::vector<Mat> v,
                   std::vector<Mat> v_inv);

    SystemPtr system_;
    ModulePtr module_;
    std::vector<Mat> rho_;
    std::vector<Mat> v_;
    std::vector<Mat> v_inv_;
};

/// (ℓ, α) on A itself.
EquivariantRep trivial_rep(SystemPtr system);
/// (ℓ⊗ι, α⊗λ) on the free module of rank |G|; carrier basis (g, algebra coord).
EquivariantRep regular_equivariant(SystemPtr system);
/// (ρ⊗ι, v⊗w) for a unitary representation w of G on C^k.
EquivariantRep tensor_with_unitary(const EquivariantRep& rep, const std::vector<Mat>& w,
                                   double tol = 1e-9);
EquivariantRep direct_sum_reps(const std::vector<const EquivariantRep*>& reps, double tol = 1e-9);
/// (ρ₁⊗ρ₂, v₁⊗v₂) on the internal tensor product X₁ ⊗_{ρ₂} X₂.
EquivariantRep tensor_reps(const EquivariantRep& r1, const EquivariantRep& r2, double tol = 1e-9);

/// Conjugation by a module unitary (a carrier map that preserves the inner
/// product and commutes with the right action).
EquivariantRep unitary_conjugate(const EquivariantRep& rep, const Mat& u, double tol = 1e-9);

/// Vectors z with ρ(a)z = z·a for all a.
std::vector<Vec> central_vectors(const EquivariantRep& rep, double rel_tol = 1e-9);

/// Random unitary of the free module A^rank (exp(i·H) for a random Hermitian
/// H ∈ M_rank(A)), returned as a carrier matrix.
Mat random_free_module_unitary(const AlgebraPtr& algebra, int rank, Rng& rng);

/// Test/suite generator: a random unitary conjugate of trivial ⊕ regular.
EquivariantRep random_equivariant_rep(const SystemPtr& system, Rng& rng, double tol = 1e-9);
/// Lighter draw of the same flavor: a conjugate of trivial ⊕ trivial.
EquivariantRep random_light_rep(const SystemPtr& system, Rng& rng, double tol = 1e-9);

}  // namespace tcsd
