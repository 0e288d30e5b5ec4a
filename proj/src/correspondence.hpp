#pragma once

#include "multiplier.hpp"

namespace tcsd {

/**
 * Finite C*-correspondence over the concrete crossed product B: a carrier C^M
 * with commuting left and right actions of B (one matrix per coordinate basis
 * element e_j⊙g of B) and a B-valued inner product stored coordinate-wise,
 * conjugate-linear in the first variable.
 */
class Correspondence {
public:
    Correspondence(std::shared_ptr<const RegularRep> base, int dim, std::vector<Mat> left,
                   std::vector<Mat> right, std::vector<Mat> inner);

    const std::shared_ptr<const RegularRep>& base() const { return base_; }
    const SystemPtr& system() const { return base_->system(); }
    int dim() const { return dim_; }

    const Mat& left_basis(int m) const { return left_[m]; }
    const Mat& right_basis(int m) const { return right_[m]; }
    const Mat& inner_slice(int m) const { return inner_[m]; }
    /// B-coordinates of ⟨y, z⟩.
    Vec inner_coords(const Vec& y, const Vec& z) const;
    /// ⟨y, z⟩ as an element of the crossed product algebra.
    CrossedElement inner(const Vec& y, const Vec& z) const;

    Mat left_of(const CrossedElement& f) const;
    Mat right_of(const CrossedElement& f) const;
    Mat right_of_coords(const Vec& bcoords) const;

private:
    std::shared_ptr<const RegularRep> base_;
    int dim_;
    std::vector<Mat> left_;
    std::vector<Mat> right_;
    std::vector<Mat> inner_;  // per B-coordinate: M×M
};

/**
 * Crossed-product correspondence of an equivariant pair (ρ, v) on X: the
 * carrier of functions G → X with
 *   (f·ξ)(h)   = Σ_g ρ(f(g))·(v(g)ξ(g⁻¹h))·σ(g,g⁻¹h),
 *   (ξ·f)(h)   = Σ_g ξ(g)·(α_g(f(g⁻¹h))·σ(g,g⁻¹h)),
 *   ⟨ξ,η⟩(h)   = Σ_g α_g⁻¹(⟨ξ(g), η(gh)⟩·σ(g,h)*).
 * Carrier basis order: (g, module basis index).
 */
Correspondence crossed_correspondence(const EquivariantRep& rep,
                                      std::shared_ptr<const RegularRep> reg);

/// The crossed product as a correspondence over itself (carrier = coordinate
/// space of B, actions by multiplication, ⟨b,c⟩ = b*·c).
Correspondence correspondence_over_self(std::shared_ptr<const RegularRep> reg);

/**
 * Localization through the expectation: the module Y' with
 * ⟨y,z⟩_A = E(⟨y,z⟩_B) and the equivariant pair ρ_Y(a) = a·y,
 * v_Y(g)·y = λ(g)·y·λ(g)* on it. from_raw maps correspondence-carrier
 * coordinates to the module carrier.
 */
struct LocalizedCorrespondence {
    EquivariantRep rep;
    Mat from_raw;
};
LocalizedCorrespondence localize_correspondence(const Correspondence& y, double tol = 1e-9);

/// T(g,a) = E(⟨y, (a·λ(g))·z⟩·λ(g)*).
CoeffMap coefficient_from_correspondence(const Correspondence& y, const Vec& yvec,
                                         const Vec& zvec);

/**
 * The conjugation pair obtained by localizing the crossed product over itself:
 * on functions G → A it acts by
 *   [w(g)ξ](h) = α_g(ξ(g⁻¹hg))·σ(g,g⁻¹hg)·σ(h,g)*,
 * which for one-dimensional A and abelian G multiplies ξ(h) by the symmetrized
 * bicharacter σ(g,h)·conj(σ(h,g)). Returned as carrier matrices in the basis
 * (g, algebra coordinate) for direct comparison with localize_correspondence.
 */
std::vector<Mat> conjugation_rep_matrices(const SystemPtr& system);

}  // namespace tcsd
