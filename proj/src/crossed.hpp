#pragma once

#include "system.hpp"

namespace tcsd {

/// Finitely supported A-valued function on G; element of the convolution
/// *-algebra of the system. Supports the twisted convolution and involution
///   (f₁∗f₂)(h) = Σ_g f₁(g)·α_g(f₂(g⁻¹h))·σ(g,g⁻¹h),
///   f*(h)     = σ(h,h⁻¹)*·α_h(f(h⁻¹))*.
class CrossedElement {
public:
    explicit CrossedElement(SystemPtr system);  // zero
    CrossedElement(SystemPtr system, std::vector<AlgebraElement> values);

    /// a⊙g: the function supported at g with value a.
    static CrossedElement monomial(SystemPtr system, const AlgebraElement& a, int g);
    static CrossedElement unit(SystemPtr system);  // 1⊙e

    const SystemPtr& system() const { return system_; }
    const AlgebraElement& at(int g) const { return values_[g]; }
    void set(int g, const AlgebraElement& a);

    CrossedElement operator+(const CrossedElement& rhs) const;
    CrossedElement operator-(const CrossedElement& rhs) const;
    CrossedElement operator*(Cplx z) const;
    CrossedElement convolve(const CrossedElement& rhs) const;
    CrossedElement involute() const;

    double sup_coefficient_norm() const;

private:
    SystemPtr system_;
    std::vector<AlgebraElement> values_;
};

/**
 * Concrete realization of the reduced crossed product: the regular covariant
 * pair (ℓ, λ) acting on the localization of the free module A^G with twisted
 * inner product ⟨ξ,η⟩ = Σ_g α_g⁻¹(ξ(g)*η(g)), a complex space of dimension
 * d·|G| (one copy of C^d per group element). In this picture
 *   ℓ(a)  is block-diagonal with block h equal to π(α_h⁻¹(a)),
 *   λ(g)  has block (g·k ← k) equal to π(α_{gk}⁻¹(σ(g,k))),
 * and Σ_g ℓ(f(g))·λ(g) represents f faithfully. For a finite group this
 * realization carries the full crossed product as well, so there is exactly
 * one algebra here and one multiplier map per coefficient map.
 */
class RegularRep {
public:
    static std::shared_ptr<const RegularRep> make(SystemPtr system);

    const SystemPtr& system() const { return system_; }
    int space_dim() const { return space_dim_; }  // d·|G|

    const Mat& lambda(int g) const { return lambda_[g]; }
    const Mat& ell_basis(int j) const { return ell_basis_[j]; }
    Mat ell(const AlgebraElement& a) const;
    Mat act(const CrossedElement& f) const;  // Σ_g ℓ(f(g))λ(g)

    /// Conditional expectation onto A: reads off the coefficient at e.
    AlgebraElement expectation(const Mat& x) const;
    /// Coefficients f(g) = E(x·λ(g)*) of an element of the represented algebra.
    CrossedElement fourier(const Mat& x) const;
    /// Coordinates with respect to the basis {e_j⊙g}, length dim(A)·|G|.
    Vec coords(const Mat& x) const;
    Mat from_coords(const Vec& coords) const;
    int coord_dim() const { return system_->algebra()->dim() * system_->group().order(); }

    double norm(const CrossedElement& f) const { return op_norm(act(f)); }

private:
    explicit RegularRep(SystemPtr system);

    SystemPtr system_;
    int space_dim_ = 0;
    std::vector<Mat> lambda_;
    std::vector<Mat> ell_basis_;
};

struct CrossedSummary {
    int dim = 0;
    int center_dim = 0;
    std::vector<int> blocks;  // matrix-block sizes of the image, descending
};
CrossedSummary analyze_crossed_product(const RegularRep& reg, double tol = 1e-9);

/// Covariant pair (π, u) on C^D: π a unital *-representation of A and u
/// unitary-valued with u(g)u(h) = π(σ(g,h))u(gh) and π(α_g(a)) = u(g)π(a)u(g)*.
class CovariantRep {
public:
    static CovariantRep validated(SystemPtr system, std::vector<Mat> pi_basis, std::vector<Mat> u,
                                  double tol);
    static CovariantRep regular(const RegularRep& reg);

    const SystemPtr& system() const { return system_; }
    int space_dim() const { return static_cast<int>(u_[0].rows()); }
    Mat pi(const AlgebraElement& a) const;
    const Mat& pi_basis(int j) const { return pi_basis_[j]; }
    const Mat& u(int g) const { return u_[g]; }

    /// (π×u)(f) = Σ_g π(f(g))·u(g)
    Mat rep(const CrossedElement& f) const;

private:
    CovariantRep(SystemPtr system, std::vector<Mat> pi_basis, std::vector<Mat> u);

    SystemPtr system_;
    std::vector<Mat> pi_basis_;
    std::vector<Mat> u_;
};

CrossedElement random_crossed_element(const SystemPtr& system, Rng& rng);

}  // namespace tcsd
