#pragma once

#include "equivariant.hpp"

namespace tcsd {

/**
 * Element of the algebra of maps G×A → A that are linear in the second
 * variable, stored as one coordinate matrix T_g per group element. The product
 * is slotwise composition, (T×T')_g = T_g ∘ T'_g, with unit I_g = id_A.
 */
class CoeffMap {
public:
    CoeffMap(SystemPtr system, std::vector<Mat> maps);
    static CoeffMap identity(SystemPtr system);
    static CoeffMap zero(SystemPtr system);

    const SystemPtr& system() const { return system_; }
    const Mat& map(int g) const { return maps_[g]; }
    Mat& map(int g) { return maps_[g]; }

    AlgebraElement apply(int g, const AlgebraElement& a) const;

    CoeffMap operator+(const CoeffMap& rhs) const;
    CoeffMap operator-(const CoeffMap& rhs) const;
    CoeffMap operator*(Cplx z) const;
    /// (T×T')_g = T_g ∘ T'_g
    CoeffMap operator*(const CoeffMap& rhs) const;

    double entry_distance(const CoeffMap& rhs) const;  // max_g ‖T_g − T'_g‖ on coordinates

    /**
     * max_g ‖T_g‖ for the operator norm between C*-norms. Computed as a
     * certified lower bound (maximum over 1, the normalized basis and seeded
     * Haar unitaries); exact for positive maps, which attain their norm at 1.
     */
    double sup_norm() const;

private:
    SystemPtr system_;
    std::vector<Mat> maps_;
};

/// T_{ρ,v,x,y}(g,a) = ⟨x, ρ(a)·v(g)·y⟩.
CoeffMap coefficient(const EquivariantRep& rep, const Vec& x, const Vec& y);

/// T^φ(g,a) = φ(g)·a; a unital algebra homomorphism from functions on G.
CoeffMap embed_scalar(SystemPtr system, const std::vector<Cplx>& phi);

/**
 * Positive-definiteness kernel over the generators (g, e_j):
 *   K[(g,a),(h,b)] = α_g(T_{g⁻¹h}(α_g⁻¹(a*·b·σ(g,g⁻¹h)*)))·σ(g,g⁻¹h),
 * a square matrix over A of side |G|·dim(A). The kernel is sesquilinear in
 * the algebra slots, so an arbitrary tuple ((g_i,a_i)) is a scalar
 * compression of this one; scalar compressions preserve positivity in
 * matrices over A in both directions, hence the single eigenvalue problem
 * decides positive definiteness against all tuples.
 */
std::vector<AlgebraElement> pd_kernel(const CoeffMap& t);

struct PdResult {
    bool positive = false;
    double margin = 0.0;         // smallest eigenvalue of the Hermitized flattening
    double herm_residual = 0.0;  // kernel symmetry defect
    double scale = 0.0;
};
PdResult is_positive_definite(const CoeffMap& t, double tol);

/// T^c(g,a) = σ(g,g⁻¹)*·α_g(T_{g⁻¹}(α_g⁻¹(a*·σ(g,g⁻¹)*)))*; an isometric
/// involution with T_{ρ,v,x,y}^c = T_{ρ,v,y,x}.
CoeffMap conjugate(const CoeffMap& t);

/// T̃(g,a) = α_g⁻¹(T(g,α_g(a))) — the passage to the right-handed multiplier
/// picture — and its inverse.
CoeffMap tilde_transform(const CoeffMap& t);
CoeffMap tilde_inverse(const CoeffMap& t);

/// T_{ρ,v,x,y} = Σ_k w_k·T_{ρ,v,x_k,x_k} with x_k = y + i^k·x and w_k = i^k/4;
/// each diagonal part is positive definite.
struct Polarization {
    std::array<Cplx, 4> weights;
    std::vector<Vec> vectors;
    std::vector<CoeffMap> parts;
};
Polarization polarize(const EquivariantRep& rep, const Vec& x, const Vec& y);

/// (‖T‖_∞, ‖T_e(1)‖); the two agree for positive-definite maps.
std::pair<double, double> sup_norm_identity(const CoeffMap& t);

/// Necessary test for centrality: commutation against every coefficient of
/// the trivial pair, T'_g(a) = b*·a·α_g(c), over basis b, c.
bool commutes_with_trivial_coefficients(const CoeffMap& t, double tol);

/// Coefficient of central vectors: T = L^φ = R^φ with φ(g) = ⟨x, v(g)y⟩
/// central-valued. Rejects vectors outside the central part.
struct BzCoefficient {
    CoeffMap t;
    std::vector<AlgebraElement> phi;
};
BzCoefficient bz_coefficient(const EquivariantRep& rep, const Vec& x, const Vec& y, double tol);

struct AmenabilityReport {
    bool ok = false;
    double sup_bound = 0.0;        // sup_i ‖T^i_e(1)‖
    double worst_margin = 0.0;     // worst positivity margin across the family
    double final_deviation = 0.0;  // max_{g,j} ‖T_g(e_j) − e_j‖ for the last element
};
/// Finite stand-in for an approximation net: every member must be positive
/// definite and the last one ε-close to the identity on basis arguments.
AmenabilityReport amenability_witness_check(const std::vector<CoeffMap>& family, double eps,
                                            double tol);

}  // namespace tcsd
