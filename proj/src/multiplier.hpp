#pragma once

#include "coeff.hpp"
#include "crossed.hpp"

#include <functional>
#include <limits>
#include <optional>

namespace tcsd {

/**
 * The multiplier a·λ(g) ↦ T_g(a)·λ(g) on the concrete crossed product. On the
 * coordinate space with basis {e_j⊙g} it is block diagonal with blocks T_g;
 * apply() transports arbitrary elements of the represented algebra through
 * their coefficients. For a finite group the represented algebra carries the
 * crossed product in its only incarnation, so this single map plays both the
 * reduced and the full role.
 */
class MultiplierMap {
public:
    MultiplierMap(CoeffMap source, std::shared_ptr<const RegularRep> reg);

    const CoeffMap& source() const { return source_; }
    const std::shared_ptr<const RegularRep>& reg() const { return reg_; }
    const SystemPtr& system() const { return source_.system(); }

    Mat coord_matrix() const;          // block diagonal {T_g}
    Mat apply(const Mat& x) const;     // action on the represented algebra
    Vec apply_coords(const Vec& c) const;

private:
    CoeffMap source_;
    std::shared_ptr<const RegularRep> reg_;
};

MultiplierMap build_multiplier(const CoeffMap& t, std::shared_ptr<const RegularRep> reg);

struct CpResult {
    bool cp = false;
    double margin = 0.0;  // smallest eigenvalue of the flattened block matrix
    double herm_residual = 0.0;
    double scale = 0.0;
};

/**
 * Complete positivity over a spanning family {b_m} of a represented algebra:
 * the block matrix [M(b_m*·b_n)] is positive semidefinite iff M is completely
 * positive. Any tuple (c_1,…,c_n) expands over the family, so the tuple matrix
 * is a scalar compression of this one; compressions preserve positivity both
 * ways, and for full matrix algebras with matrix units this is the familiar
 * Choi criterion.
 */
CpResult gram_choi_cp(const std::vector<Mat>& basis,
                      const std::function<Mat(const Mat&)>& apply, double tol);

CpResult is_cp(const MultiplierMap& m, double tol);
/// Complete positivity of a linear map on A given by its coordinate matrix.
CpResult is_cp_on_algebra(const AlgebraPtr& algebra, const Mat& theta, double tol);

/// ‖M(1)‖, the completely bounded norm of a completely positive map.
/// Throws a precondition error when the map fails is_cp.
double cp_norm(const MultiplierMap& m, double tol);

struct CbBounds {
    double lower = 0.0;  // certified lower bound for ‖M_T‖ (≤ ‖M_T‖_cb)
    double upper = std::numeric_limits<double>::infinity();  // ‖x‖·‖y‖ when supplied
    bool has_upper = false;
};
CbBounds cb_bounds(const MultiplierMap& m,
                   std::optional<std::pair<double, double>> realization_norms = std::nullopt);

/// M(a·x·a') = a·M(x)·a' on basis triples.
bool is_bimodule(const MultiplierMap& m, double tol);

/// A-valued function on G, the carrier for L^φ(g,a) = φ(g)·a and
/// R^φ(g,a) = a·φ(g).
struct ADFunction {
    SystemPtr system;
    std::vector<AlgebraElement> phi;
};
ADFunction constant_ad_function(SystemPtr system, const AlgebraElement& value);
ADFunction ad_conjugate(const ADFunction& phi);  // φ^c(g) = α_g(φ(g⁻¹))*
bool ad_central_valued(const ADFunction& phi, double tol);

std::pair<CoeffMap, CoeffMap> build_L_R(const ADFunction& phi);

/// Positivity of [α_{g_i}(φ(g_i⁻¹g_j))] over the full enumeration of G.
PsdReport ad_positive_definite_report(const ADFunction& phi);
bool is_ad_positive_definite(const ADFunction& phi, double tol);
/// Same with entries Ad(σ(g_i,g_i⁻¹g_j)*)·α_{g_i}(φ(g_i⁻¹g_j)); agrees with
/// the plain version for central-valued φ.
PsdReport sigma_ad_positive_definite_report(const ADFunction& phi);
bool is_sigma_ad_positive_definite(const ADFunction& phi, double tol);

/// The three computable faces of positivity for L^φ; they agree on every input.
struct LphiReport {
    bool kernel_pd = false;        // L^φ positive definite
    bool central_and_adpd = false; // φ central-valued and AD-positive definite
    bool multiplier_cp = false;    // the multiplier of L^φ completely positive
    bool consistent() const {
        return kernel_pd == central_and_adpd && kernel_pd == multiplier_cp;
    }
};
LphiReport lphi_equivalences(const ADFunction& phi, const std::shared_ptr<const RegularRep>& reg,
                             double tol);

/// Polarization re-export: weights and positive-definite parts whose
/// multipliers sum to the multiplier of T_{ρ,v,x,y}; the matrix identity is
/// verified and its residual returned.
struct Decomposition {
    std::vector<std::pair<Cplx, CoeffMap>> parts;
    double residual = 0.0;
};
Decomposition decompose(const EquivariantRep& rep, const Vec& x, const Vec& y,
                        const std::shared_ptr<const RegularRep>& reg, double tol);

/**
 * Θ(g,a) = θ(a) for an α-equivariant completely positive θ whose cocycle
 * hypothesis holds (σ scalar-valued, or θ fixing every σ(g,h)). Each failed
 * hypothesis is named; the result is positive definite and its multiplier
 * sends a·λ(g) to θ(a)·λ(g).
 */
CoeffMap equivariant_cp_multiplier(const SystemPtr& system, const Mat& theta, double tol);

/// Coefficient map read off a completely positive map on the crossed product:
/// T(g,a) = E(M(a·λ(g))·λ(g)*).
CoeffMap coeff_from_cp_map(const RegularRep& reg, const std::function<Mat(const Mat&)>& m);

}  // namespace tcsd
