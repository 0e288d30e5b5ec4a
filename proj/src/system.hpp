#pragma once

#include "algebra.hpp"
#include "group.hpp"
#include "rng.hpp"

#include <functional>
#include <memory>

namespace tcsd {

class TwistedSystem;
using SystemPtr = std::shared_ptr<const TwistedSystem>;

/**
 * Twisted action (α, σ) of a finite group on a finite-dimensional C*-algebra.
 * Construction validates, exhaustively over group tuples and the algebra
 * basis,
 *   α_g α_h = Ad(σ(g,h)) α_{gh},
 *   σ(g,h) σ(gh,k) = α_g(σ(h,k)) σ(g,hk),
 *   σ(g,e) = σ(e,g) = 1,
 * together with unitarity of every σ(g,h). A violation above the tolerance
 * throws, naming the worst offending tuple and its residual.
 */
class TwistedSystem {
public:
    static SystemPtr validated(AlgebraPtr algebra, FiniteGroup group,
                               std::vector<Automorphism> alpha, std::vector<AlgebraElement> sigma,
                               double tol);

    const AlgebraPtr& algebra() const { return algebra_; }
    const FiniteGroup& group() const { return group_; }
    const Automorphism& alpha(int g) const { return alpha_[g]; }
    const Automorphism& alpha_inv(int g) const { return alpha_inv_[g]; }
    const AlgebraElement& sigma(int g, int h) const { return sigma_[g * group_.order() + h]; }
    double worst_residual() const { return worst_residual_; }

private:
    TwistedSystem(AlgebraPtr algebra, FiniteGroup group, std::vector<Automorphism> alpha,
                  std::vector<AlgebraElement> sigma);

    AlgebraPtr algebra_;
    FiniteGroup group_;
    std::vector<Automorphism> alpha_;
    std::vector<Automorphism> alpha_inv_;
    std::vector<AlgebraElement> sigma_;
    double worst_residual_ = 0.0;
};

/// ‖σ(h,h⁻¹h') − α_g⁻¹(σ(g,h')·σ(gh,h⁻¹h')*·σ(g,h)*)‖ — vanishes on every
/// valid system; a useful independent consistency probe.
double lemma_cocycle_residual(const TwistedSystem& system, int g, int h, int hp);
double lemma_cocycle_sweep(const TwistedSystem& system);

SystemPtr trivial_system(AlgebraPtr algebra, FiniteGroup group);
SystemPtr scalar_cocycle_system(AlgebraPtr algebra, FiniteGroup group,
                                const std::function<Cplx(int, int)>& sigma, double tol = 1e-9);
/// α_g = Ad(w_g), σ(g,h) = w_g·w_h·w_{gh}* for unitaries w with w_e = 1.
SystemPtr inner_action_system(AlgebraPtr algebra, FiniteGroup group,
                              const std::vector<AlgebraElement>& w, double tol = 1e-9);
SystemPtr random_inner_system(AlgebraPtr algebra, FiniteGroup group, Rng& rng, double tol = 1e-9);

AlgebraElement random_element(const AlgebraPtr& algebra, Rng& rng);
AlgebraElement random_unitary(const AlgebraPtr& algebra, Rng& rng);

struct CorpusEntry {
    std::string name;
    SystemPtr system;
};
/// Bundled regression systems: trivial, pauli, flip, m2_inner, s3.
const std::vector<CorpusEntry>& builtin_corpus();
SystemPtr builtin_system(const std::string& name);

}  // namespace tcsd
