#pragma once

#include "coeff.hpp"

namespace tcsd {

/**
 * Kolmogorov-type reconstruction of a positive-definite coefficient map: an
 * equivariant pair (ρ, v) with a cyclic vector x such that
 * ⟨x, ρ(a)v(g)x⟩ = T(g,a).
 *
 * The construction spans the functions δ_{(g,a)}·b by the finite family
 * δ_{(g,e_j)}·e_k — the kernel is sesquilinear in the algebra slots, so
 * δ_{(g,a)} collapses onto Σ_j a_j·δ_{(g,e_j)} modulo null vectors and
 * nothing is lost — and defines on generators
 *   ρ₀(a)·δ_{(g,b)}·c = δ_{(g,ab)}·c,
 *   v₀(g)·δ_{(h,b)}·c = δ_{(gh, α_g(b)σ(g,h))}·(σ(g,h)*·α_g(c)),
 * which descend to the null-vector quotient.
 */
struct Reconstruction {
    EquivariantRep rep;
    Vec cyclic;                   // the reconstructing vector x
    double coefficient_residual;  // max entrywise defect of ⟨x,ρ(e_j)v(g)x⟩ = T_g(e_j)
};

Reconstruction reconstruct(const CoeffMap& t, double tol);

/**
 * Unitary intertwiner between two cyclic triples reproducing the same
 * coefficient map: u(ρ(a)v(g)x·b) = ρ'(a)v'(g)x'·b on generators, validated as
 * unitary, intertwining and cyclic-vector-preserving. Throws when either
 * triple fails to be cyclic or the triples do not reproduce a common map.
 */
struct Intertwiner {
    Mat u;
    double worst_residual;
};

Intertwiner intertwiner(const EquivariantRep& rep1, const Vec& x1, const EquivariantRep& rep2,
                        const Vec& x2, double tol);

/// Compression of (ρ, v) to the invariant submodule spanned by
/// {ρ(a)v(g)x·b}: a cyclic triple with the same diagonal coefficient as
/// (rep, x, x). Gives an independent counterpart for uniqueness checks.
struct CyclicTriple {
    EquivariantRep rep;
    Vec cyclic;
};
CyclicTriple cyclic_restriction(const EquivariantRep& rep, const Vec& x, double tol);

}  // namespace tcsd
