#include "helpers.hpp"

#include "correspondence.hpp"
#include "equivariant.hpp"

using namespace tcsd;
using namespace tcsd::test;

namespace {

Vec crossed_coords(const RegularRep& reg, const CrossedElement& f) {
    int da = reg.system()->algebra()->dim();
    Vec c(reg.coord_dim());
    for (int g = 0; g < reg.system()->group().order(); ++g)
        c.segment(g * da, da) = f.at(g).coords();
    return c;
}

}  // namespace

TEST_CASE("the crossed product over itself") {
    auto s = pauli_system();
    auto reg = RegularRep::make(s);
    auto self = correspondence_over_self(reg);
    Rng rng(101);

    SUBCASE("actions are the convolutions and the inner product is ξ*∗η") {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_crossed_element(s, rng);
            auto xi = random_crossed_element(s, rng);
            auto eta = random_crossed_element(s, rng);
            CHECK((self.left_of(f) * crossed_coords(*reg, xi) -
                   crossed_coords(*reg, f.convolve(xi)))
                      .norm() < 1e-10);
            CHECK((self.right_of(f) * crossed_coords(*reg, xi) -
                   crossed_coords(*reg, xi.convolve(f)))
                      .norm() < 1e-10);
            CHECK((self.inner(crossed_coords(*reg, xi), crossed_coords(*reg, eta)) -
                   xi.involute().convolve(eta))
                      .sup_coefficient_norm() < 1e-10);
        }
    }
    SUBCASE("inner products of vectors are positive in the crossed product") {
        for (int trial = 0; trial < 5; ++trial) {
            auto xi = random_crossed_element(s, rng);
            auto ip = self.inner(crossed_coords(*reg, xi), crossed_coords(*reg, xi));
            CHECK(min_eigenvalue(reg->act(ip)) > -1e-10);
        }
    }
    SUBCASE("localization returns the conjugation pair") {
        auto loc = localize_correspondence(self, 1e-9);
        CHECK(loc.rep.dim() == self.dim());  // the expectation pairing is faithful
        auto formula = conjugation_rep_matrices(s);
        for (int g = 0; g < s->group().order(); ++g)
            CHECK(op_norm(loc.rep.v(g) - loc.from_raw * formula[g] * loc.from_raw.adjoint()) <
                  1e-10);
        // abelian scalar case: multiplication by the symmetrized bicharacter
        int da = s->algebra()->dim();
        for (int g = 0; g < s->group().order(); ++g)
            for (int h = 0; h < s->group().order(); ++h) {
                Cplx expected = s->sigma(g, h).block(0)(0, 0) *
                                std::conj(s->sigma(h, g).block(0)(0, 0));
                CHECK(std::abs(formula[g](h * da, h * da) - expected) < 1e-13);
            }
    }
}

TEST_CASE("crossed-product correspondences of equivariant pairs") {
    Rng rng(102);
    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto reg = RegularRep::make(entry.system);
        auto rep = random_equivariant_rep(entry.system, rng);
        auto corr = crossed_correspondence(rep, reg);
        int e = entry.system->group().id();

        // bimodule associativity (f1∗f2)·ξ = f1·(f2·ξ) and commuting actions
        auto f1 = random_crossed_element(entry.system, rng);
        auto f2 = random_crossed_element(entry.system, rng);
        CHECK(op_norm(corr.left_of(f1.convolve(f2)) - corr.left_of(f1) * corr.left_of(f2)) <
              1e-9);
        CHECK(op_norm(corr.right_of(f2.convolve(f1)) -
                      corr.right_of(f1) * corr.right_of(f2)) < 1e-9);
        CHECK(op_norm(corr.left_of(f1) * corr.right_of(f2) -
                      corr.right_of(f2) * corr.left_of(f1)) < 1e-9);

        // the B-valued inner product is compatible with the right action:
        // ⟨ξ, η·f⟩ = ⟨ξ,η⟩∗f
        Vec xi = rng.cgaussian_vec(corr.dim());
        Vec eta = rng.cgaussian_vec(corr.dim());
        auto lhs = corr.inner(xi, corr.right_of(f1) * eta);
        auto rhs = corr.inner(xi, eta).convolve(f1);
        CHECK((lhs - rhs).sup_coefficient_norm() < 1e-9);

        // coefficient recovery: T(g,a) = E(⟨x⊙e, (a·λ(g))·(y⊙e)⟩·λ(g)*)
        Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, y);
        Vec yv = Vec::Zero(corr.dim()), zv = Vec::Zero(corr.dim());
        yv.segment(e * rep.dim(), rep.dim()) = x;
        zv.segment(e * rep.dim(), rep.dim()) = y;
        CHECK(coefficient_from_correspondence(corr, yv, zv).entry_distance(t) < 1e-8);

        // linearity in the second vector, conjugate linearity in the first
        auto t_sum = coefficient_from_correspondence(corr, yv, zv * Cplx(0.0, 2.0));
        CHECK(t_sum.entry_distance(t * Cplx(0.0, 2.0)) < 1e-9);
        auto t_conj = coefficient_from_correspondence(corr, yv * Cplx(0.0, 2.0), zv);
        CHECK(t_conj.entry_distance(t * Cplx(0.0, -2.0)) < 1e-9);
    }
}

TEST_CASE("localization of a crossed-product correspondence") {
    Rng rng(103);
    auto s = m2_system();
    auto reg = RegularRep::make(s);
    auto rep = random_equivariant_rep(s, rng);
    auto corr = crossed_correspondence(rep, reg);
    auto loc = localize_correspondence(corr, 1e-9);

    // the localized coefficient matches the correspondence coefficient
    Vec yv = rng.cgaussian_vec(corr.dim());
    Vec zv = rng.cgaussian_vec(corr.dim());
    auto direct = coefficient_from_correspondence(corr, yv, zv);
    auto through_pair = coefficient(loc.rep, loc.from_raw * yv, loc.from_raw * zv);
    CHECK(direct.entry_distance(through_pair) < 1e-8);
}

TEST_CASE("round trip: every coefficient factors through a correspondence") {
    Rng rng(104);
    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto reg = RegularRep::make(entry.system);
        // identity through the trivial pair
        auto triv = trivial_rep(entry.system);
        auto corr = crossed_correspondence(triv, reg);
        Vec one = entry.system->algebra()->one().coords();
        int e = entry.system->group().id();
        Vec unit_vec = Vec::Zero(corr.dim());
        unit_vec.segment(e * triv.dim(), triv.dim()) = one;
        auto t = coefficient_from_correspondence(corr, unit_vec, unit_vec);
        CHECK(t.entry_distance(CoeffMap::identity(entry.system)) < 1e-10);
    }
}
