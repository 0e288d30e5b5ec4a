#include "helpers.hpp"

using namespace tcsd;
using namespace tcsd::test;

TEST_CASE("group table validation") {
    auto z4 = FiniteGroup::cyclic(4);
    CHECK(z4.order() == 4);
    CHECK(z4.id() == 0);
    CHECK(z4.mul(3, 2) == 1);
    CHECK(z4.inv(3) == 1);

    auto s3 = FiniteGroup::symmetric3();
    CHECK(s3.order() == 6);
    // non-abelian witness
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
    CHECK_FALSE(abelian);

    auto z2z2 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(z2z2.order() == 4);
    for (int g = 0; g < 4; ++g) CHECK(z2z2.mul(g, g) == z2z2.id());

    // broken tables are rejected
    CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {1, 0, 1, 0}), Error);
}

TEST_CASE("system validation") {
    SUBCASE("trivial system is valid") {
        auto s = trivial_z2();
        CHECK(s->worst_residual() <= 1e-12);
    }
    SUBCASE("pauli cocycle is valid; oracle sweeps all 64 triples") {
        auto s = pauli_system();
        CHECK(s->worst_residual() <= 1e-12);
        // independent oracle: the scalar cocycle identity on every triple
        auto z2z2 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
        auto sigma = [](int g, int h) { return ((g % 2) * (h / 2)) % 2 == 0 ? 1.0 : -1.0; };
        for (int g = 0; g < 4; ++g)
            for (int h = 0; h < 4; ++h)
                for (int k = 0; k < 4; ++k) {
                    double lhs = sigma(g, h) * sigma(z2z2.mul(g, h), k);
                    double rhs = sigma(h, k) * sigma(g, z2z2.mul(h, k));
                    CHECK(lhs == doctest::Approx(rhs));
                }
    }
    SUBCASE("broken normalization is rejected") {
        auto alg = scalar_algebra();
        auto g = FiniteGroup::cyclic(2);
        std::vector<Automorphism> alpha(2, Automorphism::identity(alg));
        std::vector<AlgebraElement> sigma(4, alg->one());
        sigma[1 * 2 + 0] = alg->scalar(-1.0);  // sigma(g, e) = -1
        CHECK_THROWS_AS(TwistedSystem::validated(alg, g, alpha, sigma, 1e-9), Error);
    }
    SUBCASE("single-entry perturbations above tolerance are rejected") {
        Rng rng(21);
        auto base = m2_system();
        const auto& G = base->group();
        for (int idx = 0; idx < G.order() * G.order(); ++idx) {
            std::vector<Automorphism> alpha;
            std::vector<AlgebraElement> sigma;
            for (int g = 0; g < G.order(); ++g) alpha.push_back(base->alpha(g));
            for (int g = 0; g < G.order(); ++g)
                for (int h = 0; h < G.order(); ++h) sigma.push_back(base->sigma(g, h));
            sigma[idx] = sigma[idx] + random_element(base->algebra(), rng) * Cplx(1e-7, 0.0);
            CHECK_THROWS_AS(
                TwistedSystem::validated(base->algebra(), G, alpha, sigma, 1e-9), Error);
        }
    }
    SUBCASE("generators produce valid systems") {
        Rng rng(22);
        auto inner = random_inner_system(m2(), FiniteGroup::cyclic(3), rng);
        CHECK(inner->worst_residual() <= 1e-9);
        auto scalar = scalar_cocycle_system(c2(), FiniteGroup::cyclic(2),
                                            [](int, int) { return Cplx(1.0, 0.0); });
        CHECK(scalar->worst_residual() <= 1e-12);
    }
}

TEST_CASE("derived cocycle inverse identity") {
    SUBCASE("identity triple gives zero") {
        auto s = pauli_system();
        int e = s->group().id();
        CHECK(lemma_cocycle_residual(*s, e, e, e) == doctest::Approx(0.0));
    }
    SUBCASE("pauli system: all 64 triples vanish") {
        auto s = pauli_system();
        CHECK(lemma_cocycle_sweep(*s) <= 1e-12);
    }
    SUBCASE("random inner systems stay below 1e-10") {
        Rng rng(23);
        for (int trial = 0; trial < 3; ++trial) {
            auto s = random_inner_system(m2(), FiniteGroup::cyclic(2), rng);
            CHECK(lemma_cocycle_sweep(*s) <= 1e-10);
        }
    }
    SUBCASE("whole corpus") {
        for (const auto& entry : builtin_corpus()) {
            CAPTURE(entry.name);
            CHECK(lemma_cocycle_sweep(*entry.system) <= 1e-10);
        }
    }
}
