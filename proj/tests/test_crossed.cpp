#include "helpers.hpp"

using namespace tcsd;
using namespace tcsd::test;

TEST_CASE("convolution and involution") {
    auto s = pauli_system();
    auto unit = CrossedElement::unit(s);
    Rng rng(31);

    SUBCASE("unit law") {
        auto f = random_crossed_element(s, rng);
        CHECK((f.convolve(unit) - f).sup_coefficient_norm() < 1e-13);
        CHECK((unit.convolve(f) - f).sup_coefficient_norm() < 1e-13);
    }
    SUBCASE("pauli generators anticommute") {
        // sigma-table oracle: with a = (1,0) and b = (0,1),
        // sigma(a,b) = 1 while sigma(b,a) = -1
        int a = s->group().index_of("(g1,e)");
        int b = s->group().index_of("(e,g1)");
        auto la = CrossedElement::monomial(s, s->algebra()->one(), a);
        auto lb = CrossedElement::monomial(s, s->algebra()->one(), b);
        int ab = s->group().mul(a, b);
        auto prod1 = la.convolve(lb);
        auto prod2 = lb.convolve(la);
        CHECK((prod1.at(ab) - s->algebra()->one()).norm() < 1e-14);
        CHECK((prod2.at(ab) + s->algebra()->one()).norm() < 1e-14);
        CHECK((prod1 + prod2 - prod1 * 2.0).sup_coefficient_norm() ==
              doctest::Approx(2.0));  // they differ exactly by the sign
    }
    SUBCASE("associativity on random elements") {
        for (int trial = 0; trial < 5; ++trial) {
            auto f1 = random_crossed_element(s, rng);
            auto f2 = random_crossed_element(s, rng);
            auto f3 = random_crossed_element(s, rng);
            CHECK((f1.convolve(f2).convolve(f3) - f1.convolve(f2.convolve(f3)))
                      .sup_coefficient_norm() < 1e-10);
        }
    }
    SUBCASE("involution laws") {
        auto m = m2_system();
        Rng rng2(32);
        auto a = random_element(m->algebra(), rng2);
        auto ae = CrossedElement::monomial(m, a, m->group().id());
        CHECK((ae.involute() - CrossedElement::monomial(m, a.adjoint(), m->group().id()))
                  .sup_coefficient_norm() < 1e-14);
        auto f = random_crossed_element(m, rng2);
        CHECK((f.involute().involute() - f).sup_coefficient_norm() < 1e-12);
        auto g = random_crossed_element(m, rng2);
        CHECK((f.convolve(g).involute() - g.involute().convolve(f.involute()))
                  .sup_coefficient_norm() < 1e-10);
    }
}

TEST_CASE("regular realization") {
    SUBCASE("trivial system: two simultaneously diagonalizable generators") {
        auto s = trivial_z2();
        auto reg = RegularRep::make(s);
        // oracle: diagonalize lambda(1) (the swap) and check the image algebra
        // is diagonal in that basis with two independent entries
        Eigen::ComplexEigenSolver<Mat> es(reg->lambda(1));
        Mat v = es.eigenvectors();
        Mat d0 = v.inverse() * reg->lambda(0) * v;
        Mat d1 = v.inverse() * reg->lambda(1) * v;
        CHECK(op_norm(d0 - Mat(d0.diagonal().asDiagonal())) < 1e-10);
        CHECK(op_norm(d1 - Mat(d1.diagonal().asDiagonal())) < 1e-10);
        auto summary = analyze_crossed_product(*reg);
        CHECK(summary.dim == 2);
        CHECK(summary.center_dim == 2);
        CHECK(summary.blocks == std::vector<int>{1, 1});
    }
    SUBCASE("flip system is a full 2x2 matrix algebra") {
        auto reg = RegularRep::make(flip_system());
        auto summary = analyze_crossed_product(*reg);
        CHECK(summary.dim == 4);
        CHECK(summary.center_dim == 1);
        CHECK(summary.blocks == std::vector<int>{2});
    }
    SUBCASE("pauli twisted algebra is a full 2x2 matrix algebra") {
        auto reg = RegularRep::make(pauli_system());
        auto summary = analyze_crossed_product(*reg);
        CHECK(summary.dim == 4);
        CHECK(summary.center_dim == 1);
        CHECK(summary.blocks == std::vector<int>{2});
    }
    SUBCASE("covariance relations") {
        auto s = m2_system();
        auto reg = RegularRep::make(s);
        Rng rng(33);
        for (int g = 0; g < s->group().order(); ++g) {
            CHECK(op_norm(reg->lambda(g) * reg->lambda(g).adjoint() -
                          Mat::Identity(reg->space_dim(), reg->space_dim())) < 1e-12);
            auto a = random_element(s->algebra(), rng);
            CHECK(op_norm(reg->ell(s->alpha(g)(a)) -
                          reg->lambda(g) * reg->ell(a) * reg->lambda(g).adjoint()) < 1e-10);
            for (int h = 0; h < s->group().order(); ++h)
                CHECK(op_norm(reg->lambda(g) * reg->lambda(h) -
                              reg->ell(s->sigma(g, h)) * reg->lambda(s->group().mul(g, h))) <
                      1e-12);
        }
    }
    SUBCASE("faithfulness: the monomial images are linearly independent") {
        for (const auto& entry : builtin_corpus()) {
            CAPTURE(entry.name);
            auto reg = RegularRep::make(entry.system);
            int expected = entry.system->algebra()->dim() * entry.system->group().order();
            CHECK(analyze_crossed_product(*reg).dim == expected);
        }
    }
}

TEST_CASE("conditional expectation") {
    auto s = m2_system();
    auto reg = RegularRep::make(s);
    Rng rng(34);

    SUBCASE("unital and reads off the identity coefficient") {
        CHECK((reg->expectation(Mat::Identity(reg->space_dim(), reg->space_dim())) -
               s->algebra()->one())
                  .norm() < 1e-13);
        auto a = random_element(s->algebra(), rng);
        auto b = random_element(s->algebra(), rng);
        auto f = CrossedElement::monomial(s, a, s->group().id()) +
                 CrossedElement::monomial(s, b, 1);
        CHECK((reg->expectation(reg->act(f)) - a).norm() < 1e-12);
    }
    SUBCASE("equivariance on random elements") {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_crossed_element(s, rng);
            Mat x = reg->act(f);
            for (int g = 0; g < s->group().order(); ++g) {
                auto lhs =
                    reg->expectation(reg->lambda(g) * x * reg->lambda(g).adjoint());
                CHECK((lhs - s->alpha(g)(reg->expectation(x))).norm() < 1e-10);
            }
        }
    }
    SUBCASE("faithful: the pairing trace Gram has full rank") {
        // E(x*x) = 0 forces x = 0 exactly when the scalar Gram
        // (m,k) ↦ tr π(E(b_m*·b_k)) is positive definite
        int n = reg->coord_dim();
        std::vector<Mat> basis;
        for (int g = 0; g < s->group().order(); ++g)
            for (int j = 0; j < s->algebra()->dim(); ++j)
                basis.push_back(reg->ell_basis(j) * reg->lambda(g));
        Mat gram(n, n);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                gram(m, k) = reg->expectation(basis[m].adjoint() * basis[k]).rep().trace();
        CHECK(min_eigenvalue(gram) > 1e-6);
        CHECK(rank_of(gram, 1e-9) == n);
        // direct check on a few random nonzero elements
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_crossed_element(s, rng);
            Mat x = reg->act(f);
            CHECK(reg->expectation(x.adjoint() * x).norm() > 1e-10);
        }
    }
    SUBCASE("fourier coefficients invert the representation") {
        auto f = random_crossed_element(s, rng);
        auto back = reg->fourier(reg->act(f));
        CHECK((back - f).sup_coefficient_norm() < 1e-12);
    }
}

TEST_CASE("covariant pairs and the integrated form") {
    auto s = flip_system();
    auto reg = RegularRep::make(s);
    auto cov = CovariantRep::regular(*reg);
    Rng rng(35);

    SUBCASE("regular pair integrates to the regular realization") {
        auto f = random_crossed_element(s, rng);
        CHECK(op_norm(cov.rep(f) - reg->act(f)) < 1e-12);
    }
    SUBCASE("unit maps to the identity") {
        CHECK(op_norm(cov.rep(CrossedElement::unit(s)) -
                      Mat::Identity(cov.space_dim(), cov.space_dim())) < 1e-14);
    }
    SUBCASE("star homomorphism on random pairs") {
        for (int trial = 0; trial < 5; ++trial) {
            auto f1 = random_crossed_element(s, rng);
            auto f2 = random_crossed_element(s, rng);
            CHECK(op_norm(cov.rep(f1.convolve(f2)) - cov.rep(f1) * cov.rep(f2)) < 1e-10);
            CHECK(op_norm(cov.rep(f1.involute()) - cov.rep(f1).adjoint()) < 1e-10);
        }
    }
    SUBCASE("validated constructor rejects a broken pair") {
        std::vector<Mat> pi_basis;
        for (int j = 0; j < s->algebra()->dim(); ++j) pi_basis.push_back(reg->ell_basis(j));
        std::vector<Mat> u = {reg->lambda(0), reg->lambda(1) * 0.5};
        CHECK_THROWS_AS(CovariantRep::validated(s, pi_basis, u, 1e-9), Error);
    }
    SUBCASE("norm through the realization satisfies the square identity") {
        auto f = random_crossed_element(s, rng);
        double n = reg->norm(f);
        CHECK(reg->norm(f.involute().convolve(f)) == doctest::Approx(n * n).epsilon(1e-9));
    }
}
