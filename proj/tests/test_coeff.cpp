#include "helpers.hpp"

#include "equivariant.hpp"
#include "gelfand_raikov.hpp"
#include "multiplier.hpp"

using namespace tcsd;
using namespace tcsd::test;

TEST_CASE("coefficient-map algebra") {
    auto s = m2_system();
    Rng rng(61);
    auto ident = CoeffMap::identity(s);
    auto rep = random_equivariant_rep(s, rng);
    Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
    auto t = coefficient(rep, x, y);

    CHECK((ident * t).entry_distance(t) < 1e-13);
    CHECK((t * ident).entry_distance(t) < 1e-13);

    auto t2 = coefficient(rep, y, x);
    auto t3 = conjugate(t);
    // associativity of the slotwise composition
    CHECK((t * (t2 * t3)).entry_distance((t * t2) * t3) < 1e-12);
    // distributivity
    CHECK((t * (t2 + t3)).entry_distance(t * t2 + t * t3) < 1e-12);
}

TEST_CASE("scalar embedding") {
    auto s = flip_system();
    const auto& G = s->group();
    Rng rng(62);

    std::vector<Cplx> ones(G.order(), Cplx(1.0, 0.0));
    CHECK(embed_scalar(s, ones).entry_distance(CoeffMap::identity(s)) < 1e-14);

    std::vector<Cplx> phi(G.order()), psi(G.order()), prod(G.order());
    for (int g = 0; g < G.order(); ++g) {
        phi[g] = rng.cgaussian();
        psi[g] = rng.cgaussian();
        prod[g] = phi[g] * psi[g];
    }
    CHECK((embed_scalar(s, phi) * embed_scalar(s, psi))
              .entry_distance(embed_scalar(s, prod)) < 1e-12);

    // positive-definite functions on the group transfer to the big algebra;
    // classical oracle: eigenvalues of [φ(g_i⁻¹g_j)]
    std::vector<Cplx> xi(G.order());
    for (auto& z : xi) z = rng.cgaussian();
    std::vector<Cplx> pd(G.order(), 0.0);
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) pd[g] += std::conj(xi[h]) * xi[G.mul(g, h)];
    Mat classic(G.order(), G.order());
    for (int i = 0; i < G.order(); ++i)
        for (int j = 0; j < G.order(); ++j) classic(i, j) = pd[G.mul(G.inv(i), j)];
    REQUIRE(min_eigenvalue(classic) > -1e-10);
    CHECK(is_positive_definite(embed_scalar(s, pd), 1e-9).positive);

    // and non-positive ones are refused
    std::vector<Cplx> bad(G.order(), Cplx(2.0, 0.0));
    bad[G.id()] = 1.0;
    Mat classic_bad(G.order(), G.order());
    for (int i = 0; i < G.order(); ++i)
        for (int j = 0; j < G.order(); ++j) classic_bad(i, j) = bad[G.mul(G.inv(i), j)];
    REQUIRE(min_eigenvalue(classic_bad) < -0.5);
    CHECK_FALSE(is_positive_definite(embed_scalar(s, bad), 1e-9).positive);
}

TEST_CASE("positive definiteness") {
    SUBCASE("identity map is positive definite") {
        for (const auto& entry : builtin_corpus()) {
            CAPTURE(entry.name);
            auto pd = is_positive_definite(CoeffMap::identity(entry.system), 1e-9);
            CHECK(pd.positive);
            CHECK(pd.margin >= -1e-12);
        }
    }
    SUBCASE("frozen two-point example: margin -1") {
        auto s = trivial_z2();
        auto t = embed_scalar(s, {Cplx(1.0, 0.0), Cplx(2.0, 0.0)});
        auto pd = is_positive_definite(t, 1e-9);
        CHECK_FALSE(pd.positive);
        CHECK(pd.margin == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("diagonal coefficients are positive definite") {
        Rng rng(63);
        for (const auto& entry : builtin_corpus()) {
            CAPTURE(entry.name);
            auto rep = random_equivariant_rep(entry.system, rng);
            Vec x = rng.cgaussian_vec(rep.dim());
            auto pd = is_positive_definite(coefficient(rep, x, x), 1e-9);
            CHECK(pd.positive);
        }
    }
    SUBCASE("kernel symmetry for positive-definite maps") {
        Rng rng(64);
        auto s = m2_system();
        auto rep = random_equivariant_rep(s, rng);
        Vec x = rng.cgaussian_vec(rep.dim());
        auto kernel = pd_kernel(coefficient(rep, x, x));
        int n = s->group().order() * s->algebra()->dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK((kernel[i * n + j].adjoint() - kernel[j * n + i]).norm() < 1e-10);
    }
    SUBCASE("products and sums of positive maps stay positive") {
        Rng rng(65);
        auto s = flip_system();
        auto r1 = random_equivariant_rep(s, rng);
        auto r2 = random_equivariant_rep(s, rng);
        Vec x1 = rng.cgaussian_vec(r1.dim());
        Vec x2 = rng.cgaussian_vec(r2.dim());
        auto t1 = coefficient(r1, x1, x1);
        auto t2 = coefficient(r2, x2, x2);
        CHECK(is_positive_definite(t1 + t2, 1e-9).positive);
        CHECK(is_positive_definite(t1 * t2, 1e-9).positive);
    }
    SUBCASE("the unit-slot map of a positive-definite map is completely positive") {
        Rng rng(66);
        auto s = m2_system();
        auto rep = random_equivariant_rep(s, rng);
        Vec x = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, x);
        auto cp = is_cp_on_algebra(s->algebra(), t.map(s->group().id()), 1e-9);
        CHECK(cp.cp);
    }
}

TEST_CASE("conjugation") {
    Rng rng(67);
    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto ident = CoeffMap::identity(entry.system);
        CHECK(conjugate(ident).entry_distance(ident) < 1e-13);
        auto rep = random_equivariant_rep(entry.system, rng);
        Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, y);
        CHECK(conjugate(conjugate(t)).entry_distance(t) < 1e-10);
        CHECK(conjugate(t).entry_distance(coefficient(rep, y, x)) < 1e-10);
    }
}

TEST_CASE("polarization") {
    auto s = flip_system();
    Rng rng(68);
    auto rep = random_equivariant_rep(s, rng);

    SUBCASE("degenerate case x = y") {
        Vec x = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, x);
        auto pol = polarize(rep, x, x);
        auto sum = CoeffMap::zero(s);
        for (int k = 0; k < 4; ++k) sum = sum + pol.parts[k] * pol.weights[k];
        CHECK(sum.entry_distance(t) < 1e-10);
        CHECK(is_positive_definite(t, 1e-9).positive);
    }
    SUBCASE("random pairs reconstruct with positive parts") {
        for (int trial = 0; trial < 3; ++trial) {
            Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
            auto t = coefficient(rep, x, y);
            auto pol = polarize(rep, x, y);
            auto sum = CoeffMap::zero(s);
            for (int k = 0; k < 4; ++k) {
                CHECK(is_positive_definite(pol.parts[k], 1e-9).margin >= -1e-9);
                sum = sum + pol.parts[k] * pol.weights[k];
            }
            CHECK(sum.entry_distance(t) < 1e-10);
        }
    }
}

TEST_CASE("sup norm identity on positive maps") {
    Rng rng(69);
    auto ident = CoeffMap::identity(m2_system());
    auto [sup_i, unit_i] = sup_norm_identity(ident);
    CHECK(sup_i == doctest::Approx(1.0));
    CHECK(unit_i == doctest::Approx(1.0));

    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto rep = random_equivariant_rep(entry.system, rng);
        Vec x = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, x);
        auto [sup, unit] = sup_norm_identity(t);
        CHECK(sup == doctest::Approx(unit).epsilon(1e-8));
    }

    // scalar positive functions: both equal φ(e)
    auto s = trivial_z2();
    std::vector<Cplx> pd = {Cplx(2.0, 0.0), Cplx(1.0, 0.0)};  // 2 + cos-type function
    auto [sup, unit] = sup_norm_identity(embed_scalar(s, pd));
    CHECK(sup == doctest::Approx(2.0));
    CHECK(unit == doctest::Approx(2.0));

    // exactness of the scalar sup norm
    std::vector<Cplx> phi = {Cplx(0.25, 0.0), Cplx(0.0, -3.0)};
    CHECK(embed_scalar(s, phi).sup_norm() == doctest::Approx(3.0));
}

TEST_CASE("tilde transform") {
    SUBCASE("trivial action: the transform is the identity") {
        auto s = pauli_system();
        Rng rng(70);
        auto rep = random_equivariant_rep(s, rng);
        Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, y);
        CHECK(tilde_transform(t).entry_distance(t) < 1e-13);
    }
    SUBCASE("round trip and algebra morphism") {
        auto s = m2_system();
        Rng rng(71);
        auto rep = random_equivariant_rep(s, rng);
        Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
        auto t = coefficient(rep, x, y);
        auto t2 = coefficient(rep, y, y);
        CHECK(tilde_inverse(tilde_transform(t)).entry_distance(t) < 1e-12);
        CHECK(tilde_transform(t * t2)
                  .entry_distance(tilde_transform(t) * tilde_transform(t2)) < 1e-11);
    }
}

TEST_CASE("central coefficients") {
    auto s = m2_system();

    SUBCASE("scalar maps commute with the trivial coefficients") {
        std::vector<Cplx> phi = {Cplx(0.3, 0.1), Cplx(-1.0, 0.4)};
        CHECK(commutes_with_trivial_coefficients(embed_scalar(s, phi), 1e-9));
    }
    SUBCASE("a noncentral trivial-pair coefficient does not") {
        auto triv = trivial_rep(s);
        Vec one = s->algebra()->one().coords();
        auto t = coefficient(triv, pauli_x(s->algebra()).coords(), one);
        CHECK_FALSE(commutes_with_trivial_coefficients(t, 1e-9));
    }
    SUBCASE("over the scalars every vector is central and the values are scalars") {
        auto st = trivial_z2();
        auto triv = trivial_rep(st);
        Rng rng(73);
        Vec x = rng.cgaussian_vec(1), y = rng.cgaussian_vec(1);
        auto bz = bz_coefficient(triv, x, y, 1e-9);
        for (int g = 0; g < st->group().order(); ++g) {
            Cplx expected = std::conj(x(0)) * y(0);  // v(g) = id on the scalars
            CHECK(std::abs(bz.phi[g].block(0)(0, 0) - expected) < 1e-13);
        }
        CHECK(bz.t.entry_distance(coefficient(triv, x, y)) < 1e-13);
    }
    SUBCASE("central vectors produce central-valued functions") {
        Rng rng(72);
        std::vector<Mat> w(s->group().order(), Mat::Identity(2, 2));
        auto rep = tensor_with_unitary(trivial_rep(s), w);
        auto centrals = central_vectors(rep);
        REQUIRE(centrals.size() == 2);
        Vec x = Vec::Zero(rep.dim()), y = Vec::Zero(rep.dim());
        for (const auto& c : centrals) {
            x += rng.cgaussian() * c;
            y += rng.cgaussian() * c;
        }
        auto bz = bz_coefficient(rep, x, y, 1e-8);
        // the values commute with every basis element
        for (const auto& value : bz.phi)
            for (int j = 0; j < s->algebra()->dim(); ++j) {
                auto ej = s->algebra()->basis_element(j);
                CHECK((value * ej - ej * value).norm() < 1e-9);
            }
        // and L^φ = R^φ = the coefficient map itself
        CHECK(commutes_with_trivial_coefficients(bz.t, 1e-8));
        // non-central vectors are refused
        Vec bad = Vec::Unit(rep.dim(), 1);
        CHECK_THROWS_AS(bz_coefficient(rep, bad, bad, 1e-9), Error);
    }
}

TEST_CASE("amenability witnesses") {
    auto s = s3_system();
    auto ident = CoeffMap::identity(s);

    std::vector<CoeffMap> constant = {ident};
    CHECK(amenability_witness_check(constant, 1e-9, 1e-9).ok);

    std::vector<CoeffMap> shrinking;
    for (int n = 1; n <= 10; ++n) shrinking.push_back(ident * Cplx(1.0 - 1.0 / n, 0.0));
    auto report = amenability_witness_check(shrinking, 0.1, 1e-9);
    CHECK(report.ok);
    CHECK(report.final_deviation == doctest::Approx(0.1));
    CHECK(report.sup_bound == doctest::Approx(0.9));
    // too strict an epsilon fails
    CHECK_FALSE(amenability_witness_check(shrinking, 0.01, 1e-9).ok);

    // a family violating positivity fails with a reported negative margin
    auto broken = ident;
    broken.map(s->group().id()) -= 2.0 * Mat::Identity(broken.map(0).rows(), broken.map(0).cols());
    std::vector<CoeffMap> bad = {ident, broken};
    auto bad_report = amenability_witness_check(bad, 10.0, 1e-9);
    CHECK_FALSE(bad_report.ok);
    CHECK(bad_report.worst_margin < -0.5);
}
