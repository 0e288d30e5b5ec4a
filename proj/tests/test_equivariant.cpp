#include "helpers.hpp"

#include "equivariant.hpp"

using namespace tcsd;
using namespace tcsd::test;

namespace {

// independent axiom sweep, used as the oracle against the validated builders
double axiom_residual(const EquivariantRep& rep) {
    const auto& s = rep.system();
    const auto& X = *rep.module();
    const auto& A = s->algebra();
    double worst = 0.0;
    for (int g = 0; g < s->group().order(); ++g) {
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            worst = std::max(worst, op_norm(rep.rho(s->alpha(g)(ej)) -
                                            rep.v(g) * rep.rho(ej) * rep.v_inv(g)));
            worst = std::max(worst,
                             op_norm(rep.v(g) * X.right_mul_of(ej) -
                                     X.right_mul_of(s->alpha(g)(ej)) * rep.v(g)));
        }
        for (int h = 0; h < s->group().order(); ++h)
            worst = std::max(worst, op_norm(rep.v(g) * rep.v(h) -
                                            rep.ad_rho(s->sigma(g, h)) *
                                                rep.v(s->group().mul(g, h))));
        for (int i = 0; i < X.dim(); ++i)
            for (int j = 0; j < X.dim(); ++j) {
                auto lhs = s->alpha(g)(X.inner(Vec::Unit(X.dim(), i), Vec::Unit(X.dim(), j)));
                auto rhs = X.inner(rep.v(g) * Vec::Unit(X.dim(), i),
                                   rep.v(g) * Vec::Unit(X.dim(), j));
                worst = std::max(worst, (lhs - rhs).norm());
            }
    }
    return worst;
}

}  // namespace

TEST_CASE("trivial pair") {
    auto s = pauli_system();
    auto rep = trivial_rep(s);
    CHECK(rep.dim() == s->algebra()->dim());
    CHECK(axiom_residual(rep) < 1e-10);
    // over the scalars the action part is the trivial character
    for (int g = 0; g < s->group().order(); ++g)
        CHECK(op_norm(rep.v(g) - Mat::Identity(1, 1)) < 1e-14);
    // its unit-vector coefficient is the identity map
    Vec one = s->algebra()->one().coords();
    CHECK(coefficient(rep, one, one).entry_distance(CoeffMap::identity(s)) < 1e-13);
}

TEST_CASE("regular pair") {
    auto s = flip_system();
    auto rep = regular_equivariant(s);
    CHECK(rep.dim() == s->algebra()->dim() * s->group().order());
    CHECK(axiom_residual(rep) < 1e-10);

    // over the scalars it reduces to left translation
    auto st = trivial_z2();
    auto rt = regular_equivariant(st);
    for (int g = 0; g < st->group().order(); ++g)
        for (int h = 0; h < st->group().order(); ++h)
            CHECK(std::abs(rt.v(g)(st->group().mul(g, h), h) - 1.0) < 1e-14);
}

TEST_CASE("tensor with a unitary representation of the group") {
    auto s = m2_system();
    auto triv = trivial_rep(s);

    SUBCASE("trivial one-dimensional w returns the original") {
        std::vector<Mat> w(s->group().order(), Mat::Identity(1, 1));
        auto rep = tensor_with_unitary(triv, w);
        CHECK(rep.dim() == triv.dim());
        Rng rng(51);
        Vec x = rng.cgaussian_vec(rep.dim()), y = rng.cgaussian_vec(rep.dim());
        CHECK(coefficient(rep, x, y).entry_distance(coefficient(triv, x, y)) < 1e-12);
    }
    SUBCASE("sign representation of Z2") {
        std::vector<Mat> w(2, Mat::Identity(1, 1));
        w[1](0, 0) = -1.0;
        auto rep = tensor_with_unitary(triv, w);
        CHECK(axiom_residual(rep) < 1e-10);
    }
    SUBCASE("left translation recovers the regular pair") {
        const auto& G = s->group();
        std::vector<Mat> w(G.order(), Mat::Zero(G.order(), G.order()));
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h) w[g](G.mul(g, h), h) = 1.0;
        auto rep = tensor_with_unitary(triv, w);
        auto reg = regular_equivariant(s);
        CHECK(rep.dim() == reg.dim());
        CHECK(axiom_residual(rep) < 1e-10);
        // same coefficients after the carrier reshuffle (slot-major vs coordinate-major)
        Rng rng(52);
        Vec x = rng.cgaussian_vec(rep.dim());
        auto t1 = coefficient(rep, x, x);
        int da = s->algebra()->dim(), n = G.order();
        Vec xr(x.size());
        for (int c = 0; c < da; ++c)
            for (int g = 0; g < n; ++g) xr(g * da + c) = x(c * n + g);
        auto t2 = coefficient(reg, xr, xr);
        CHECK(t1.entry_distance(t2) < 1e-10);
    }
    SUBCASE("a non-representation is rejected") {
        std::vector<Mat> w(s->group().order(), Mat::Identity(2, 2));
        w[1] *= Cplx(0.0, 1.0);  // w(g)w(g) ≠ w(e)
        CHECK_THROWS_AS(tensor_with_unitary(triv, w), Error);
    }
}

TEST_CASE("direct sums and tensor products of pairs") {
    auto s = flip_system();
    auto triv = trivial_rep(s);
    auto reg = regular_equivariant(s);

    SUBCASE("singleton sum is the summand") {
        auto sum = direct_sum_reps({&triv});
        CHECK(sum.dim() == triv.dim());
    }
    SUBCASE("trivial plus regular passes the axioms") {
        auto sum = direct_sum_reps({&triv, &reg});
        CHECK(axiom_residual(sum) < 1e-10);
    }
    SUBCASE("tensor with the trivial pair is the identity") {
        auto t = tensor_reps(reg, triv);
        CHECK(t.dim() == reg.dim());
        CHECK(axiom_residual(t) < 1e-10);
        // coefficients match along x ↦ x⊗1
        Rng rng(53);
        Vec x = rng.cgaussian_vec(reg.dim()), y = rng.cgaussian_vec(reg.dim());
        Vec one = s->algebra()->one().coords();
        const Mat& q = t.module()->quotient_map();
        Vec xt = q * kron(Mat(x), Mat(one));
        Vec yt = q * kron(Mat(y), Mat(one));
        CHECK(coefficient(t, xt, yt).entry_distance(coefficient(reg, x, y)) < 1e-10);
    }
    SUBCASE("trivial tensor regular on the pauli system") {
        auto sp = pauli_system();
        auto t = tensor_reps(trivial_rep(sp), regular_equivariant(sp));
        CHECK(axiom_residual(t) < 1e-10);
    }
}

TEST_CASE("coefficient identities") {
    auto s = m2_system();
    Rng rng(54);

    SUBCASE("trivial-pair coefficients multiply through the algebra") {
        auto triv = trivial_rep(s);
        Vec one = s->algebra()->one().coords();
        for (int trial = 0; trial < 5; ++trial) {
            auto b = random_element(s->algebra(), rng);
            auto bp = random_element(s->algebra(), rng);
            auto t_b = coefficient(triv, b.coords(), one);
            auto t_bp = coefficient(triv, bp.coords(), one);
            // T_{b',1} × T_{b,1} = T_{bb',1}: values are a ↦ (bb')*·a
            auto prod = t_bp * t_b;
            auto direct = coefficient(triv, (b * bp).coords(), one);
            CHECK(prod.entry_distance(direct) < 1e-12);
            for (int g = 0; g < s->group().order(); ++g) {
                auto a = random_element(s->algebra(), rng);
                CHECK((t_b.apply(g, a) - b.adjoint() * a).norm() < 1e-12);
            }
        }
    }
    SUBCASE("sums and products of coefficients on random pairs") {
        for (int trial = 0; trial < 3; ++trial) {
            auto r1 = random_equivariant_rep(s, rng);
            auto r2 = random_equivariant_rep(s, rng);
            Vec x1 = rng.cgaussian_vec(r1.dim()), y1 = rng.cgaussian_vec(r1.dim());
            Vec x2 = rng.cgaussian_vec(r2.dim()), y2 = rng.cgaussian_vec(r2.dim());
            auto t1 = coefficient(r1, x1, y1);
            auto t2 = coefficient(r2, x2, y2);

            auto sum = direct_sum_reps({&r1, &r2});
            Vec xs(sum.dim()), ys(sum.dim());
            xs << x1, x2;
            ys << y1, y2;
            CHECK(coefficient(sum, xs, ys).entry_distance(t1 + t2) < 1e-9);

            auto prod = tensor_reps(r2, r1);
            const Mat& q = prod.module()->quotient_map();
            Vec xt = q * kron(Mat(x2), Mat(x1));
            Vec yt = q * kron(Mat(y2), Mat(y1));
            CHECK(coefficient(prod, xt, yt).entry_distance(t1 * t2) < 1e-9);
        }
    }
}

TEST_CASE("random pair generator produces valid pairs with nontrivial central part") {
    Rng rng(55);
    for (const auto& entry : builtin_corpus()) {
        CAPTURE(entry.name);
        auto rep = random_equivariant_rep(entry.system, rng);
        CHECK(rep.dim() ==
              entry.system->algebra()->dim() * (1 + entry.system->group().order()));
        CHECK(axiom_residual(rep) < 1e-8);
    }
}
