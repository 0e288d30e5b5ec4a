#include "suite.hpp"

#include <limits>
#include <sstream>

namespace tcsd {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

struct SystemContext {
    std::string name;
    SystemPtr system;
    std::shared_ptr<const RegularRep> reg;
    std::uint64_t seed;
    double tol;

    Rng rng(const char* item) const {
        std::uint64_t salt = 1469598103934665603ULL;
        for (const char* p = item; *p; ++p) salt = (salt ^ static_cast<unsigned char>(*p)) * 1099511628211ULL;
        for (char c : name) salt = (salt ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
        return Rng(seed ^ salt);
    }
};

using Check = SuiteItem (*)(const SystemContext&);

Vec random_vec(Rng& rng, int n, double scale = 1.0) { return scale * rng.cgaussian_vec(n); }

SuiteItem make_item(const SystemContext& ctx, const char* name, bool pass, double value,
                    std::string detail = {}) {
    return SuiteItem{name, ctx.name, pass, value, std::move(detail)};
}

// --- system level -----------------------------------------------------------

SuiteItem check_cocycle_identities(const SystemContext& ctx) {
    double worst = ctx.system->worst_residual();
    bool rejected = false;
    try {
        // perturb one sigma entry well above tolerance; validation must throw
        const auto& G = ctx.system->group();
        std::vector<Automorphism> alpha;
        std::vector<AlgebraElement> sigma;
        for (int g = 0; g < G.order(); ++g) alpha.push_back(ctx.system->alpha(g));
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h) sigma.push_back(ctx.system->sigma(g, h));
        sigma[G.order() * G.order() - 1] =
            sigma[G.order() * G.order() - 1] + ctx.system->algebra()->scalar(100.0 * ctx.tol);
        TwistedSystem::validated(ctx.system->algebra(), G, std::move(alpha), std::move(sigma),
                                 ctx.tol);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::Validation;
    }
    return make_item(ctx, "cocycle_identities", worst <= ctx.tol && rejected, worst,
                     "worst residual " + fmt(worst) + (rejected ? ", perturbation rejected" : ", perturbation accepted"));
}

SuiteItem check_cocycle_inverse_law(const SystemContext& ctx) {
    double worst = lemma_cocycle_sweep(*ctx.system);
    return make_item(ctx, "cocycle_inverse_law", worst <= 1e-10, worst,
                     "max residual over all triples " + fmt(worst));
}

SuiteItem check_convolution_algebra(const SystemContext& ctx) {
    auto rng = ctx.rng("convolution_algebra");
    double worst = 0.0;
    auto unit = CrossedElement::unit(ctx.system);
    for (int trial = 0; trial < 5; ++trial) {
        auto f1 = random_crossed_element(ctx.system, rng);
        auto f2 = random_crossed_element(ctx.system, rng);
        auto f3 = random_crossed_element(ctx.system, rng);
        worst = std::max(worst, (f1.convolve(unit) - f1).sup_coefficient_norm());
        worst = std::max(worst, (unit.convolve(f1) - f1).sup_coefficient_norm());
        worst = std::max(worst, (f1.convolve(f2).convolve(f3) - f1.convolve(f2.convolve(f3)))
                                    .sup_coefficient_norm());
        worst = std::max(worst, (f1.convolve(f2).involute() - f2.involute().convolve(f1.involute()))
                                    .sup_coefficient_norm());
        worst = std::max(worst, (f1.involute().involute() - f1).sup_coefficient_norm());
    }
    return make_item(ctx, "convolution_algebra", worst <= 1e-10 * 100.0, worst,
                     "unit/associativity/involution residual " + fmt(worst));
}

SuiteItem check_cstar_identity(const SystemContext& ctx) {
    auto rng = ctx.rng("cstar_identity");
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_crossed_element(ctx.system, rng);
        Mat x = ctx.reg->act(f);
        double n = op_norm(x);
        double nn = op_norm(x.adjoint() * x);
        if (n > 0.0) worst = std::max(worst, std::abs(nn - n * n) / (n * n));
    }
    return make_item(ctx, "cstar_identity", worst <= 1e-9, worst,
                     "relative defect of the square identity " + fmt(worst));
}

SuiteItem check_crossed_dimension(const SystemContext& ctx) {
    auto summary = analyze_crossed_product(*ctx.reg, ctx.tol);
    int expected = ctx.system->algebra()->dim() * ctx.system->group().order();
    std::ostringstream detail;
    detail << "dim " << summary.dim << " (expected " << expected << "), center "
           << summary.center_dim << ", blocks [";
    for (size_t i = 0; i < summary.blocks.size(); ++i)
        detail << (i ? " " : "") << summary.blocks[i];
    detail << "]";
    int blocksq = 0;
    for (int b : summary.blocks) blocksq += b * b;
    bool pass = summary.dim == expected && blocksq == expected &&
                static_cast<int>(summary.blocks.size()) == summary.center_dim;
    return make_item(ctx, "crossed_dimension", pass, summary.dim, detail.str());
}

SuiteItem check_expectation_laws(const SystemContext& ctx) {
    auto rng = ctx.rng("expectation_laws");
    const auto& A = ctx.system->algebra();
    const auto& G = ctx.system->group();
    double worst = 0.0;
    double min_faithful = std::numeric_limits<double>::infinity();
    worst = std::max(worst, (ctx.reg->expectation(Mat::Identity(ctx.reg->space_dim(),
                                                                ctx.reg->space_dim())) -
                             A->one())
                                .norm());
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_crossed_element(ctx.system, rng);
        Mat x = ctx.reg->act(f);
        // reads off the coefficient at the identity
        worst = std::max(worst, (ctx.reg->expectation(x) - f.at(G.id())).norm());
        // idempotent onto the copy of A
        auto a = ctx.reg->expectation(x);
        worst = std::max(worst, (ctx.reg->expectation(ctx.reg->ell(a)) - a).norm());
        // equivariant
        for (int g = 0; g < G.order(); ++g) {
            auto lhs = ctx.reg->expectation(ctx.reg->lambda(g) * x * ctx.reg->lambda(g).adjoint());
            worst = std::max(worst, (lhs - ctx.system->alpha(g)(ctx.reg->expectation(x))).norm());
        }
        // faithful on x*x for normalized nonzero x
        double fn = f.sup_coefficient_norm();
        if (fn > 0.0) {
            Mat xs = x / fn;
            min_faithful = std::min(min_faithful,
                                    ctx.reg->expectation(xs.adjoint() * xs).norm());
        }
        // positivity: E(x*x) is positive in A
        if (!is_positive(ctx.reg->expectation(x.adjoint() * x), 1e-9))
            worst = std::max(worst, 1.0);
    }
    bool pass = worst <= 1e-10 * 100.0 && min_faithful > 1e-12;
    return make_item(ctx, "expectation_laws", pass, worst,
                     "law residual " + fmt(worst) + ", faithfulness floor " + fmt(min_faithful));
}

SuiteItem check_covariant_pair(const SystemContext& ctx) {
    auto rng = ctx.rng("covariant_pair");
    auto cov = CovariantRep::regular(*ctx.reg);
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        auto f1 = random_crossed_element(ctx.system, rng);
        auto f2 = random_crossed_element(ctx.system, rng);
        worst = std::max(worst, op_norm(cov.rep(f1.convolve(f2)) - cov.rep(f1) * cov.rep(f2)));
        worst = std::max(worst, op_norm(cov.rep(f1.involute()) - cov.rep(f1).adjoint()));
        worst = std::max(worst, op_norm(cov.rep(f1) - ctx.reg->act(f1)));
    }
    auto unit = CrossedElement::unit(ctx.system);
    worst = std::max(worst, op_norm(cov.rep(unit) -
                                    Mat::Identity(cov.space_dim(), cov.space_dim())));
    return make_item(ctx, "covariant_pair", worst <= 1e-9, worst,
                     "homomorphism residual " + fmt(worst));
}

// --- modules and equivariant pairs ------------------------------------------

SuiteItem check_module_laws(const SystemContext& ctx) {
    auto rng = ctx.rng("module_laws");
    auto rep = random_equivariant_rep(ctx.system, rng);
    const auto& X = *rep.module();
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        Vec x = random_vec(rng, X.dim());
        Vec y = random_vec(rng, X.dim());
        auto a = random_element(ctx.system->algebra(), rng);
        // Cauchy-Schwarz and the submultiplicative action bound
        worst = std::max(worst, X.inner(x, y).norm() - X.vec_norm(x) * X.vec_norm(y));
        worst = std::max(worst, X.vec_norm(X.right_mul(x, a)) - X.vec_norm(x) * a.norm());
    }
    auto loc = localize(X);
    int expected_dim = (1 + ctx.system->group().order()) * ctx.system->algebra()->rep_dim();
    worst = std::max(worst, std::abs(double(loc.dim - expected_dim)));
    for (int trial = 0; trial < 4; ++trial) {
        Vec x = random_vec(rng, X.dim());
        double direct = X.vec_norm(x);
        double via_rep = std::sqrt(std::max(0.0, max_abs_eigenvalue(X.inner(x, x).rep())));
        worst = std::max(worst, std::abs(direct - via_rep));
    }
    return make_item(ctx, "module_laws", worst <= 1e-8, worst,
                     "Cauchy-Schwarz / norm / localization defect " + fmt(worst));
}

SuiteItem check_equivariant_constructors(const SystemContext& ctx) {
    const auto& G = ctx.system->group();
    double worst = 0.0;
    std::string detail = "trivial, regular, tensor, sum, internal tensor all validated";
    bool pass = true;
    try {
        auto triv = trivial_rep(ctx.system);
        auto reg = regular_equivariant(ctx.system);
        // left translation unitaries of the group
        std::vector<Mat> w(G.order(), Mat::Zero(G.order(), G.order()));
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h) w[g](G.mul(g, h), h) = 1.0;
        auto twisted = tensor_with_unitary(triv, w, ctx.tol);
        worst = std::max(worst, std::abs(double(twisted.dim() - reg.dim())));
        auto sum = direct_sum_reps({&triv, &reg}, ctx.tol);
        auto tensor = tensor_reps(triv, reg, ctx.tol);
        (void)sum;
        (void)tensor;
    } catch (const Error& e) {
        pass = false;
        detail = e.what();
    }
    return make_item(ctx, "equivariant_constructors", pass && worst == 0.0, worst, detail);
}

SuiteItem check_coefficient_identities(const SystemContext& ctx) {
    auto rng = ctx.rng("coefficient_identities");
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        auto r1 = random_equivariant_rep(ctx.system, rng);
        auto r2 = random_equivariant_rep(ctx.system, rng);
        Vec x1 = random_vec(rng, r1.dim()), y1 = random_vec(rng, r1.dim());
        Vec x2 = random_vec(rng, r2.dim()), y2 = random_vec(rng, r2.dim());
        auto t1 = coefficient(r1, x1, y1);
        auto t2 = coefficient(r2, x2, y2);

        auto sum = direct_sum_reps({&r1, &r2}, ctx.tol);
        Vec xs(sum.dim()), ys(sum.dim());
        xs << x1, x2;
        ys << y1, y2;
        worst = std::max(worst, coefficient(sum, xs, ys).entry_distance(t1 + t2));

        auto prod_rep = tensor_reps(r2, r1, ctx.tol);
        const Mat& q = prod_rep.module()->quotient_map();
        Vec xt = q * kron(Mat(x2), Mat(x1));
        Vec yt = q * kron(Mat(y2), Mat(y1));
        worst = std::max(worst, coefficient(prod_rep, xt, yt).entry_distance(t1 * t2));
    }
    return make_item(ctx, "coefficient_identities", worst <= 1e-9 * 100.0, worst,
                     "sum/product coefficient residual " + fmt(worst));
}

SuiteItem check_scalar_embedding(const SystemContext& ctx) {
    auto rng = ctx.rng("scalar_embedding");
    const auto& G = ctx.system->group();
    double worst = 0.0;
    std::vector<Cplx> phi(G.order()), psi(G.order());
    for (int g = 0; g < G.order(); ++g) {
        phi[g] = rng.cgaussian();
        psi[g] = rng.cgaussian();
    }
    std::vector<Cplx> prod(G.order());
    for (int g = 0; g < G.order(); ++g) prod[g] = phi[g] * psi[g];
    auto tphi = embed_scalar(ctx.system, phi);
    auto tpsi = embed_scalar(ctx.system, psi);
    worst = std::max(worst, (tphi * tpsi).entry_distance(embed_scalar(ctx.system, prod)));
    double expected = 0.0;
    for (Cplx z : phi) expected = std::max(expected, std::abs(z));
    worst = std::max(worst, std::abs(tphi.sup_norm() - expected));

    // positive-definite scalar functions transfer: φ(g) = Σ_h conj(ξ(h))ξ(gh)
    std::vector<Cplx> xi(G.order());
    for (int g = 0; g < G.order(); ++g) xi[g] = rng.cgaussian();
    std::vector<Cplx> pd(G.order(), 0.0);
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) pd[g] += std::conj(xi[h]) * xi[G.mul(g, h)];
    bool pd_ok = is_positive_definite(embed_scalar(ctx.system, pd), ctx.tol).positive;
    return make_item(ctx, "scalar_embedding", worst <= 1e-10 * 10.0 && pd_ok, worst,
                     "homomorphism/norm residual " + fmt(worst) +
                         (pd_ok ? ", group-positive function accepted" : ", group-positive function rejected"));
}

// --- positivity, multipliers, reconstruction --------------------------------

SuiteItem check_pd_cp_agreement(const SystemContext& ctx) {
    auto rng = ctx.rng("pd_cp_agreement");
    int disagreements = 0;
    int count = 0;
    auto consider = [&](const CoeffMap& t) {
        auto pd = is_positive_definite(t, ctx.tol);
        auto cp = is_cp(build_multiplier(t, ctx.reg), ctx.tol);
        if (pd.positive != cp.cp) ++disagreements;
        ++count;
    };
    for (int trial = 0; trial < 6; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, x);
        consider(t);
        // push it clearly outside the cone
        auto bad = t;
        bad.map(ctx.system->group().id()) -=
            (1.0 + t.sup_norm()) * Mat::Identity(bad.map(0).rows(), bad.map(0).cols());
        consider(bad);
    }
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Cplx> phi(ctx.system->group().order());
        for (auto& z : phi) z = rng.cgaussian();
        consider(embed_scalar(ctx.system, phi));
    }
    return make_item(ctx, "pd_cp_agreement", disagreements == 0,
                     static_cast<double>(disagreements),
                     std::to_string(count) + " maps, " + std::to_string(disagreements) +
                         " verdict disagreements");
}

SuiteItem check_gelfand_raikov_roundtrip(const SystemContext& ctx) {
    auto rng = ctx.rng("gelfand_raikov_roundtrip");
    double worst = 0.0;
    double worst_margin = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, x);
        auto pd = is_positive_definite(t, ctx.tol);
        worst_margin = std::min(worst_margin, pd.margin);
        auto rec = reconstruct(t, ctx.tol);
        worst = std::max(worst, rec.coefficient_residual);
    }
    return make_item(ctx, "gelfand_raikov_roundtrip", worst <= 1e-8 && worst_margin >= -1e-9,
                     worst, "reproduction residual " + fmt(worst) + ", min margin " +
                                fmt(worst_margin));
}

SuiteItem check_gelfand_raikov_uniqueness(const SystemContext& ctx) {
    auto rng = ctx.rng("gelfand_raikov_uniqueness");
    auto rep = random_equivariant_rep(ctx.system, rng);
    Vec x = random_vec(rng, rep.dim());
    auto t = coefficient(rep, x, x);
    double worst = 0.0;
    bool ok = true;
    std::string detail;
    try {
        auto rec = reconstruct(t, ctx.tol);
        // an independent cyclic triple: the original pair cut down to the
        // cyclic span of x
        auto restricted = cyclic_restriction(rep, x, ctx.tol);
        auto link = intertwiner(rec.rep, rec.cyclic, restricted.rep, restricted.cyclic, ctx.tol);
        worst = link.worst_residual;
        detail = "intertwiner residual " + fmt(worst);
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    return make_item(ctx, "gelfand_raikov_uniqueness", ok && worst <= 1e-8, worst, detail);
}

SuiteItem check_norm_identity(const SystemContext& ctx) {
    auto rng = ctx.rng("norm_identity");
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, x);
        auto [sup, at_unit] = sup_norm_identity(t);
        double scale = std::max(1.0, at_unit);
        worst = std::max(worst, std::abs(sup - at_unit) / scale);
        double cpn = cp_norm(build_multiplier(t, ctx.reg), ctx.tol);
        worst = std::max(worst, std::abs(cpn - at_unit) / scale);
    }
    return make_item(ctx, "norm_identity", worst <= 1e-8, worst,
                     "sup-norm vs unit value vs cp norm, relative gap " + fmt(worst));
}

SuiteItem check_conjugation(const SystemContext& ctx) {
    auto rng = ctx.rng("conjugation");
    double worst = 0.0;
    auto ident = CoeffMap::identity(ctx.system);
    worst = std::max(worst, conjugate(ident).entry_distance(ident));
    for (int trial = 0; trial < 3; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim()), y = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, y);
        worst = std::max(worst, conjugate(conjugate(t)).entry_distance(t));
        worst = std::max(worst, conjugate(t).entry_distance(coefficient(rep, y, x)));
        // the multiplier respects conjugation: M_{T^c}(b) = M_T(b*)*
        auto mt = build_multiplier(t, ctx.reg);
        auto mtc = build_multiplier(conjugate(t), ctx.reg);
        for (int g = 0; g < ctx.system->group().order(); ++g)
            for (int j = 0; j < ctx.system->algebra()->dim(); ++j) {
                Mat b = ctx.reg->ell_basis(j) * ctx.reg->lambda(g);
                worst = std::max(worst, op_norm(mtc.apply(b) - mt.apply(b.adjoint()).adjoint()));
            }
    }
    return make_item(ctx, "conjugation", worst <= 1e-9 * 10.0, worst,
                     "involution/swap/multiplier residual " + fmt(worst));
}

SuiteItem check_tilde_right_picture(const SystemContext& ctx) {
    auto rng = ctx.rng("tilde_right_picture");
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim()), y = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, y);
        auto tt = tilde_transform(t);
        worst = std::max(worst, tilde_inverse(tt).entry_distance(t));
        // right-handed action: λ(g)·a ↦ λ(g)·T̃_g(a) agrees with the multiplier of T
        auto mt = build_multiplier(t, ctx.reg);
        for (int g = 0; g < ctx.system->group().order(); ++g)
            for (int j = 0; j < ctx.system->algebra()->dim(); ++j) {
                auto a = ctx.system->algebra()->basis_element(j);
                Mat input = ctx.reg->lambda(g) * ctx.reg->ell(a);
                Mat rhs = ctx.reg->lambda(g) * ctx.reg->ell(tt.apply(g, a));
                worst = std::max(worst, op_norm(mt.apply(input) - rhs));
            }
        // the transform is multiplicative for the slotwise product
        auto t2 = coefficient(rep, y, x);
        worst = std::max(worst,
                         tilde_transform(t * t2).entry_distance(tilde_transform(t) *
                                                                tilde_transform(t2)));
    }
    return make_item(ctx, "tilde_right_picture", worst <= 1e-9 * 10.0, worst,
                     "right-multiplier agreement residual " + fmt(worst));
}

SuiteItem check_lphi_equivalences(const SystemContext& ctx) {
    auto rng = ctx.rng("lphi_equivalences");
    const auto& A = ctx.system->algebra();
    int inconsistent = 0;
    int count = 0;
    auto consider = [&](const ADFunction& phi) {
        auto report = lphi_equivalences(phi, ctx.reg, ctx.tol);
        if (!report.consistent()) ++inconsistent;
        ++count;
    };
    consider(constant_ad_function(ctx.system, A->one()));
    for (int trial = 0; trial < 4; ++trial) {
        // central-valued positive-definite data from central vectors
        auto w = std::vector<Mat>(ctx.system->group().order(),
                                  Mat::Identity(2, 2));
        auto rep = tensor_with_unitary(trivial_rep(ctx.system), w, ctx.tol);
        auto centrals = central_vectors(rep);
        if (!centrals.empty()) {
            Vec z = Vec::Zero(rep.dim());
            for (const auto& c : centrals) z += rng.cgaussian() * c;
            auto bz = bz_coefficient(rep, z, z, 1e-7);
            ADFunction phi{ctx.system, bz.phi};
            consider(phi);
        }
        // generic values, generally neither central nor positive
        ADFunction raw{ctx.system, {}};
        for (int g = 0; g < ctx.system->group().order(); ++g)
            raw.phi.push_back(random_element(A, rng));
        consider(raw);
        // constant noncentral positive value
        if (A->dim() > 1) {
            auto p = A->basis_element(0);
            consider(constant_ad_function(ctx.system, p * p.adjoint()));
        }
    }
    return make_item(ctx, "lphi_equivalences", inconsistent == 0,
                     static_cast<double>(inconsistent),
                     std::to_string(count) + " functions, " + std::to_string(inconsistent) +
                         " inconsistent triples");
}

SuiteItem check_polarization(const SystemContext& ctx) {
    auto rng = ctx.rng("polarization");
    double worst = 0.0;
    double worst_margin = 0.0;
    for (int trial = 0; trial < 2; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim()), y = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, y);
        auto pol = polarize(rep, x, y);
        auto sum = CoeffMap::zero(ctx.system);
        for (int k = 0; k < 4; ++k) {
            sum = sum + pol.parts[k] * pol.weights[k];
            worst_margin = std::min(worst_margin, is_positive_definite(pol.parts[k], ctx.tol).margin);
        }
        worst = std::max(worst, sum.entry_distance(t));
        auto dec = decompose(rep, x, y, ctx.reg, ctx.tol);
        worst = std::max(worst, dec.residual);
    }
    return make_item(ctx, "polarization", worst <= 1e-10 * 100.0 && worst_margin >= -1e-9, worst,
                     "reconstruction residual " + fmt(worst) + ", part margin " +
                         fmt(worst_margin));
}

SuiteItem check_bimodule_law(const SystemContext& ctx) {
    auto rng = ctx.rng("bimodule_law");
    const auto& A = ctx.system->algebra();
    bool ok = true;
    std::string detail = "central values give bimodule maps";
    // identity is a bimodule map
    ok = ok && is_bimodule(build_multiplier(CoeffMap::identity(ctx.system), ctx.reg), ctx.tol);
    // central-valued L^φ is a bimodule map
    ADFunction central{ctx.system, {}};
    for (int g = 0; g < ctx.system->group().order(); ++g) {
        auto z = A->zero();
        for (int k = 0; k < A->block_count(); ++k) {
            z.block(k).setIdentity();
            z.block(k) *= rng.cgaussian();
        }
        central.phi.push_back(z);
    }
    ok = ok && is_bimodule(build_multiplier(build_L_R(central).first, ctx.reg), ctx.tol);
    // noncentral values break the bimodule law
    bool has_noncentral = false;
    for (int k = 0; k < A->block_count(); ++k) has_noncentral |= A->block_size(k) > 1;
    if (has_noncentral) {
        ADFunction noncentral{ctx.system, {}};
        for (int g = 0; g < ctx.system->group().order(); ++g)
            noncentral.phi.push_back(A->basis_element(0) - A->basis_element(A->dim() - 1));
        bool bim = is_bimodule(build_multiplier(build_L_R(noncentral).first, ctx.reg), ctx.tol);
        ok = ok && !bim;
        detail += ", noncentral values rejected";
    }
    return make_item(ctx, "bimodule_law", ok, ok ? 0.0 : 1.0, detail);
}

SuiteItem check_amenability_witness(const SystemContext& ctx) {
    auto ident = CoeffMap::identity(ctx.system);
    std::vector<CoeffMap> constant = {ident};
    auto r1 = amenability_witness_check(constant, 1e-6, ctx.tol);
    std::vector<CoeffMap> shrinking;
    for (int n = 1; n <= 10; ++n) shrinking.push_back(ident * Cplx(1.0 - 1.0 / n, 0.0));
    shrinking.push_back(ident * Cplx(0.95, 0.0));
    auto r2 = amenability_witness_check(shrinking, 0.1, ctx.tol);
    auto broken = ident;
    broken.map(ctx.system->group().id()) -=
        2.0 * Mat::Identity(broken.map(0).rows(), broken.map(0).cols());
    std::vector<CoeffMap> bad = {broken};
    auto r3 = amenability_witness_check(bad, 10.0, ctx.tol);
    bool pass = r1.ok && r2.ok && !r3.ok && r3.worst_margin < 0.0;
    return make_item(ctx, "amenability_witness", pass, r3.worst_margin,
                     "violating family margin " + fmt(r3.worst_margin));
}

SuiteItem check_correspondence_roundtrip(const SystemContext& ctx) {
    auto rng = ctx.rng("correspondence_roundtrip");
    double worst = 0.0;
    for (int trial = 0; trial < 2; ++trial) {
        auto rep = random_equivariant_rep(ctx.system, rng);
        Vec x = random_vec(rng, rep.dim()), y = random_vec(rng, rep.dim());
        auto t = coefficient(rep, x, y);
        auto corr = crossed_correspondence(rep, ctx.reg);
        // y = x⊙e, z = y⊙e
        Vec yv = Vec::Zero(corr.dim()), zv = Vec::Zero(corr.dim());
        int e = ctx.system->group().id();
        yv.segment(e * rep.dim(), rep.dim()) = x;
        zv.segment(e * rep.dim(), rep.dim()) = y;
        worst = std::max(worst, coefficient_from_correspondence(corr, yv, zv).entry_distance(t));
        // the same coefficient through the localized pair
        auto loc = localize_correspondence(corr, ctx.tol);
        auto t2 = coefficient(loc.rep, loc.from_raw * yv, loc.from_raw * zv);
        worst = std::max(worst, t2.entry_distance(t));
    }
    return make_item(ctx, "correspondence_roundtrip", worst <= 1e-8, worst,
                     "coefficient recovery residual " + fmt(worst));
}

SuiteItem check_correspondence_self(const SystemContext& ctx) {
    auto rng = ctx.rng("correspondence_self");
    auto self = correspondence_over_self(ctx.reg);
    const auto& G = ctx.system->group();
    int da = ctx.system->algebra()->dim();
    double worst = 0.0;
    auto coords_of = [&](const CrossedElement& f) {
        Vec c(self.dim());
        for (int g = 0; g < G.order(); ++g) c.segment(g * da, da) = f.at(g).coords();
        return c;
    };
    for (int trial = 0; trial < 4; ++trial) {
        auto f = random_crossed_element(ctx.system, rng);
        auto xi = random_crossed_element(ctx.system, rng);
        auto eta = random_crossed_element(ctx.system, rng);
        // module operations are the convolution operations
        worst = std::max(worst, (self.inner(coords_of(xi), coords_of(eta)) -
                                 xi.involute().convolve(eta))
                                    .sup_coefficient_norm());
        Vec lhs = self.left_of(f) * coords_of(xi);
        worst = std::max(worst, (lhs - coords_of(f.convolve(xi))).norm());
        Vec rhs = self.right_of(f) * coords_of(xi);
        worst = std::max(worst, (rhs - coords_of(xi.convolve(f))).norm());
    }
    // the localized pair is the conjugation representation
    auto loc = localize_correspondence(self, ctx.tol);
    bool full_rank = loc.rep.dim() == self.dim();
    auto formula = conjugation_rep_matrices(ctx.system);
    double vworst = 0.0;
    if (full_rank)
        for (int g = 0; g < G.order(); ++g)
            vworst = std::max(vworst, op_norm(loc.rep.v(g) -
                                              loc.from_raw * formula[g] * loc.from_raw.adjoint()));
    worst = std::max(worst, vworst);
    return make_item(ctx, "correspondence_self", full_rank && worst <= 1e-10 * 100.0, worst,
                     "convolution-picture residual " + fmt(worst));
}

SuiteItem check_cp_extraction(const SystemContext& ctx) {
    auto rng = ctx.rng("cp_extraction");
    // completely positive map on the crossed product: x ↦ Σ v_i*·x·v_i
    std::vector<Mat> kraus;
    for (int i = 0; i < 3; ++i) {
        Vec c = rng.cgaussian_vec(ctx.reg->coord_dim());
        kraus.push_back(ctx.reg->from_coords(c));
    }
    auto cp_map = [&](const Mat& x) {
        Mat out = Mat::Zero(x.rows(), x.cols());
        for (const auto& v : kraus) out += v.adjoint() * x * v;
        return out;
    };
    auto t = coeff_from_cp_map(*ctx.reg, cp_map);
    auto pd = is_positive_definite(t, ctx.tol);

    // equivariant completely positive maps on A give constant coefficients
    const auto& A = ctx.system->algebra();
    double theta_margin = 0.0;
    bool theta_ok = true;
    try {
        auto theta = equivariant_cp_multiplier(ctx.system, Mat::Identity(A->dim(), A->dim()),
                                               ctx.tol);
        theta_ok = theta.entry_distance(CoeffMap::identity(ctx.system)) <= 1e-12;
        theta_margin = is_positive_definite(theta, ctx.tol).margin;
    } catch (const Error&) {
        theta_ok = false;
    }
    bool pass = pd.positive && theta_ok && theta_margin >= -ctx.tol;
    return make_item(ctx, "cp_extraction", pass, pd.margin,
                     "extracted coefficient margin " + fmt(pd.margin));
}

const std::pair<const char*, Check> kChecks[] = {
    {"cocycle_identities", check_cocycle_identities},
    {"cocycle_inverse_law", check_cocycle_inverse_law},
    {"convolution_algebra", check_convolution_algebra},
    {"cstar_identity", check_cstar_identity},
    {"crossed_dimension", check_crossed_dimension},
    {"expectation_laws", check_expectation_laws},
    {"covariant_pair", check_covariant_pair},
    {"module_laws", check_module_laws},
    {"equivariant_constructors", check_equivariant_constructors},
    {"coefficient_identities", check_coefficient_identities},
    {"scalar_embedding", check_scalar_embedding},
    {"pd_cp_agreement", check_pd_cp_agreement},
    {"gelfand_raikov_roundtrip", check_gelfand_raikov_roundtrip},
    {"gelfand_raikov_uniqueness", check_gelfand_raikov_uniqueness},
    {"norm_identity", check_norm_identity},
    {"conjugation", check_conjugation},
    {"tilde_right_picture", check_tilde_right_picture},
    {"lphi_equivalences", check_lphi_equivalences},
    {"polarization", check_polarization},
    {"bimodule_law", check_bimodule_law},
    {"amenability_witness", check_amenability_witness},
    {"correspondence_roundtrip", check_correspondence_roundtrip},
    {"correspondence_self", check_correspondence_self},
    {"cp_extraction", check_cp_extraction},
};

}  // namespace

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& item : items)
        if (!item.pass) ++n;
    return n;
}

Json SuiteReport::to_json() const {
    Json j;
    j["seed"] = seed;
    j["tol"] = tol;
    Json list = Json::array();
    for (const auto& item : items) {
        Json entry;
        entry["name"] = item.name;
        entry["system"] = item.system;
        entry["pass"] = item.pass;
        entry["value"] = item.value;
        entry["detail"] = item.detail;
        list.push_back(std::move(entry));
    }
    j["items"] = std::move(list);
    j["failures"] = failures();
    return j;
}

SuiteReport run_suite(const std::vector<CorpusEntry>& systems, std::uint64_t seed, double tol) {
    SuiteReport report;
    report.seed = seed;
    report.tol = tol;
    for (const auto& entry : systems) {
        SystemContext ctx{entry.name, entry.system, RegularRep::make(entry.system), seed, tol};
        for (const auto& [name, check] : kChecks) {
            (void)name;
            report.items.push_back(check(ctx));
        }
    }
    return report;
}

}  // namespace tcsd
