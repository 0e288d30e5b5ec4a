#include "system.hpp"

#include <array>
#include <sstream>

namespace tcsd {

TwistedSystem::TwistedSystem(AlgebraPtr algebra, FiniteGroup group,
                             std::vector<Automorphism> alpha, std::vector<AlgebraElement> sigma)
    : algebra_(std::move(algebra)),
      group_(std::move(group)),
      alpha_(std::move(alpha)),
      sigma_(std::move(sigma)) {
    alpha_inv_.reserve(alpha_.size());
    for (const auto& a : alpha_) alpha_inv_.push_back(a.inverse());
}

SystemPtr TwistedSystem::validated(AlgebraPtr algebra, FiniteGroup group,
                                   std::vector<Automorphism> alpha,
                                   std::vector<AlgebraElement> sigma, double tol) {
    int n = group.order();
    require(static_cast<int>(alpha.size()) == n, ErrorKind::Structure,
            "alpha must assign one automorphism per group element");
    require(static_cast<int>(sigma.size()) == n * n, ErrorKind::Structure,
            "sigma must assign one unitary per group pair");
    for (const auto& a : alpha)
        require(a.algebra()->same_as(*algebra), ErrorKind::Structure,
                "alpha acts on the wrong algebra");
    for (const auto& s : sigma)
        require(s.algebra()->same_as(*algebra), ErrorKind::Structure,
                "sigma takes values in the wrong algebra");

    auto system =
        std::shared_ptr<TwistedSystem>(new TwistedSystem(std::move(algebra), std::move(group),
                                                         std::move(alpha), std::move(sigma)));
    const auto& G = system->group_;
    const auto& A = system->algebra_;
    const int e = G.id();

    double worst = 0.0;
    std::string worst_what;

    auto note = [&](double residual, const std::string& what) {
        if (residual > worst) {
            worst = residual;
            worst_what = what;
        }
    };

    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const auto& s = system->sigma(g, h);
            note((s * s.adjoint() - A->one()).norm(), "unitarity of sigma(" + G.label(g) + "," +
                                                          G.label(h) + ")");
            note((s.adjoint() * s - A->one()).norm(), "unitarity of sigma(" + G.label(g) + "," +
                                                          G.label(h) + ")");
        }
    for (int g = 0; g < G.order(); ++g) {
        note((system->sigma(g, e) - A->one()).norm(), "normalization sigma(" + G.label(g) + ",e)");
        note((system->sigma(e, g) - A->one()).norm(), "normalization sigma(e," + G.label(g) + ")");
    }

    // α_g α_h = Ad(σ(g,h)) α_{gh}, tested on the basis of A
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const auto& s = system->sigma(g, h);
            int gh = G.mul(g, h);
            for (int j = 0; j < A->dim(); ++j) {
                auto basis = A->basis_element(j);
                auto lhs = system->alpha(g)(system->alpha(h)(basis));
                auto rhs = s * system->alpha(gh)(basis) * s.adjoint();
                note((lhs - rhs).norm(),
                     "twisted-action law at (" + G.label(g) + "," + G.label(h) + ")");
            }
        }

    // σ(g,h) σ(gh,k) = α_g(σ(h,k)) σ(g,hk)
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            for (int k = 0; k < G.order(); ++k) {
                auto lhs = system->sigma(g, h) * system->sigma(G.mul(g, h), k);
                auto rhs = system->alpha(g)(system->sigma(h, k)) * system->sigma(g, G.mul(h, k));
                note((lhs - rhs).norm(), "cocycle identity at (" + G.label(g) + "," + G.label(h) +
                                             "," + G.label(k) + ")");
            }

    system->worst_residual_ = worst;
    if (worst > tol) {
        std::ostringstream msg;
        msg << "cocycle violation: " << worst_what << ", residual " << worst;
        fail(ErrorKind::Validation, msg.str());
    }
    return system;
}

double lemma_cocycle_residual(const TwistedSystem& system, int g, int h, int hp) {
    // σ(h,h⁻¹h') = α_g⁻¹(σ(g,h)·σ(gh,h⁻¹h')·σ(g,h')*), a rearrangement of the
    // cocycle identity with k = h⁻¹h'
    const auto& G = system.group();
    int hinv_hp = G.mul(G.inv(h), hp);
    auto rhs = system.alpha_inv(g)(system.sigma(g, h) *
                                   system.sigma(G.mul(g, h), hinv_hp) *
                                   system.sigma(g, hp).adjoint());
    return (system.sigma(h, hinv_hp) - rhs).norm();
}

double lemma_cocycle_sweep(const TwistedSystem& system) {
    double worst = 0.0;
    int n = system.group().order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int hp = 0; hp < n; ++hp)
                worst = std::max(worst, lemma_cocycle_residual(system, g, h, hp));
    return worst;
}

SystemPtr trivial_system(AlgebraPtr algebra, FiniteGroup group) {
    std::vector<Automorphism> alpha(group.order(), Automorphism::identity(algebra));
    std::vector<AlgebraElement> sigma(group.order() * group.order(), algebra->one());
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    1e-12);
}

SystemPtr scalar_cocycle_system(AlgebraPtr algebra, FiniteGroup group,
                                const std::function<Cplx(int, int)>& sigma, double tol) {
    std::vector<Automorphism> alpha(group.order(), Automorphism::identity(algebra));
    std::vector<AlgebraElement> table;
    table.reserve(group.order() * group.order());
    for (int g = 0; g < group.order(); ++g)
        for (int h = 0; h < group.order(); ++h) table.push_back(algebra->scalar(sigma(g, h)));
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(table),
                                    tol);
}

SystemPtr inner_action_system(AlgebraPtr algebra, FiniteGroup group,
                              const std::vector<AlgebraElement>& w, double tol) {
    require(static_cast<int>(w.size()) == group.order(), ErrorKind::Structure,
            "need one unitary per group element");
    require((w[group.id()] - algebra->one()).norm() <= tol, ErrorKind::Structure,
            "w must be normalized at the identity");
    std::vector<Automorphism> alpha;
    alpha.reserve(group.order());
    for (const auto& u : w) alpha.push_back(Automorphism::inner(u, tol));
    std::vector<AlgebraElement> sigma;
    sigma.reserve(group.order() * group.order());
    for (int g = 0; g < group.order(); ++g)
        for (int h = 0; h < group.order(); ++h)
            sigma.push_back(w[g] * w[h] * w[group.mul(g, h)].adjoint());
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    tol);
}

AlgebraElement random_element(const AlgebraPtr& algebra, Rng& rng) {
    std::vector<Mat> blocks;
    blocks.reserve(algebra->block_count());
    for (int k = 0; k < algebra->block_count(); ++k)
        blocks.push_back(rng.ginibre(algebra->block_size(k), algebra->block_size(k)));
    return AlgebraElement(algebra, std::move(blocks));
}

AlgebraElement random_unitary(const AlgebraPtr& algebra, Rng& rng) {
    std::vector<Mat> blocks;
    blocks.reserve(algebra->block_count());
    for (int k = 0; k < algebra->block_count(); ++k)
        blocks.push_back(rng.haar_unitary(algebra->block_size(k)));
    return AlgebraElement(algebra, std::move(blocks));
}

SystemPtr random_inner_system(AlgebraPtr algebra, FiniteGroup group, Rng& rng, double tol) {
    std::vector<AlgebraElement> w;
    w.reserve(group.order());
    for (int g = 0; g < group.order(); ++g)
        w.push_back(g == group.id() ? algebra->one() : random_unitary(algebra, rng));
    return inner_action_system(std::move(algebra), std::move(group), w, tol);
}

namespace {

SystemPtr make_pauli() {
    // scalar two-cocycle on Z2×Z2 whose twisted group algebra is M2
    auto z2z2 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto algebra = CStarAlgebra::make({1});
    auto bit = [](int g, int which) { return which == 0 ? g / 2 : g % 2; };
    return scalar_cocycle_system(algebra, z2z2, [&](int g, int h) {
        return Cplx(bit(g, 1) * bit(h, 0) % 2 == 0 ? 1.0 : -1.0, 0.0);
    });
}

SystemPtr make_flip() {
    // C(Z2) with the coordinate flip; the crossed product is M2
    auto algebra = CStarAlgebra::make({1, 1});
    auto group = FiniteGroup::cyclic(2);
    auto flip = Automorphism::make(algebra, {1, 0}, algebra->one(), 1e-12);
    std::vector<Automorphism> alpha = {Automorphism::identity(algebra), flip};
    std::vector<AlgebraElement> sigma(4, algebra->one());
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    1e-12);
}

SystemPtr make_m2_inner() {
    // inner Z2-action on M2 with the noncentral cocycle sigma(g,g) = u² = diag(1,-1)
    auto algebra = CStarAlgebra::make({2});
    auto group = FiniteGroup::cyclic(2);
    Mat u(2, 2);
    u << 1.0, 0.0, 0.0, Cplx(0.0, 1.0);
    AlgebraElement uu(algebra, {u});
    std::vector<Automorphism> alpha = {Automorphism::identity(algebra),
                                       Automorphism::inner(uu, 1e-12)};
    std::vector<AlgebraElement> sigma(4, algebra->one());
    sigma[1 * 2 + 1] = uu * uu;
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    1e-12);
}

SystemPtr make_s3() {
    // S3 permuting the three points of C(X), X = {0,1,2}
    auto algebra = CStarAlgebra::make({1, 1, 1});
    auto group = FiniteGroup::symmetric3();
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
    }};
    std::vector<Automorphism> alpha;
    alpha.reserve(6);
    for (int g = 0; g < 6; ++g) {
        // block k moves to perms[g][k]; then (P a)_{p(k)} = a_k matches a ↦ a∘g⁻¹
        std::vector<int> perm(perms[g].begin(), perms[g].end());
        alpha.push_back(Automorphism::make(algebra, perm, algebra->one(), 1e-12));
    }
    std::vector<AlgebraElement> sigma(36, algebra->one());
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    1e-12);
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> entries;
        entries.push_back({"trivial", trivial_system(CStarAlgebra::make({1}), FiniteGroup::cyclic(2))});
        entries.push_back({"pauli", make_pauli()});
        entries.push_back({"flip", make_flip()});
        entries.push_back({"m2_inner", make_m2_inner()});
        entries.push_back({"s3", make_s3()});
        return entries;
    }();
    return corpus;
}

SystemPtr builtin_system(const std::string& name) {
    for (const auto& entry : builtin_corpus())
        if (entry.name == name) return entry.system;
    fail(ErrorKind::InvalidArgument, "unknown builtin system: " + name);
}

}  // namespace tcsd
