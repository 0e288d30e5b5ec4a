#include "equivariant.hpp"

#include <sstream>

namespace tcsd {

EquivariantRep::EquivariantRep(SystemPtr system, ModulePtr module, std::vector<Mat> rho,
                               std::vector<Mat> v, std::vector<Mat> v_inv)
    : system_(std::move(system)),
      module_(std::move(module)),
      rho_(std::move(rho)),
      v_(std::move(v)),
      v_inv_(std::move(v_inv)) {}

Mat EquivariantRep::rho(const AlgebraElement& a) const {
    Vec c = a.coords();
    Mat m = Mat::Zero(dim(), dim());
    for (int j = 0; j < c.size(); ++j)
        if (c(j) != 0.0) m += c(j) * rho_[j];
    return m;
}

Mat EquivariantRep::ad_rho(const AlgebraElement& u) const {
    return module_->right_mul_of(u.adjoint()) * rho(u);
}

EquivariantRep EquivariantRep::validated(SystemPtr system, ModulePtr module, std::vector<Mat> rho,
                                         std::vector<Mat> v, double tol) {
    const auto& A = system->algebra();
    const auto& G = system->group();
    require(module->algebra()->same_as(*A), ErrorKind::InvalidArgument,
            "module algebra does not match the system");
    require(static_cast<int>(rho.size()) == A->dim(), ErrorKind::Structure,
            "rho needs one matrix per algebra basis element");
    require(static_cast<int>(v.size()) == G.order(), ErrorKind::Structure,
            "v needs one matrix per group element");
    int m = module->dim();
    for (const auto& mat : rho)
        require(mat.rows() == m && mat.cols() == m, ErrorKind::Structure,
                "rho matrix has wrong shape");
    for (const auto& mat : v)
        require(mat.rows() == m && mat.cols() == m, ErrorKind::Structure,
                "v matrix has wrong shape");

    auto check = [&](double residual, double scale, const std::string& what) {
        if (residual > tol * std::max(1.0, scale)) {
            std::ostringstream msg;
            msg << "equivariant pair fails " << what << " (residual " << residual << ")";
            fail(ErrorKind::Validation, msg.str());
        }
    };

    EquivariantRep rep(system, module, std::move(rho), std::move(v), {});

    // ρ is a unital *-representation by adjointable operators
    check(frob_norm(rep.rho(A->one()) - Mat::Identity(m, m)), 1.0, "unitality of rho");
    for (int i = 0; i < A->dim(); ++i) {
        auto ei = A->basis_element(i);
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            check(frob_norm(rep.rho(ei * ej) - rep.rho(ei) * rep.rho(ej)), 1.0,
                  "multiplicativity of rho");
        }
        // adjointability: ⟨ρ(a)x, y⟩ = ⟨x, ρ(a*)y⟩
        Mat adj = rep.rho(ei.adjoint());
        for (int c = 0; c < A->dim(); ++c)
            check(frob_norm(rep.rho(ei).adjoint() * module->gram(c) - module->gram(c) * adj), 1.0,
                  "adjointability of rho");
    }

    check(frob_norm(rep.v(G.id()) - Mat::Identity(m, m)), 1.0, "v(e) = 1");

    for (int g = 0; g < G.order(); ++g) {
        const Mat& vg = rep.v(g);
        // (i) through multiplication by v(g) to avoid explicit inverses
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            check(frob_norm(rep.rho(system->alpha(g)(ej)) * vg - vg * rep.rho(ej)),
                  frob_norm(vg), "axiom (i)");
        }
        // (ii)
        for (int h = 0; h < G.order(); ++h)
            check(frob_norm(vg * rep.v(h) - rep.ad_rho(system->sigma(g, h)) * rep.v(G.mul(g, h))),
                  frob_norm(vg), "axiom (ii)");
        // (iii): α_g applied to the Gram coordinates equals the v(g)-pullback
        const Mat& alpha_coords = system->alpha(g).coord_matrix();
        for (int c = 0; c < A->dim(); ++c) {
            Mat lhs = Mat::Zero(m, m);
            for (int cp = 0; cp < A->dim(); ++cp)
                if (alpha_coords(c, cp) != 0.0) lhs += alpha_coords(c, cp) * module->gram(cp);
            check(frob_norm(lhs - vg.adjoint() * module->gram(c) * vg),
                  frob_norm(module->gram(c)), "axiom (iii)");
        }
        // (iv)
        for (int j = 0; j < A->dim(); ++j) {
            Mat rhs = module->right_mul_of(system->alpha(g)(A->basis_element(j))) * vg;
            check(frob_norm(vg * module->right_action(j) - rhs), frob_norm(vg), "axiom (iv)");
        }
    }

    // inverses from the closed form v(g)⁻¹ = ad_ρ(σ(g⁻¹,g)*)·v(g⁻¹)
    rep.v_inv_.resize(G.order());
    for (int g = 0; g < G.order(); ++g) {
        int ginv = G.inv(g);
        rep.v_inv_[g] = rep.ad_rho(system->sigma(ginv, g).adjoint()) * rep.v(ginv);
        check(frob_norm(rep.v_inv_[g] * rep.v(g) - Mat::Identity(m, m)), 1.0,
              "invertibility of v");
    }
    return rep;
}

EquivariantRep trivial_rep(SystemPtr system) {
    const auto& A = system->algebra();
    auto module = HilbertModule::free_module(A, 1);
    std::vector<Mat> rho, v;
    rho.reserve(A->dim());
    for (int j = 0; j < A->dim(); ++j) rho.push_back(A->left_mult(j));
    v.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g)
        v.push_back(system->alpha(g).coord_matrix());
    return EquivariantRep::validated(std::move(system), std::move(module), std::move(rho),
                                     std::move(v), 1e-10);
}

EquivariantRep regular_equivariant(SystemPtr system) {
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    int n = G.order();
    auto module = HilbertModule::free_module(A, n);
    std::vector<Mat> rho, v;
    rho.reserve(da);
    for (int j = 0; j < da; ++j) rho.push_back(kron(Mat::Identity(n, n), A->left_mult(j)));
    v.reserve(n);
    for (int g = 0; g < n; ++g) {
        Mat vg = Mat::Zero(n * da, n * da);
        for (int h = 0; h < n; ++h)
            vg.block(G.mul(g, h) * da, h * da, da, da) = system->alpha(g).coord_matrix();
        v.push_back(std::move(vg));
    }
    return EquivariantRep::validated(std::move(system), std::move(module), std::move(rho),
                                     std::move(v), 1e-10);
}

EquivariantRep tensor_with_unitary(const EquivariantRep& rep, const std::vector<Mat>& w,
                                   double tol) {
    const auto& system = rep.system();
    const auto& G = system->group();
    require(static_cast<int>(w.size()) == G.order(), ErrorKind::InvalidArgument,
            "w needs one matrix per group element");
    int k = static_cast<int>(w[0].rows());
    for (int g = 0; g < G.order(); ++g) {
        require(w[g].rows() == k && w[g].cols() == k, ErrorKind::InvalidArgument,
                "w matrices must share one space");
        require(frob_norm(w[g] * w[g].adjoint() - Mat::Identity(k, k)) <= tol,
                ErrorKind::Validation, "w is not unitary");
        for (int h = 0; h < G.order(); ++h)
            require(frob_norm(w[g] * w[h] - w[G.mul(g, h)]) <= tol, ErrorKind::Validation,
                    "w is not a representation of the group");
    }

    const auto& X = *rep.module();
    int da = system->algebra()->dim();
    HilbertModule::RawData raw;
    raw.dim = X.dim() * k;
    for (int j = 0; j < da; ++j) raw.right_action.push_back(kron(X.right_action(j), Mat::Identity(k, k)));
    for (int c = 0; c < da; ++c) raw.gram.push_back(kron(X.gram(c), Mat::Identity(k, k)));
    auto module = HilbertModule::validated(system->algebra(), std::move(raw), tol);

    std::vector<Mat> rho, v;
    for (int j = 0; j < da; ++j) rho.push_back(kron(rep.rho_basis(j), Mat::Identity(k, k)));
    for (int g = 0; g < G.order(); ++g) v.push_back(kron(rep.v(g), w[g]));
    return EquivariantRep::validated(system, std::move(module), std::move(rho), std::move(v), tol);
}

EquivariantRep direct_sum_reps(const std::vector<const EquivariantRep*>& reps, double tol) {
    require(!reps.empty(), ErrorKind::InvalidArgument, "direct sum needs at least one summand");
    const auto& system = reps.front()->system();
    std::vector<ModulePtr> modules;
    for (const auto* r : reps) {
        require(r->system().get() == system.get(), ErrorKind::InvalidArgument,
                "direct sum mixes systems");
        modules.push_back(r->module());
    }
    auto sum = direct_sum(modules, tol);
    int total = sum.module->dim();
    int da = system->algebra()->dim();
    std::vector<Mat> rho(da, Mat::Zero(total, total));
    std::vector<Mat> v(system->group().order(), Mat::Zero(total, total));
    for (size_t i = 0; i < reps.size(); ++i) {
        int off = sum.offsets[i], dim = reps[i]->dim();
        for (int j = 0; j < da; ++j) rho[j].block(off, off, dim, dim) = reps[i]->rho_basis(j);
        for (int g = 0; g < system->group().order(); ++g)
            v[g].block(off, off, dim, dim) = reps[i]->v(g);
    }
    return EquivariantRep::validated(system, sum.module, std::move(rho), std::move(v), tol);
}

EquivariantRep tensor_reps(const EquivariantRep& r1, const EquivariantRep& r2, double tol) {
    require(r1.system().get() == r2.system().get(), ErrorKind::InvalidArgument,
            "tensor product mixes systems");
    const auto& system = r1.system();
    int da = system->algebra()->dim();
    auto module = internal_tensor(*r1.module(), *r2.module(), r2.rho_all(), tol);
    const Mat& q = module->quotient_map();  // dim × (m1·m2)
    int m2 = r2.dim();
    std::vector<Mat> rho, v;
    rho.reserve(da);
    Mat id2 = Mat::Identity(m2, m2);
    for (int j = 0; j < da; ++j) rho.push_back(kron_compress(q, r1.rho_basis(j), id2));
    v.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g)
        v.push_back(kron_compress(q, r1.v(g), r2.v(g)));
    return EquivariantRep::validated(system, std::move(module), std::move(rho), std::move(v), tol);
}

EquivariantRep unitary_conjugate(const EquivariantRep& rep, const Mat& u, double tol) {
    const auto& X = *rep.module();
    int m = X.dim();
    require(u.rows() == m && u.cols() == m, ErrorKind::InvalidArgument,
            "conjugating unitary has wrong shape");
    for (int c = 0; c < X.algebra()->dim(); ++c)
        require(frob_norm(u.adjoint() * X.gram(c) * u - X.gram(c)) <=
                    tol * std::max(1.0, frob_norm(X.gram(c))),
                ErrorKind::Validation, "map does not preserve the inner product");
    for (int j = 0; j < X.algebra()->dim(); ++j)
        require(frob_norm(u * X.right_action(j) - X.right_action(j) * u) <= tol,
                ErrorKind::Validation, "map is not A-linear");

    int da = X.algebra()->dim();
    std::vector<Mat> rho, v;
    rho.reserve(da);
    for (int j = 0; j < da; ++j) rho.push_back(u * rep.rho_basis(j) * u.adjoint());
    v.reserve(rep.system()->group().order());
    for (int g = 0; g < rep.system()->group().order(); ++g)
        v.push_back(u * rep.v(g) * u.adjoint());
    return EquivariantRep::validated(rep.system(), rep.module(), std::move(rho), std::move(v),
                                     tol);
}

std::vector<Vec> central_vectors(const EquivariantRep& rep, double rel_tol) {
    return central_part(*rep.module(), rep.rho_all(), rel_tol);
}

Mat random_free_module_unitary(const AlgebraPtr& algebra, int rank, Rng& rng) {
    int da = algebra->dim();
    // random entries of a rank×rank matrix over A; per algebra block the flat
    // matrix is Hermitized inside unitary_exp_i, so exp(i·H) is a unitary of
    // M_rank(A) and hence of the free module
    std::vector<std::vector<AlgebraElement>> entries;
    entries.reserve(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<AlgebraElement> row;
        row.reserve(rank);
        for (int j = 0; j < rank; ++j) row.push_back(random_element(algebra, rng));
        entries.push_back(std::move(row));
    }
    Mat carrier = Mat::Zero(rank * da, rank * da);
    for (int k = 0; k < algebra->block_count(); ++k) {
        int n = algebra->block_size(k);
        Mat flat(rank * n, rank * n);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                flat.block(i * n, j * n, n, n) = entries[i][j].block(k);
        Mat uk = unitary_exp_i(flat);
        // entry (i,j) of the unitary in M_rank(A), block k
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                Mat blockij = uk.block(i * n, j * n, n, n);
                // left multiplication by this block on slot j -> slot i
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Cplx val = blockij(p, q);
                        if (val == 0.0) continue;
                        for (int s = 0; s < n; ++s)
                            carrier(i * da + algebra->basis_index(k, p, s),
                                    j * da + algebra->basis_index(k, q, s)) += val;
                    }
            }
    }
    return carrier;
}

EquivariantRep random_equivariant_rep(const SystemPtr& system, Rng& rng, double tol) {
    auto base_t = trivial_rep(system);
    auto base_r = regular_equivariant(system);
    auto sum = direct_sum_reps({&base_t, &base_r}, tol);
    int rank = 1 + system->group().order();
    Mat u = random_free_module_unitary(system->algebra(), rank, rng);
    return unitary_conjugate(sum, u, std::max(tol, 1e-9));
}

EquivariantRep random_light_rep(const SystemPtr& system, Rng& rng, double tol) {
    auto base_t = trivial_rep(system);
    auto sum = direct_sum_reps({&base_t, &base_t}, tol);
    Mat u = random_free_module_unitary(system->algebra(), 2, rng);
    return unitary_conjugate(sum, u, std::max(tol, 1e-9));
}

}  // namespace tcsd
