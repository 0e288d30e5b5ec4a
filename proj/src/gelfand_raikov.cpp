#include "gelfand_raikov.hpp"

#include <sstream>

namespace tcsd {

namespace {

// carrier index of δ_{(g, e_b)}·e_c in the raw reconstruction space
inline int gen_index(int da, int g, int b, int c) { return (g * da + b) * da + c; }

}  // namespace

Reconstruction reconstruct(const CoeffMap& t, double tol) {
    auto pd = is_positive_definite(t, tol);
    if (!pd.positive) {
        std::ostringstream msg;
        msg << "reconstruction requires a positive-definite map (margin " << pd.margin << ")";
        fail(ErrorKind::Precondition, msg.str());
    }

    const auto& system = t.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    const int da = A->dim();
    const int n = G.order();
    const int kernel_side = n * da;
    const int raw_dim = n * da * da;

    auto kernel = pd_kernel(t);

    // inner product: ⟨δ_{(g,e_b)}·e_c, δ_{(h,e_b')}·e_c'⟩ = e_c*·K[(g,b),(h,b')]·e_c'
    HilbertModule::RawData raw;
    raw.dim = raw_dim;
    raw.gram.assign(da, Mat::Zero(raw_dim, raw_dim));
    for (int g = 0; g < n; ++g)
        for (int b = 0; b < da; ++b)
            for (int h = 0; h < n; ++h)
                for (int bp = 0; bp < da; ++bp) {
                    const auto& kval =
                        kernel[static_cast<size_t>(g * da + b) * kernel_side + (h * da + bp)];
                    Vec kcoords = kval.coords();
                    for (int c = 0; c < da; ++c) {
                        // coords(e_c*·K·e_c') = Lmult(e_c*)·Rmult(e_c')·coords(K)
                        Vec left = A->left_mult_of(A->adjoint_coords(
                                       A->basis_element(c).coords())) *
                                   kcoords;
                        for (int cp = 0; cp < da; ++cp) {
                            Vec full = A->right_mult(cp) * left;
                            for (int coord = 0; coord < da; ++coord)
                                raw.gram[coord](gen_index(da, g, b, c), gen_index(da, h, bp, cp)) =
                                    full(coord);
                        }
                    }
                }

    // right action: (δ·e_c)·e_l = δ·(e_c e_l)
    raw.right_action.assign(da, Mat::Zero(raw_dim, raw_dim));
    for (int l = 0; l < da; ++l) {
        const Mat& rmul = A->right_mult(l);
        for (int g = 0; g < n; ++g)
            for (int b = 0; b < da; ++b)
                for (int c = 0; c < da; ++c)
                    for (int cp = 0; cp < da; ++cp)
                        if (rmul(cp, c) != 0.0)
                            raw.right_action[l](gen_index(da, g, b, cp), gen_index(da, g, b, c)) =
                                rmul(cp, c);
    }

    auto module = HilbertModule::validated(A, std::move(raw), tol);
    const Mat& q = module->quotient_map();

    // ρ₀(e_l): δ_{(g,e_b)} ↦ δ_{(g, e_l·e_b)}
    std::vector<Mat> rho;
    rho.reserve(da);
    for (int l = 0; l < da; ++l) {
        Mat m = Mat::Zero(raw_dim, raw_dim);
        const Mat& lmul = A->left_mult(l);
        for (int g = 0; g < n; ++g)
            for (int b = 0; b < da; ++b)
                for (int bp = 0; bp < da; ++bp)
                    if (lmul(bp, b) != 0.0)
                        for (int c = 0; c < da; ++c)
                            m(gen_index(da, g, bp, c), gen_index(da, g, b, c)) = lmul(bp, b);
        rho.push_back(q * m * q.adjoint());
    }

    // v₀(g): δ_{(h,e_b)}·e_c ↦ δ_{(gh, α_g(e_b)σ(g,h))}·(σ(g,h)*·α_g(e_c))
    std::vector<Mat> v;
    v.reserve(n);
    for (int g = 0; g < n; ++g) {
        Mat m = Mat::Zero(raw_dim, raw_dim);
        for (int h = 0; h < n; ++h) {
            int gh = G.mul(g, h);
            const auto& s = system->sigma(g, h);
            for (int b = 0; b < da; ++b) {
                Vec w = (system->alpha(g)(A->basis_element(b)) * s).coords();
                for (int c = 0; c < da; ++c) {
                    Vec z = (s.adjoint() * system->alpha(g)(A->basis_element(c))).coords();
                    for (int bp = 0; bp < da; ++bp) {
                        if (w(bp) == 0.0) continue;
                        for (int cp = 0; cp < da; ++cp)
                            if (z(cp) != 0.0)
                                m(gen_index(da, gh, bp, cp), gen_index(da, h, b, c)) +=
                                    w(bp) * z(cp);
                    }
                }
            }
        }
        v.push_back(q * m * q.adjoint());
    }

    // x = class of δ_{(e,1)}·1
    Vec x_raw = Vec::Zero(raw_dim);
    const Vec& one = A->one_coords();
    for (int b = 0; b < da; ++b)
        for (int c = 0; c < da; ++c)
            if (one(b) != 0.0 && one(c) != 0.0)
                x_raw(gen_index(da, G.id(), b, c)) = one(b) * one(c);

    auto rep = EquivariantRep::validated(system, module, std::move(rho), std::move(v),
                                         std::max(tol, 1e-8));
    Vec x = q * x_raw;

    auto reproduced = coefficient(rep, x, x);
    double residual = reproduced.entry_distance(t);

    return Reconstruction{std::move(rep), std::move(x), residual};
}

Intertwiner intertwiner(const EquivariantRep& rep1, const Vec& x1, const EquivariantRep& rep2,
                        const Vec& x2, double tol) {
    require(rep1.system().get() == rep2.system().get() ||
                rep1.system()->group().table() == rep2.system()->group().table(),
            ErrorKind::InvalidArgument, "triples belong to different systems");
    auto t1 = coefficient(rep1, x1, x1);
    auto t2 = coefficient(rep2, x2, x2);
    double agreement = t1.entry_distance(t2);
    require(agreement <= std::max(tol, 1e-7) * std::max(1.0, t1.sup_norm()),
            ErrorKind::InvalidArgument, "the triples do not reproduce a common coefficient map");

    const auto& system = rep1.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();

    auto generator_matrix = [&](const EquivariantRep& rep, const Vec& x) {
        Mat w(rep.dim(), G.order() * da * da);
        int col = 0;
        for (int g = 0; g < G.order(); ++g)
            for (int b = 0; b < da; ++b) {
                Vec base = rep.rho_basis(b) * (rep.v(g) * x);
                for (int c = 0; c < da; ++c)
                    w.col(col++) = rep.module()->right_action(c) * base;
            }
        return w;
    };

    Mat w1 = generator_matrix(rep1, x1);
    Mat w2 = generator_matrix(rep2, x2);
    require(rank_of(w1, 1e-9) == rep1.dim(), ErrorKind::Precondition,
            "first triple is not cyclic");
    require(rank_of(w2, 1e-9) == rep2.dim(), ErrorKind::Precondition,
            "second triple is not cyclic");

    Mat u = w2 * pinv(w1);

    Intertwiner out;
    out.u = u;
    double worst = op_norm(u * w1 - w2);
    // unitarity for the A-valued inner products
    for (int c = 0; c < da; ++c)
        worst = std::max(worst,
                         op_norm(u.adjoint() * rep2.module()->gram(c) * u - rep1.module()->gram(c)));
    for (int j = 0; j < da; ++j)
        worst = std::max(worst, op_norm(u * rep1.rho_basis(j) - rep2.rho_basis(j) * u));
    for (int g = 0; g < G.order(); ++g)
        worst = std::max(worst, op_norm(u * rep1.v(g) - rep2.v(g) * u));
    worst = std::max(worst, (u * x1 - x2).norm());
    out.worst_residual = worst;
    require(worst <= std::max(tol, 1e-7) * std::max(1.0, op_norm(w2)), ErrorKind::Validation,
            "no unitary intertwiner links the triples");
    return out;
}

CyclicTriple cyclic_restriction(const EquivariantRep& rep, const Vec& x, double tol) {
    const auto& system = rep.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    const auto& X = *rep.module();

    Mat w(rep.dim(), G.order() * da * da);
    int col = 0;
    for (int g = 0; g < G.order(); ++g)
        for (int b = 0; b < da; ++b) {
            Vec base = rep.rho_basis(b) * (rep.v(g) * x);
            for (int c = 0; c < da; ++c) w.col(col++) = X.right_action(c) * base;
        }
    // orthonormal basis of the invariant span
    Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * 1e-12;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    Mat q = svd.matrixU().leftCols(rank).adjoint();  // rank × m

    HilbertModule::RawData raw;
    raw.dim = rank;
    for (int j = 0; j < da; ++j) raw.right_action.push_back(q * X.right_action(j) * q.adjoint());
    for (int c = 0; c < da; ++c) raw.gram.push_back(q * X.gram(c) * q.adjoint());
    auto module = HilbertModule::validated(A, std::move(raw), tol);
    require(module->dim() == rank, ErrorKind::Validation,
            "cyclic span degenerated under the quotient");

    std::vector<Mat> rho, v;
    rho.reserve(da);
    for (int j = 0; j < da; ++j) rho.push_back(q * rep.rho_basis(j) * q.adjoint());
    v.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) v.push_back(q * rep.v(g) * q.adjoint());
    auto restricted =
        EquivariantRep::validated(system, module, std::move(rho), std::move(v), std::max(tol, 1e-8));
    return CyclicTriple{std::move(restricted), q * x};
}

}  // namespace tcsd
