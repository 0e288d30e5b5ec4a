#include "module.hpp"

#include <sstream>

namespace tcsd {

namespace {

void require_axiom(double residual, double scale, double tol, const char* axiom) {
    if (residual > tol * std::max(1.0, scale)) {
        std::ostringstream msg;
        msg << "module axiom violated: " << axiom << " (residual " << residual << ")";
        fail(ErrorKind::Validation, msg.str());
    }
}

Mat localized_gram_of(const CStarAlgebra& algebra, const std::vector<Mat>& gram, int m) {
    int d = algebra.rep_dim();
    Mat loc = Mat::Zero(m * d, m * d);
    for (int c = 0; c < algebra.dim(); ++c) {
        auto [k, p, q] = algebra.basis_location(c);
        int row = algebra.block_offset(k) + p;
        int col = algebra.block_offset(k) + q;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Cplx v = gram[c](i, j);
                if (v != 0.0) loc(i * d + row, j * d + col) += v;
            }
    }
    return loc;
}

Mat trace_gram_of(const CStarAlgebra& algebra, const std::vector<Mat>& gram, int m) {
    Mat tg = Mat::Zero(m, m);
    for (int c = 0; c < algebra.dim(); ++c) {
        auto [k, p, q] = algebra.basis_location(c);
        if (p == q) tg += gram[c];
    }
    return tg;
}

}  // namespace

ModulePtr HilbertModule::validated(AlgebraPtr algebra, RawData raw, double tol) {
    const int m = raw.dim;
    const int da = algebra->dim();
    require(m >= 0, ErrorKind::Structure, "module carrier dimension must be nonnegative");
    require(static_cast<int>(raw.right_action.size()) == da, ErrorKind::Structure,
            "right action needs one matrix per algebra basis element");
    require(static_cast<int>(raw.gram.size()) == da, ErrorKind::Structure,
            "inner product needs one Gram matrix per algebra coordinate");
    for (const auto& mat : raw.right_action)
        require(mat.rows() == m && mat.cols() == m, ErrorKind::Structure,
                "right action matrix has wrong shape");
    for (const auto& mat : raw.gram)
        require(mat.rows() == m && mat.cols() == m, ErrorKind::Structure,
                "Gram matrix has wrong shape");

    auto module = std::shared_ptr<HilbertModule>(new HilbertModule());
    module->algebra_ = std::move(algebra);
    module->raw_dim_ = m;
    const auto& A = *module->algebra_;

    // positivity of the inner product through the faithful representation,
    // one flattening per algebra block
    {
        double worst_neg = 0.0, scale = 0.0, herm = 0.0;
        for (int k = 0; k < A.block_count(); ++k) {
            int nk = A.block_size(k);
            Mat flat(m * nk, m * nk);
            for (int p = 0; p < nk; ++p)
                for (int q = 0; q < nk; ++q) {
                    const Mat& g = raw.gram[A.basis_index(k, p, q)];
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j) flat(i * nk + p, j * nk + q) = g(i, j);
                }
            auto rep = herm_report(flat);
            worst_neg = std::min(worst_neg, rep.min_eig);
            scale = std::max(scale, rep.scale);
            herm = std::max(herm, rep.herm_residual);
        }
        require_axiom(herm, scale, tol, "conjugate symmetry of the inner product");
        require_axiom(std::max(0.0, -worst_neg), scale, tol, "positivity of the inner product");
    }

    // eager quotient by null vectors, detected on the trace Gram
    Mat tg = trace_gram_of(A, raw.gram, m);
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(tg));
    double top = m > 0 ? std::max(0.0, es.eigenvalues().maxCoeff()) : 0.0;
    double cutoff = std::max(1.0, top) * std::max(tol, 1e-12);
    int nulls = 0;
    while (nulls < m && es.eigenvalues()(nulls) <= cutoff) ++nulls;

    if (nulls == 0) {
        module->dim_ = m;
        module->from_raw_ = Mat::Identity(m, m);
        module->right_action_ = std::move(raw.right_action);
        module->gram_ = std::move(raw.gram);
    } else {
        Mat q = es.eigenvectors().rightCols(m - nulls);  // orthonormal complement of the nulls
        module->dim_ = m - nulls;
        module->from_raw_ = q.adjoint();
        module->right_action_.reserve(da);
        module->gram_.reserve(da);
        for (int j = 0; j < da; ++j)
            module->right_action_.push_back(q.adjoint() * raw.right_action[j] * q);
        for (int c = 0; c < da; ++c) module->gram_.push_back(q.adjoint() * raw.gram[c] * q);
    }

    // remaining module axioms, checked on the carrier that is actually kept
    const int dim = module->dim_;
    double gscale = 0.0;
    for (const auto& g : module->gram_) gscale = std::max(gscale, frob_norm(g));
    for (int c = 0; c < da; ++c) {
        auto [k, p, q] = A.basis_location(c);
        int cadj = A.basis_index(k, q, p);
        require_axiom(frob_norm(module->gram_[cadj] - module->gram_[c].adjoint()), gscale, tol,
                      "conjugate symmetry of the inner product");
    }
    // right linearity: ⟨x, y·e_l⟩ = ⟨x,y⟩·e_l
    for (int l = 0; l < da; ++l) {
        const Mat& rmul = A.right_mult(l);
        for (int c = 0; c < da; ++c) {
            Mat rhs = Mat::Zero(dim, dim);
            for (int cp = 0; cp < da; ++cp)
                if (rmul(c, cp) != 0.0) rhs += rmul(c, cp) * module->gram_[cp];
            require_axiom(frob_norm(module->gram_[c] * module->right_action_[l] - rhs), gscale,
                          tol, "A-linearity of the inner product in the second variable");
        }
    }
    // associativity and unitality of the action
    for (int l = 0; l < da; ++l)
        for (int k = 0; k < da; ++k) {
            Vec prod = (A.basis_element(l) * A.basis_element(k)).coords();
            Mat rhs = Mat::Zero(dim, dim);
            for (int t = 0; t < da; ++t)
                if (prod(t) != 0.0) rhs += prod(t) * module->right_action_[t];
            require_axiom(
                frob_norm(module->right_action_[k] * module->right_action_[l] - rhs),
                static_cast<double>(dim), tol, "associativity of the right action");
        }
    {
        Mat unit = Mat::Zero(dim, dim);
        const Vec& one = A.one_coords();
        for (int t = 0; t < da; ++t)
            if (one(t) != 0.0) unit += one(t) * module->right_action_[t];
        require_axiom(frob_norm(unit - Mat::Identity(dim, dim)), static_cast<double>(dim), tol,
                      "unitality of the right action");
    }
    return module;
}

ModulePtr HilbertModule::free_module(AlgebraPtr algebra, int rank) {
    require(rank >= 1, ErrorKind::Structure, "free module rank must be positive");
    int da = algebra->dim();
    RawData raw;
    raw.dim = rank * da;

    // g0_c(c1,c2) = coord_c(e_{c1}* e_{c2})
    std::vector<Mat> g0(da, Mat::Zero(da, da));
    for (int c1 = 0; c1 < da; ++c1) {
        auto adj = algebra->basis_element(c1).adjoint();
        for (int c2 = 0; c2 < da; ++c2) {
            Vec prod = (adj * algebra->basis_element(c2)).coords();
            for (int c = 0; c < da; ++c)
                if (prod(c) != 0.0) g0[c](c1, c2) = prod(c);
        }
    }
    raw.gram.reserve(da);
    raw.right_action.reserve(da);
    for (int c = 0; c < da; ++c) raw.gram.push_back(kron(Mat::Identity(rank, rank), g0[c]));
    for (int j = 0; j < da; ++j)
        raw.right_action.push_back(kron(Mat::Identity(rank, rank), algebra->right_mult(j)));
    return validated(std::move(algebra), std::move(raw), 1e-12);
}

Vec HilbertModule::inner_coords(const Vec& x, const Vec& y) const {
    Vec c(algebra_->dim());
    for (int i = 0; i < algebra_->dim(); ++i) c(i) = (x.adjoint() * gram_[i] * y).value();
    return c;
}

AlgebraElement HilbertModule::inner(const Vec& x, const Vec& y) const {
    return algebra_->from_coords(inner_coords(x, y));
}

Mat HilbertModule::right_mul_of(const AlgebraElement& a) const {
    Vec c = a.coords();
    Mat m = Mat::Zero(dim_, dim_);
    for (int j = 0; j < algebra_->dim(); ++j)
        if (c(j) != 0.0) m += c(j) * right_action_[j];
    return m;
}

Vec HilbertModule::right_mul(const Vec& x, const AlgebraElement& a) const {
    return right_mul_of(a) * x;
}

double HilbertModule::vec_norm(const Vec& x) const {
    double n = inner(x, x).norm();
    return n > 0.0 ? std::sqrt(n) : 0.0;
}

Mat HilbertModule::localized_gram() const {
    return localized_gram_of(*algebra_, gram_, dim_);
}

Mat HilbertModule::trace_gram() const {
    return trace_gram_of(*algebra_, gram_, dim_);
}

LocalizedSpace localize(const HilbertModule& module, double rel_tol) {
    Mat loc = module.localized_gram();
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(loc));
    int n = static_cast<int>(loc.rows());
    double top = n > 0 ? std::max(0.0, es.eigenvalues().maxCoeff()) : 0.0;
    double cutoff = top * std::max(rel_tol, 1e-15);
    int first = 0;
    while (first < n && es.eigenvalues()(first) <= cutoff) ++first;

    LocalizedSpace space;
    space.rep_dim = module.algebra()->rep_dim();
    space.dim = n - first;
    Mat v = es.eigenvectors().rightCols(space.dim);
    Vec d = es.eigenvalues().tail(space.dim).cast<Cplx>();
    Vec dh(space.dim), dhinv(space.dim);
    for (int i = 0; i < space.dim; ++i) {
        double s = std::sqrt(std::real(d(i)));
        dh(i) = s;
        dhinv(i) = 1.0 / s;
    }
    space.coords = dh.asDiagonal() * v.adjoint();
    space.embed = v * dhinv.asDiagonal();
    return space;
}

Mat LocalizedSpace::localize_op(const Mat& carrier_op) const {
    return coords * kron(carrier_op, Mat::Identity(rep_dim, rep_dim)) * embed;
}

double LocalizedSpace::op_norm_of(const ModuleOperator& op) const {
    return op_norm_of(op.mat());
}

// ---------------------------------------------------------------------------

ModuleOperator::ModuleOperator(ModulePtr domain, ModulePtr codomain, Mat mat, Mat adjoint)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      mat_(std::move(mat)),
      adjoint_(std::move(adjoint)) {}

ModuleOperator ModuleOperator::validated(ModulePtr domain, ModulePtr codomain, Mat mat,
                                         Mat adjoint, double tol) {
    require(mat.rows() == codomain->dim() && mat.cols() == domain->dim(), ErrorKind::Structure,
            "operator matrix has wrong shape");
    require(adjoint.rows() == domain->dim() && adjoint.cols() == codomain->dim(),
            ErrorKind::Structure, "adjoint matrix has wrong shape");
    double scale = op_norm(mat);
    for (int c = 0; c < domain->algebra()->dim(); ++c) {
        // ⟨T·x, y⟩ = ⟨x, T*·y⟩ in coordinates: T†·Gcod_c = Gdom_c·T*
        double residual =
            op_norm(mat.adjoint() * codomain->gram(c) - domain->gram(c) * adjoint);
        require(residual <= tol * std::max(1.0, scale), ErrorKind::Validation,
                "operator is not adjointable with the declared adjoint");
    }
    return ModuleOperator(std::move(domain), std::move(codomain), std::move(mat),
                          std::move(adjoint));
}

DirectSum direct_sum(const std::vector<ModulePtr>& modules, double tol) {
    require(!modules.empty(), ErrorKind::InvalidArgument, "direct sum needs at least one module");
    const auto& algebra = modules.front()->algebra();
    int total = 0;
    DirectSum out;
    for (const auto& m : modules) {
        require(m->algebra()->same_as(*algebra), ErrorKind::InvalidArgument,
                "direct sum mixes different algebras");
        out.offsets.push_back(total);
        total += m->dim();
    }
    HilbertModule::RawData raw;
    raw.dim = total;
    int da = algebra->dim();
    raw.right_action.assign(da, Mat::Zero(total, total));
    raw.gram.assign(da, Mat::Zero(total, total));
    for (size_t i = 0; i < modules.size(); ++i) {
        int off = out.offsets[i], dim = modules[i]->dim();
        for (int j = 0; j < da; ++j) {
            raw.right_action[j].block(off, off, dim, dim) = modules[i]->right_action(j);
            raw.gram[j].block(off, off, dim, dim) = modules[i]->gram(j);
        }
    }
    out.module = HilbertModule::validated(algebra, std::move(raw), tol);
    require(out.module->dim() == total, ErrorKind::Validation,
            "direct sum of null-free modules should be null-free");
    return out;
}

ModulePtr internal_tensor(const HilbertModule& x1, const HilbertModule& x2,
                          const std::vector<Mat>& rho2, double tol) {
    require(x1.algebra()->same_as(*x2.algebra()), ErrorKind::InvalidArgument,
            "internal tensor product mixes different algebras");
    int da = x1.algebra()->dim();
    require(static_cast<int>(rho2.size()) == da, ErrorKind::InvalidArgument,
            "representation needs one matrix per algebra basis element");
    int m1 = x1.dim(), m2 = x2.dim();

    HilbertModule::RawData raw;
    raw.dim = m1 * m2;
    raw.right_action.reserve(da);
    for (int j = 0; j < da; ++j)
        raw.right_action.push_back(kron(Mat::Identity(m1, m1), x2.right_action(j)));
    raw.gram.reserve(da);
    for (int c = 0; c < da; ++c) {
        Mat g = Mat::Zero(raw.dim, raw.dim);
        for (int t = 0; t < da; ++t) g += kron(x1.gram(t), x2.gram(c) * rho2[t]);
        raw.gram.push_back(std::move(g));
    }
    return HilbertModule::validated(x1.algebra(), std::move(raw), tol);
}

std::vector<Vec> central_part(const HilbertModule& module, const std::vector<Mat>& rho,
                              double rel_tol) {
    int da = module.algebra()->dim();
    int m = module.dim();
    Mat stacked(da * m, m);
    for (int j = 0; j < da; ++j)
        stacked.block(j * m, 0, m, m) = rho[j] - module.right_action(j);
    Mat basis = null_space(stacked, rel_tol);
    std::vector<Vec> out;
    out.reserve(basis.cols());
    for (int i = 0; i < basis.cols(); ++i) out.push_back(basis.col(i));
    return out;
}

}  // namespace tcsd
