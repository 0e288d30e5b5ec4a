#include "correspondence.hpp"

namespace tcsd {

Correspondence::Correspondence(std::shared_ptr<const RegularRep> base, int dim,
                               std::vector<Mat> left, std::vector<Mat> right,
                               std::vector<Mat> inner)
    : base_(std::move(base)),
      dim_(dim),
      left_(std::move(left)),
      right_(std::move(right)),
      inner_(std::move(inner)) {
    int nb = base_->coord_dim();
    require(static_cast<int>(left_.size()) == nb && static_cast<int>(right_.size()) == nb &&
                static_cast<int>(inner_.size()) == nb,
            ErrorKind::Structure, "correspondence needs one tensor slice per base coordinate");
    for (const auto& m : left_)
        require(m.rows() == dim_ && m.cols() == dim_, ErrorKind::Structure,
                "left action matrix has wrong shape");
    for (const auto& m : right_)
        require(m.rows() == dim_ && m.cols() == dim_, ErrorKind::Structure,
                "right action matrix has wrong shape");
    for (const auto& m : inner_)
        require(m.rows() == dim_ && m.cols() == dim_, ErrorKind::Structure,
                "inner product slice has wrong shape");
}

Vec Correspondence::inner_coords(const Vec& y, const Vec& z) const {
    Vec c(base_->coord_dim());
    for (int i = 0; i < base_->coord_dim(); ++i) c(i) = (y.adjoint() * inner_[i] * z).value();
    return c;
}

CrossedElement Correspondence::inner(const Vec& y, const Vec& z) const {
    Vec c = inner_coords(y, z);
    const auto& system = base_->system();
    int da = system->algebra()->dim();
    CrossedElement f(system);
    for (int g = 0; g < system->group().order(); ++g)
        f.set(g, system->algebra()->from_coords(c.segment(g * da, da)));
    return f;
}

Mat Correspondence::left_of(const CrossedElement& f) const {
    int da = system()->algebra()->dim();
    Mat m = Mat::Zero(dim_, dim_);
    for (int g = 0; g < system()->group().order(); ++g) {
        Vec c = f.at(g).coords();
        for (int j = 0; j < da; ++j)
            if (c(j) != 0.0) m += c(j) * left_[g * da + j];
    }
    return m;
}

Mat Correspondence::right_of_coords(const Vec& bcoords) const {
    Mat m = Mat::Zero(dim_, dim_);
    for (int i = 0; i < base_->coord_dim(); ++i)
        if (bcoords(i) != 0.0) m += bcoords(i) * right_[i];
    return m;
}

Mat Correspondence::right_of(const CrossedElement& f) const {
    int da = system()->algebra()->dim();
    Vec c(base_->coord_dim());
    for (int g = 0; g < system()->group().order(); ++g) c.segment(g * da, da) = f.at(g).coords();
    return right_of_coords(c);
}

Correspondence crossed_correspondence(const EquivariantRep& rep,
                                      std::shared_ptr<const RegularRep> reg) {
    const auto& system = rep.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    const auto& X = *rep.module();
    int da = A->dim();
    int m = rep.dim();
    int n = G.order();
    int dim = n * m;  // carrier basis (g, module index)

    std::vector<Mat> left(static_cast<size_t>(n) * da, Mat::Zero(dim, dim));
    std::vector<Mat> right(static_cast<size_t>(n) * da, Mat::Zero(dim, dim));
    std::vector<Mat> inner(static_cast<size_t>(n) * da, Mat::Zero(dim, dim));

    for (int s = 0; s < n; ++s)
        for (int t = 0; t < da; ++t) {
            Mat& lm = left[s * da + t];
            Mat& rm = right[s * da + t];
            for (int h = 0; h < n; ++h) {
                int k = G.mul(G.inv(s), h);
                lm.block(h * m, k * m, m, m) =
                    X.right_mul_of(system->sigma(s, k)) * rep.rho_basis(t) * rep.v(s);
                int gg = G.mul(h, G.inv(s));
                rm.block(h * m, gg * m, m, m) = X.right_mul_of(
                    system->alpha(gg)(A->basis_element(t)) * system->sigma(gg, s));
            }
        }

    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            int gp = G.mul(g, h);
            Mat w = system->alpha_inv(g).coord_matrix() *
                    A->right_mult_of(system->sigma(g, h).adjoint().coords());
            for (int c = 0; c < da; ++c) {
                Mat acc = Mat::Zero(m, m);
                for (int cp = 0; cp < da; ++cp)
                    if (w(c, cp) != 0.0) acc += w(c, cp) * X.gram(cp);
                inner[h * da + c].block(g * m, gp * m, m, m) = acc;
            }
        }

    return Correspondence(std::move(reg), dim, std::move(left), std::move(right),
                          std::move(inner));
}

Correspondence correspondence_over_self(std::shared_ptr<const RegularRep> reg) {
    const auto& system = reg->system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    int n = G.order();
    int dim = n * da;

    std::vector<CrossedElement> basis;
    basis.reserve(dim);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < da; ++t)
            basis.push_back(CrossedElement::monomial(system, A->basis_element(t), s));

    std::vector<Mat> left(dim, Mat::Zero(dim, dim));
    std::vector<Mat> right(dim, Mat::Zero(dim, dim));
    std::vector<Mat> inner(dim, Mat::Zero(dim, dim));

    auto coords_of = [&](const CrossedElement& f) {
        Vec c(dim);
        for (int g = 0; g < n; ++g) c.segment(g * da, da) = f.at(g).coords();
        return c;
    };

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec prod = coords_of(basis[i].convolve(basis[j]));
            for (int c = 0; c < dim; ++c) {
                if (prod(c) != 0.0) {
                    left[i](c, j) += prod(c);
                    right[j](c, i) += prod(c);
                }
            }
            Vec ip = coords_of(basis[i].involute().convolve(basis[j]));
            for (int c = 0; c < dim; ++c) inner[c](i, j) = ip(c);
        }

    return Correspondence(std::move(reg), dim, std::move(left), std::move(right),
                          std::move(inner));
}

LocalizedCorrespondence localize_correspondence(const Correspondence& y, double tol) {
    const auto& system = y.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    int e = G.id();

    HilbertModule::RawData raw;
    raw.dim = y.dim();
    raw.right_action.reserve(da);
    raw.gram.reserve(da);
    for (int j = 0; j < da; ++j) raw.right_action.push_back(y.right_basis(e * da + j));
    // ⟨·,·⟩_A = expectation of the B-valued inner product: the coefficient at e
    for (int c = 0; c < da; ++c) raw.gram.push_back(y.inner_slice(e * da + c));
    auto module = HilbertModule::validated(A, std::move(raw), tol);
    const Mat& q = module->quotient_map();

    std::vector<Mat> rho;
    rho.reserve(da);
    for (int j = 0; j < da; ++j) rho.push_back(q * y.left_basis(e * da + j) * q.adjoint());

    std::vector<Mat> v;
    v.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        auto lambda_g = CrossedElement::monomial(system, A->one(), g);
        Mat raw_v = y.right_of(lambda_g.involute()) * y.left_of(lambda_g);
        v.push_back(q * raw_v * q.adjoint());
    }

    auto rep = EquivariantRep::validated(system, module, std::move(rho), std::move(v),
                                         std::max(tol, 1e-8));
    return LocalizedCorrespondence{std::move(rep), q};
}

CoeffMap coefficient_from_correspondence(const Correspondence& y, const Vec& yvec,
                                         const Vec& zvec) {
    const auto& system = y.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    std::vector<Mat> maps;
    maps.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        Mat tg(da, da);
        auto lambda_g_star = CrossedElement::monomial(system, A->one(), g).involute();
        for (int j = 0; j < da; ++j) {
            Vec w = y.left_of(CrossedElement::monomial(system, A->basis_element(j), g)) * zvec;
            auto ip = y.inner(yvec, w);
            tg.col(j) = ip.convolve(lambda_g_star).at(G.id()).coords();
        }
        maps.push_back(std::move(tg));
    }
    return CoeffMap(system, std::move(maps));
}

std::vector<Mat> conjugation_rep_matrices(const SystemPtr& system) {
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    int n = G.order();
    std::vector<Mat> out;
    out.reserve(n);
    for (int g = 0; g < n; ++g) {
        Mat m = Mat::Zero(n * da, n * da);
        for (int h = 0; h < n; ++h) {
            int k = G.mul(G.mul(G.inv(g), h), g);
            auto factor = system->sigma(g, k) * system->sigma(h, g).adjoint();
            m.block(h * da, k * da, da, da) =
                A->right_mult_of(factor.coords()) * system->alpha(g).coord_matrix();
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace tcsd
