#include "crossed.hpp"

#include <algorithm>
#include <cmath>

namespace tcsd {

namespace {
void check_same_system(const SystemPtr& a, const SystemPtr& b) {
    require(a.get() == b.get() ||
                (a->algebra()->same_as(*b->algebra()) &&
                 a->group().table() == b->group().table()),
            ErrorKind::InvalidArgument, "elements belong to different systems");
}
}  // namespace

CrossedElement::CrossedElement(SystemPtr system)
    : system_(std::move(system)),
      values_(system_->group().order(), system_->algebra()->zero()) {}

CrossedElement::CrossedElement(SystemPtr system, std::vector<AlgebraElement> values)
    : system_(std::move(system)), values_(std::move(values)) {
    require(static_cast<int>(values_.size()) == system_->group().order(), ErrorKind::Structure,
            "crossed element needs one coefficient per group element");
}

CrossedElement CrossedElement::monomial(SystemPtr system, const AlgebraElement& a, int g) {
    CrossedElement f(std::move(system));
    f.set(g, a);
    return f;
}

CrossedElement CrossedElement::unit(SystemPtr system) {
    auto one = system->algebra()->one();
    int e = system->group().id();
    return monomial(std::move(system), one, e);
}

void CrossedElement::set(int g, const AlgebraElement& a) {
    require(g >= 0 && g < system_->group().order(), ErrorKind::InvalidArgument,
            "group index out of range");
    values_[g] = a;
}

CrossedElement CrossedElement::operator+(const CrossedElement& rhs) const {
    check_same_system(system_, rhs.system_);
    auto values = values_;
    for (size_t g = 0; g < values.size(); ++g) values[g] = values[g] + rhs.values_[g];
    return CrossedElement(system_, std::move(values));
}

CrossedElement CrossedElement::operator-(const CrossedElement& rhs) const {
    check_same_system(system_, rhs.system_);
    auto values = values_;
    for (size_t g = 0; g < values.size(); ++g) values[g] = values[g] - rhs.values_[g];
    return CrossedElement(system_, std::move(values));
}

CrossedElement CrossedElement::operator*(Cplx z) const {
    auto values = values_;
    for (auto& v : values) v = v * z;
    return CrossedElement(system_, std::move(values));
}

CrossedElement CrossedElement::convolve(const CrossedElement& rhs) const {
    check_same_system(system_, rhs.system_);
    const auto& G = system_->group();
    CrossedElement out(system_);
    for (int h = 0; h < G.order(); ++h) {
        auto acc = system_->algebra()->zero();
        for (int g = 0; g < G.order(); ++g) {
            int k = G.mul(G.inv(g), h);
            acc = acc + values_[g] * system_->alpha(g)(rhs.values_[k]) * system_->sigma(g, k);
        }
        out.values_[h] = acc;
    }
    return out;
}

CrossedElement CrossedElement::involute() const {
    const auto& G = system_->group();
    CrossedElement out(system_);
    for (int h = 0; h < G.order(); ++h) {
        int hinv = G.inv(h);
        out.values_[h] =
            system_->sigma(h, hinv).adjoint() * system_->alpha(h)(values_[hinv]).adjoint();
    }
    return out;
}

double CrossedElement::sup_coefficient_norm() const {
    double n = 0.0;
    for (const auto& v : values_) n = std::max(n, v.norm());
    return n;
}

// ---------------------------------------------------------------------------

RegularRep::RegularRep(SystemPtr system) : system_(std::move(system)) {
    const auto& G = system_->group();
    const auto& A = system_->algebra();
    int d = A->rep_dim();
    space_dim_ = d * G.order();

    ell_basis_.resize(A->dim());
    for (int j = 0; j < A->dim(); ++j) {
        Mat m = Mat::Zero(space_dim_, space_dim_);
        auto basis = A->basis_element(j);
        for (int h = 0; h < G.order(); ++h)
            m.block(h * d, h * d, d, d) = system_->alpha_inv(h)(basis).rep();
        ell_basis_[j] = std::move(m);
    }

    lambda_.resize(G.order());
    for (int g = 0; g < G.order(); ++g) {
        Mat m = Mat::Zero(space_dim_, space_dim_);
        for (int k = 0; k < G.order(); ++k) {
            int gk = G.mul(g, k);
            m.block(gk * d, k * d, d, d) = system_->alpha_inv(gk)(system_->sigma(g, k)).rep();
        }
        lambda_[g] = std::move(m);
    }
}

std::shared_ptr<const RegularRep> RegularRep::make(SystemPtr system) {
    return std::shared_ptr<const RegularRep>(new RegularRep(std::move(system)));
}

Mat RegularRep::ell(const AlgebraElement& a) const {
    Vec c = a.coords();
    Mat m = Mat::Zero(space_dim_, space_dim_);
    for (int j = 0; j < c.size(); ++j)
        if (c(j) != 0.0) m += c(j) * ell_basis_[j];
    return m;
}

Mat RegularRep::act(const CrossedElement& f) const {
    check_same_system(system_, f.system());
    Mat m = Mat::Zero(space_dim_, space_dim_);
    for (int g = 0; g < system_->group().order(); ++g)
        m += ell(f.at(g)) * lambda_[g];
    return m;
}

AlgebraElement RegularRep::expectation(const Mat& x) const {
    require(x.rows() == space_dim_ && x.cols() == space_dim_, ErrorKind::Structure,
            "operator has wrong shape");
    int d = system_->algebra()->rep_dim();
    int e = system_->group().id();
    return system_->algebra()->from_rep(x.block(e * d, e * d, d, d));
}

CrossedElement RegularRep::fourier(const Mat& x) const {
    CrossedElement f(system_);
    for (int g = 0; g < system_->group().order(); ++g)
        f.set(g, expectation(x * lambda_[g].adjoint()));
    return f;
}

Vec RegularRep::coords(const Mat& x) const {
    auto f = fourier(x);
    int da = system_->algebra()->dim();
    Vec c(coord_dim());
    for (int g = 0; g < system_->group().order(); ++g) c.segment(g * da, da) = f.at(g).coords();
    return c;
}

Mat RegularRep::from_coords(const Vec& coords) const {
    require(coords.size() == coord_dim(), ErrorKind::Structure, "coordinates have wrong length");
    int da = system_->algebra()->dim();
    CrossedElement f(system_);
    for (int g = 0; g < system_->group().order(); ++g)
        f.set(g, system_->algebra()->from_coords(coords.segment(g * da, da)));
    return act(f);
}

CrossedSummary analyze_crossed_product(const RegularRep& reg, double tol) {
    const auto& system = reg.system();
    int da = system->algebra()->dim();
    int n = system->group().order();
    int nbasis = da * n;
    int sq = reg.space_dim() * reg.space_dim();

    std::vector<Mat> basis;
    basis.reserve(nbasis);
    for (int g = 0; g < n; ++g)
        for (int j = 0; j < da; ++j)
            basis.push_back(reg.ell_basis(j) * reg.lambda(g));

    Mat vecs(sq, nbasis);
    for (int m = 0; m < nbasis; ++m)
        vecs.col(m) = Eigen::Map<const Vec>(basis[m].data(), sq);

    CrossedSummary summary;
    summary.dim = rank_of(vecs, tol);

    // center: coefficient vectors c with Σ_m c_m [B_m, B_n] = 0 for every n
    Mat commute(sq * nbasis, nbasis);
    for (int nidx = 0; nidx < nbasis; ++nidx)
        for (int m = 0; m < nbasis; ++m) {
            Mat c = basis[m] * basis[nidx] - basis[nidx] * basis[m];
            commute.block(nidx * sq, m, sq, 1) = Eigen::Map<const Vec>(c.data(), sq);
        }
    Mat center = null_space(commute, tol);
    summary.center_dim = static_cast<int>(center.cols());

    // matrix-block sizes: split by the spectrum of a generic Hermitian central
    // element, then measure the rank of each compressed corner
    Rng rng(0x5eed);
    Mat z = Mat::Zero(reg.space_dim(), reg.space_dim());
    for (int i = 0; i < center.cols(); ++i) {
        Mat zi = Mat::Zero(reg.space_dim(), reg.space_dim());
        for (int m = 0; m < nbasis; ++m) zi += center(m, i) * basis[m];
        z += rng.gaussian() * hermitize(zi) + rng.gaussian() * hermitize(Cplx(0, 1) * zi);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(z));
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    std::vector<std::pair<double, Mat>> groups;  // eigenvalue, projection
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double v = es.eigenvalues()(i);
        Mat p = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
        bool merged = false;
        for (auto& [val, proj] : groups)
            if (std::abs(val - v) <= 1e-6 * scale) {
                proj += p;
                merged = true;
                break;
            }
        if (!merged) groups.emplace_back(v, p);
    }
    for (const auto& [val, proj] : groups) {
        Mat corner(sq, nbasis);
        for (int m = 0; m < nbasis; ++m) {
            Mat c = proj * basis[m] * proj;
            corner.col(m) = Eigen::Map<const Vec>(c.data(), sq);
        }
        int rk = rank_of(corner, tol);
        int size = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rk))));
        if (size > 0) summary.blocks.push_back(size);
    }
    std::sort(summary.blocks.rbegin(), summary.blocks.rend());
    return summary;
}

// ---------------------------------------------------------------------------

CovariantRep::CovariantRep(SystemPtr system, std::vector<Mat> pi_basis, std::vector<Mat> u)
    : system_(std::move(system)), pi_basis_(std::move(pi_basis)), u_(std::move(u)) {}

CovariantRep CovariantRep::validated(SystemPtr system, std::vector<Mat> pi_basis,
                                     std::vector<Mat> u, double tol) {
    const auto& A = system->algebra();
    const auto& G = system->group();
    require(static_cast<int>(pi_basis.size()) == A->dim(), ErrorKind::Structure,
            "pi needs one matrix per algebra basis element");
    require(static_cast<int>(u.size()) == G.order(), ErrorKind::Structure,
            "u needs one unitary per group element");
    int dim = static_cast<int>(u[0].rows());
    for (const auto& m : pi_basis)
        require(m.rows() == dim && m.cols() == dim, ErrorKind::Structure,
                "covariant pair matrices must share one space");
    for (const auto& m : u)
        require(m.rows() == dim && m.cols() == dim, ErrorKind::Structure,
                "covariant pair matrices must share one space");

    CovariantRep rep(system, std::move(pi_basis), std::move(u));

    auto check = [&](double residual, const char* what) {
        require(residual <= tol, ErrorKind::Validation,
                std::string("covariant pair fails ") + what);
    };
    // π is a unital *-homomorphism
    check(op_norm(rep.pi(A->one()) - Mat::Identity(dim, dim)), "unitality of pi");
    for (int i = 0; i < A->dim(); ++i) {
        auto ei = A->basis_element(i);
        check(op_norm(rep.pi(ei.adjoint()) - rep.pi(ei).adjoint()), "adjoint of pi");
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            check(op_norm(rep.pi(ei * ej) - rep.pi(ei) * rep.pi(ej)), "multiplicativity of pi");
        }
    }
    for (int g = 0; g < G.order(); ++g) {
        check(op_norm(rep.u(g) * rep.u(g).adjoint() - Mat::Identity(dim, dim)), "unitarity of u");
        for (int h = 0; h < G.order(); ++h)
            check(op_norm(rep.u(g) * rep.u(h) - rep.pi(system->sigma(g, h)) * rep.u(G.mul(g, h))),
                  "cocycle relation of u");
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            check(op_norm(rep.pi(system->alpha(g)(ej)) -
                          rep.u(g) * rep.pi(ej) * rep.u(g).adjoint()),
                  "covariance relation");
        }
    }
    return rep;
}

CovariantRep CovariantRep::regular(const RegularRep& reg) {
    const auto& A = reg.system()->algebra();
    std::vector<Mat> pi_basis;
    pi_basis.reserve(A->dim());
    for (int j = 0; j < A->dim(); ++j) pi_basis.push_back(reg.ell_basis(j));
    std::vector<Mat> u;
    u.reserve(reg.system()->group().order());
    for (int g = 0; g < reg.system()->group().order(); ++g) u.push_back(reg.lambda(g));
    return CovariantRep(reg.system(), std::move(pi_basis), std::move(u));
}

Mat CovariantRep::pi(const AlgebraElement& a) const {
    Vec c = a.coords();
    Mat m = Mat::Zero(space_dim(), space_dim());
    for (int j = 0; j < c.size(); ++j)
        if (c(j) != 0.0) m += c(j) * pi_basis_[j];
    return m;
}

Mat CovariantRep::rep(const CrossedElement& f) const {
    check_same_system(system_, f.system());
    Mat m = Mat::Zero(space_dim(), space_dim());
    for (int g = 0; g < system_->group().order(); ++g) m += pi(f.at(g)) * u_[g];
    return m;
}

CrossedElement random_crossed_element(const SystemPtr& system, Rng& rng) {
    CrossedElement f(system);
    for (int g = 0; g < system->group().order(); ++g) f.set(g, random_element(system->algebra(), rng));
    return f;
}

}  // namespace tcsd
