#include "coeff.hpp"

#include <limits>

namespace tcsd {

namespace {
void check_same_system(const SystemPtr& a, const SystemPtr& b) {
    require(a.get() == b.get() ||
                (a->algebra()->same_as(*b->algebra()) && a->group().table() == b->group().table()),
            ErrorKind::InvalidArgument, "coefficient maps belong to different systems");
}
}  // namespace

CoeffMap::CoeffMap(SystemPtr system, std::vector<Mat> maps)
    : system_(std::move(system)), maps_(std::move(maps)) {
    require(static_cast<int>(maps_.size()) == system_->group().order(), ErrorKind::Structure,
            "coefficient map needs one matrix per group element");
    int da = system_->algebra()->dim();
    for (const auto& m : maps_)
        require(m.rows() == da && m.cols() == da, ErrorKind::Structure,
                "coefficient matrix has wrong shape");
}

CoeffMap CoeffMap::identity(SystemPtr system) {
    int da = system->algebra()->dim();
    std::vector<Mat> maps(system->group().order(), Mat::Identity(da, da));
    return CoeffMap(std::move(system), std::move(maps));
}

CoeffMap CoeffMap::zero(SystemPtr system) {
    int da = system->algebra()->dim();
    std::vector<Mat> maps(system->group().order(), Mat::Zero(da, da));
    return CoeffMap(std::move(system), std::move(maps));
}

AlgebraElement CoeffMap::apply(int g, const AlgebraElement& a) const {
    return system_->algebra()->from_coords(maps_[g] * a.coords());
}

CoeffMap CoeffMap::operator+(const CoeffMap& rhs) const {
    check_same_system(system_, rhs.system_);
    auto maps = maps_;
    for (size_t g = 0; g < maps.size(); ++g) maps[g] += rhs.maps_[g];
    return CoeffMap(system_, std::move(maps));
}

CoeffMap CoeffMap::operator-(const CoeffMap& rhs) const {
    check_same_system(system_, rhs.system_);
    auto maps = maps_;
    for (size_t g = 0; g < maps.size(); ++g) maps[g] -= rhs.maps_[g];
    return CoeffMap(system_, std::move(maps));
}

CoeffMap CoeffMap::operator*(Cplx z) const {
    auto maps = maps_;
    for (auto& m : maps) m *= z;
    return CoeffMap(system_, std::move(maps));
}

CoeffMap CoeffMap::operator*(const CoeffMap& rhs) const {
    check_same_system(system_, rhs.system_);
    auto maps = maps_;
    for (size_t g = 0; g < maps.size(); ++g) maps[g] = maps_[g] * rhs.maps_[g];
    return CoeffMap(system_, std::move(maps));
}

double CoeffMap::entry_distance(const CoeffMap& rhs) const {
    check_same_system(system_, rhs.system_);
    double d = 0.0;
    for (size_t g = 0; g < maps_.size(); ++g) d = std::max(d, op_norm(maps_[g] - rhs.maps_[g]));
    return d;
}

double CoeffMap::sup_norm() const {
    const auto& A = system_->algebra();
    std::vector<AlgebraElement> probes;
    probes.push_back(A->one());
    for (int j = 0; j < A->dim(); ++j) probes.push_back(A->basis_element(j));
    Rng rng(0xc0ffee);
    for (int i = 0; i < 24; ++i) probes.push_back(random_unitary(A, rng));

    double best = 0.0;
    for (size_t g = 0; g < maps_.size(); ++g)
        for (const auto& p : probes)
            best = std::max(best, apply(static_cast<int>(g), p).norm());
    return best;
}

// ---------------------------------------------------------------------------

CoeffMap coefficient(const EquivariantRep& rep, const Vec& x, const Vec& y) {
    const auto& system = rep.system();
    const auto& module = *rep.module();
    int da = system->algebra()->dim();
    require(x.size() == rep.dim() && y.size() == rep.dim(), ErrorKind::InvalidArgument,
            "coefficient vectors must live on the representation carrier");
    std::vector<Mat> maps;
    maps.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g) {
        Mat tg(da, da);
        Vec vy = rep.v(g) * y;
        for (int j = 0; j < da; ++j) tg.col(j) = module.inner_coords(x, rep.rho_basis(j) * vy);
        maps.push_back(std::move(tg));
    }
    return CoeffMap(system, std::move(maps));
}

CoeffMap embed_scalar(SystemPtr system, const std::vector<Cplx>& phi) {
    require(static_cast<int>(phi.size()) == system->group().order(), ErrorKind::InvalidArgument,
            "need one scalar per group element");
    int da = system->algebra()->dim();
    std::vector<Mat> maps;
    maps.reserve(phi.size());
    for (Cplx z : phi) maps.push_back(z * Mat::Identity(da, da));
    return CoeffMap(std::move(system), std::move(maps));
}

std::vector<AlgebraElement> pd_kernel(const CoeffMap& t) {
    const auto& system = t.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    int n = G.order() * da;

    std::vector<AlgebraElement> kernel;
    kernel.reserve(static_cast<size_t>(n) * n);
    kernel.assign(static_cast<size_t>(n) * n, A->zero());

    for (int g = 0; g < G.order(); ++g) {
        const Mat& alpha_g = system->alpha(g).coord_matrix();
        const Mat& alpha_g_inv = system->alpha_inv(g).coord_matrix();
        for (int h = 0; h < G.order(); ++h) {
            int k = G.mul(G.inv(g), h);
            const auto& s = system->sigma(g, k);
            // coordinate operator a*b ↦ K-value, applied to coords(e_i*·e_j)
            Mat op = A->right_mult_of(s.coords()) * alpha_g * t.map(k) * alpha_g_inv *
                     A->right_mult_of(s.adjoint().coords());
            for (int i = 0; i < da; ++i) {
                auto ei_adj = A->basis_element(i).adjoint();
                for (int j = 0; j < da; ++j) {
                    Vec arg = (ei_adj * A->basis_element(j)).coords();
                    kernel[static_cast<size_t>(g * da + i) * n + (h * da + j)] =
                        A->from_coords(op * arg);
                }
            }
        }
    }
    return kernel;
}

PdResult is_positive_definite(const CoeffMap& t, double tol) {
    auto kernel = pd_kernel(t);
    int n = t.system()->group().order() * t.system()->algebra()->dim();
    auto report = matrix_over_A_psd(kernel, n);
    PdResult result;
    result.margin = report.min_eig;
    result.herm_residual = report.herm_residual;
    result.scale = report.scale;
    result.positive = report.positive(tol);
    return result;
}

CoeffMap conjugate(const CoeffMap& t) {
    const auto& system = t.system();
    const auto& A = system->algebra();
    const auto& G = system->group();
    int da = A->dim();
    std::vector<Mat> maps;
    maps.reserve(G.order());
    for (int g = 0; g < G.order(); ++g) {
        int ginv = G.inv(g);
        const auto& s = system->sigma(g, ginv);
        Mat tg(da, da);
        for (int j = 0; j < da; ++j) {
            auto w = system->alpha_inv(g)(A->basis_element(j).adjoint() * s.adjoint());
            auto z = t.apply(ginv, w);
            tg.col(j) = (s.adjoint() * system->alpha(g)(z).adjoint()).coords();
        }
        maps.push_back(std::move(tg));
    }
    return CoeffMap(system, std::move(maps));
}

CoeffMap tilde_transform(const CoeffMap& t) {
    const auto& system = t.system();
    std::vector<Mat> maps;
    maps.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g)
        maps.push_back(system->alpha_inv(g).coord_matrix() * t.map(g) *
                       system->alpha(g).coord_matrix());
    return CoeffMap(system, std::move(maps));
}

CoeffMap tilde_inverse(const CoeffMap& t) {
    const auto& system = t.system();
    std::vector<Mat> maps;
    maps.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g)
        maps.push_back(system->alpha(g).coord_matrix() * t.map(g) *
                       system->alpha_inv(g).coord_matrix());
    return CoeffMap(system, std::move(maps));
}

Polarization polarize(const EquivariantRep& rep, const Vec& x, const Vec& y) {
    Polarization out;
    const Cplx i(0.0, 1.0);
    Cplx ik(1.0, 0.0);
    for (int k = 0; k < 4; ++k) {
        out.weights[k] = ik * 0.25;
        out.vectors.push_back(y + ik * x);
        out.parts.push_back(coefficient(rep, out.vectors.back(), out.vectors.back()));
        ik *= i;
    }
    return out;
}

std::pair<double, double> sup_norm_identity(const CoeffMap& t) {
    const auto& A = t.system()->algebra();
    double sup = t.sup_norm();
    double at_unit = t.apply(t.system()->group().id(), A->one()).norm();
    return {sup, at_unit};
}

bool commutes_with_trivial_coefficients(const CoeffMap& t, double tol) {
    const auto& system = t.system();
    const auto& A = system->algebra();
    int da = A->dim();
    for (int g = 0; g < system->group().order(); ++g) {
        for (int i = 0; i < da; ++i) {
            Mat left = A->left_mult_of(A->basis_element(i).adjoint().coords());
            for (int k = 0; k < da; ++k) {
                Mat right = A->right_mult_of(system->alpha(g)(A->basis_element(k)).coords());
                Mat trivial = left * right;
                double residual = op_norm(t.map(g) * trivial - trivial * t.map(g));
                if (residual > tol * std::max(1.0, op_norm(t.map(g)))) return false;
            }
        }
    }
    return true;
}

BzCoefficient bz_coefficient(const EquivariantRep& rep, const Vec& x, const Vec& y, double tol) {
    const auto& system = rep.system();
    const auto& A = system->algebra();
    const auto& module = *rep.module();
    auto central_residual = [&](const Vec& z) {
        double worst = 0.0;
        for (int j = 0; j < A->dim(); ++j)
            worst = std::max(worst,
                             (rep.rho_basis(j) * z - module.right_action(j) * z).norm());
        return worst;
    };
    double scale = std::max(1.0, std::max(x.norm(), y.norm()));
    require(central_residual(x) <= tol * scale, ErrorKind::Precondition,
            "x is not a central vector");
    require(central_residual(y) <= tol * scale, ErrorKind::Precondition,
            "y is not a central vector");

    BzCoefficient out{CoeffMap::zero(system), {}};
    std::vector<Mat> maps;
    maps.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g) {
        auto phi_g = module.inner(x, rep.v(g) * y);
        out.phi.push_back(phi_g);
        maps.push_back(A->left_mult_of(phi_g.coords()));
    }
    out.t = CoeffMap(system, std::move(maps));
    return out;
}

AmenabilityReport amenability_witness_check(const std::vector<CoeffMap>& family, double eps,
                                            double tol) {
    require(!family.empty(), ErrorKind::InvalidArgument, "witness family is empty");
    AmenabilityReport report;
    report.worst_margin = std::numeric_limits<double>::infinity();
    bool all_pd = true;
    for (const auto& t : family) {
        auto pd = is_positive_definite(t, tol);
        report.worst_margin = std::min(report.worst_margin, pd.margin);
        all_pd = all_pd && pd.positive;
        const auto& A = t.system()->algebra();
        report.sup_bound =
            std::max(report.sup_bound, t.apply(t.system()->group().id(), A->one()).norm());
    }
    const auto& last = family.back();
    const auto& A = last.system()->algebra();
    double deviation = 0.0;
    for (int g = 0; g < last.system()->group().order(); ++g)
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            deviation = std::max(deviation, (last.apply(g, ej) - ej).norm());
        }
    report.final_deviation = deviation;
    report.ok = all_pd && deviation <= eps + tol;
    return report;
}

}  // namespace tcsd
