#include "multiplier.hpp"

namespace tcsd {

MultiplierMap::MultiplierMap(CoeffMap source, std::shared_ptr<const RegularRep> reg)
    : source_(std::move(source)), reg_(std::move(reg)) {
    require(reg_->system()->algebra()->same_as(*source_.system()->algebra()) &&
                reg_->system()->group().table() == source_.system()->group().table(),
            ErrorKind::InvalidArgument, "coefficient map and realization disagree");
}

MultiplierMap build_multiplier(const CoeffMap& t, std::shared_ptr<const RegularRep> reg) {
    return MultiplierMap(t, std::move(reg));
}

Mat MultiplierMap::coord_matrix() const {
    int da = system()->algebra()->dim();
    int n = system()->group().order();
    Mat m = Mat::Zero(da * n, da * n);
    for (int g = 0; g < n; ++g) m.block(g * da, g * da, da, da) = source_.map(g);
    return m;
}

Vec MultiplierMap::apply_coords(const Vec& c) const {
    int da = system()->algebra()->dim();
    int n = system()->group().order();
    require(c.size() == da * n, ErrorKind::Structure, "coordinates have wrong length");
    Vec out(c.size());
    for (int g = 0; g < n; ++g) out.segment(g * da, da) = source_.map(g) * c.segment(g * da, da);
    return out;
}

Mat MultiplierMap::apply(const Mat& x) const {
    return reg_->from_coords(apply_coords(reg_->coords(x)));
}

CpResult gram_choi_cp(const std::vector<Mat>& basis,
                      const std::function<Mat(const Mat&)>& apply, double tol) {
    require(!basis.empty(), ErrorKind::Structure, "spanning family is empty");
    int n = static_cast<int>(basis.size());
    int d = static_cast<int>(basis.front().rows());
    Mat choi(n * d, n * d);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            choi.block(m * d, k * d, d, d) = apply(basis[m].adjoint() * basis[k]);
    auto report = herm_report(choi);
    CpResult result;
    result.scale = report.scale;
    result.herm_residual = report.herm_residual;
    result.margin = report.min_eig;
    double s = std::max(1.0, result.scale);
    result.cp = result.herm_residual <= tol * s && result.margin >= -tol * s;
    return result;
}

CpResult is_cp(const MultiplierMap& m, double tol) {
    const auto& reg = *m.reg();
    const auto& system = reg.system();
    std::vector<Mat> basis;
    basis.reserve(reg.coord_dim());
    for (int g = 0; g < system->group().order(); ++g)
        for (int j = 0; j < system->algebra()->dim(); ++j)
            basis.push_back(reg.ell_basis(j) * reg.lambda(g));
    return gram_choi_cp(basis, [&](const Mat& x) { return m.apply(x); }, tol);
}

CpResult is_cp_on_algebra(const AlgebraPtr& algebra, const Mat& theta, double tol) {
    require(theta.rows() == algebra->dim() && theta.cols() == algebra->dim(),
            ErrorKind::Structure, "map on A has wrong shape");
    std::vector<Mat> basis;
    basis.reserve(algebra->dim());
    for (int j = 0; j < algebra->dim(); ++j) basis.push_back(algebra->rep_basis(j));
    auto apply = [&](const Mat& x) {
        return algebra->from_coords(theta * algebra->from_rep(x).coords()).rep();
    };
    return gram_choi_cp(basis, apply, tol);
}

double cp_norm(const MultiplierMap& m, double tol) {
    auto cp = is_cp(m, tol);
    require(cp.cp, ErrorKind::Precondition, "cp_norm called on a map that is not completely positive");
    const auto& A = m.system()->algebra();
    return m.source().apply(m.system()->group().id(), A->one()).norm();
}

CbBounds cb_bounds(const MultiplierMap& m, std::optional<std::pair<double, double>> realization_norms) {
    const auto& reg = *m.reg();
    const auto& system = reg.system();
    std::vector<Mat> probes;
    probes.push_back(Mat::Identity(reg.space_dim(), reg.space_dim()));
    for (int g = 0; g < system->group().order(); ++g) probes.push_back(reg.lambda(g));
    for (int g = 0; g < system->group().order(); ++g)
        for (int j = 0; j < system->algebra()->dim(); ++j)
            probes.push_back(reg.ell_basis(j) * reg.lambda(g));
    Rng rng(0xcb05eedULL);
    for (int i = 0; i < 16; ++i) {
        Vec c = rng.cgaussian_vec(reg.coord_dim());
        Mat h = reg.from_coords(c);
        probes.push_back(unitary_exp_i(h));  // unitary inside the represented algebra
    }

    CbBounds bounds;
    for (const auto& p : probes) {
        double pn = op_norm(p);
        if (pn <= 0.0) continue;
        bounds.lower = std::max(bounds.lower, op_norm(m.apply(p)) / pn);
    }
    if (realization_norms) {
        bounds.upper = realization_norms->first * realization_norms->second;
        bounds.has_upper = true;
    }
    return bounds;
}

bool is_bimodule(const MultiplierMap& m, double tol) {
    const auto& system = m.system();
    const auto& A = system->algebra();
    int da = A->dim();
    double scale = 1.0;
    for (int g = 0; g < system->group().order(); ++g)
        scale = std::max(scale, op_norm(m.source().map(g)));
    for (int g = 0; g < system->group().order(); ++g)
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j)
                for (int k = 0; k < da; ++k) {
                    auto ei = A->basis_element(i);
                    auto ej = A->basis_element(j);
                    auto ak = system->alpha(g)(A->basis_element(k));
                    // e_i·(e_j⊙g)·e_k = (e_i e_j α_g(e_k))⊙g
                    auto lhs = m.source().apply(g, ei * ej * ak);
                    auto rhs = ei * m.source().apply(g, ej) * ak;
                    if ((lhs - rhs).norm() > tol * scale) return false;
                }
    return true;
}

// ---------------------------------------------------------------------------

ADFunction constant_ad_function(SystemPtr system, const AlgebraElement& value) {
    ADFunction phi;
    phi.phi.assign(system->group().order(), value);
    phi.system = std::move(system);
    return phi;
}

ADFunction ad_conjugate(const ADFunction& phi) {
    const auto& G = phi.system->group();
    ADFunction out;
    out.system = phi.system;
    out.phi.reserve(G.order());
    for (int g = 0; g < G.order(); ++g)
        out.phi.push_back(phi.system->alpha(g)(phi.phi[G.inv(g)]).adjoint());
    return out;
}

bool ad_central_valued(const ADFunction& phi, double tol) {
    const auto& A = phi.system->algebra();
    for (const auto& value : phi.phi) {
        double scale = std::max(1.0, value.norm());
        for (int j = 0; j < A->dim(); ++j) {
            auto ej = A->basis_element(j);
            if ((value * ej - ej * value).norm() > tol * scale) return false;
        }
    }
    return true;
}

std::pair<CoeffMap, CoeffMap> build_L_R(const ADFunction& phi) {
    const auto& system = phi.system;
    const auto& A = system->algebra();
    require(static_cast<int>(phi.phi.size()) == system->group().order(), ErrorKind::Structure,
            "AD function needs one value per group element");
    std::vector<Mat> left, right;
    left.reserve(phi.phi.size());
    right.reserve(phi.phi.size());
    for (const auto& value : phi.phi) {
        left.push_back(A->left_mult_of(value.coords()));
        right.push_back(A->right_mult_of(value.coords()));
    }
    return {CoeffMap(system, std::move(left)), CoeffMap(system, std::move(right))};
}

PsdReport ad_positive_definite_report(const ADFunction& phi) {
    const auto& system = phi.system;
    const auto& G = system->group();
    int n = G.order();
    std::vector<AlgebraElement> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries.push_back(system->alpha(i)(phi.phi[G.mul(G.inv(i), j)]));
    return matrix_over_A_psd(entries, n);
}

bool is_ad_positive_definite(const ADFunction& phi, double tol) {
    return ad_positive_definite_report(phi).positive(tol);
}

PsdReport sigma_ad_positive_definite_report(const ADFunction& phi) {
    const auto& system = phi.system;
    const auto& G = system->group();
    int n = G.order();
    std::vector<AlgebraElement> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = G.mul(G.inv(i), j);
            const auto& s = system->sigma(i, k);
            entries.push_back(s.adjoint() * system->alpha(i)(phi.phi[k]) * s);
        }
    return matrix_over_A_psd(entries, n);
}

bool is_sigma_ad_positive_definite(const ADFunction& phi, double tol) {
    return sigma_ad_positive_definite_report(phi).positive(tol);
}

LphiReport lphi_equivalences(const ADFunction& phi, const std::shared_ptr<const RegularRep>& reg,
                             double tol) {
    auto [lphi, rphi] = build_L_R(phi);
    (void)rphi;
    LphiReport report;
    report.kernel_pd = is_positive_definite(lphi, tol).positive;
    report.central_and_adpd = ad_central_valued(phi, tol) && is_ad_positive_definite(phi, tol);
    report.multiplier_cp = is_cp(build_multiplier(lphi, reg), tol).cp;
    return report;
}

Decomposition decompose(const EquivariantRep& rep, const Vec& x, const Vec& y,
                        const std::shared_ptr<const RegularRep>& reg, double tol) {
    Decomposition out;
    auto t = coefficient(rep, x, y);
    Mat target = build_multiplier(t, reg).coord_matrix();
    if ((x - y).norm() <= tol * std::max(1.0, x.norm())) {
        out.parts.emplace_back(Cplx(1.0, 0.0), t);
        out.residual = 0.0;
        return out;
    }
    auto pol = polarize(rep, x, y);
    Mat sum = Mat::Zero(target.rows(), target.cols());
    for (int k = 0; k < 4; ++k) {
        out.parts.emplace_back(pol.weights[k], pol.parts[k]);
        sum += pol.weights[k] * build_multiplier(pol.parts[k], reg).coord_matrix();
    }
    out.residual = op_norm(sum - target);
    return out;
}

CoeffMap equivariant_cp_multiplier(const SystemPtr& system, const Mat& theta, double tol) {
    const auto& A = system->algebra();
    const auto& G = system->group();
    require(theta.rows() == A->dim() && theta.cols() == A->dim(), ErrorKind::Structure,
            "map on A has wrong shape");

    for (int g = 0; g < G.order(); ++g) {
        const Mat& alpha = system->alpha(g).coord_matrix();
        require(op_norm(theta * alpha - alpha * theta) <= tol * std::max(1.0, op_norm(theta)),
                ErrorKind::Precondition, "map is not equivariant for the action");
    }
    require(is_cp_on_algebra(A, theta, tol).cp, ErrorKind::Precondition,
            "map is not completely positive");

    bool scalar_cocycle = true;
    for (int g = 0; g < G.order() && scalar_cocycle; ++g)
        for (int h = 0; h < G.order() && scalar_cocycle; ++h) {
            const auto& s = system->sigma(g, h);
            Cplx z = s.block(0)(0, 0);
            scalar_cocycle = (s - A->scalar(z)).norm() <= tol;
        }
    if (!scalar_cocycle) {
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h) {
                const auto& s = system->sigma(g, h);
                require((A->from_coords(theta * s.coords()) - s).norm() <= tol,
                        ErrorKind::Precondition,
                        "cocycle values are not fixed by the map and the cocycle is not scalar");
            }
    }
    std::vector<Mat> maps(G.order(), theta);
    return CoeffMap(system, std::move(maps));
}

CoeffMap coeff_from_cp_map(const RegularRep& reg, const std::function<Mat(const Mat&)>& m) {
    const auto& system = reg.system();
    int da = system->algebra()->dim();
    std::vector<Mat> maps;
    maps.reserve(system->group().order());
    for (int g = 0; g < system->group().order(); ++g) {
        Mat tg(da, da);
        for (int j = 0; j < da; ++j) {
            Mat x = reg.ell_basis(j) * reg.lambda(g);
            tg.col(j) = reg.expectation(m(x) * reg.lambda(g).adjoint()).coords();
        }
        maps.push_back(std::move(tg));
    }
    return CoeffMap(system, std::move(maps));
}

}  // namespace tcsd
