#include "serialize.hpp"

#include <fstream>

namespace tcsd {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json complex_to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        parse_fail("complex numbers must be [re, im] pairs");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) parse_fail("matrix must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) parse_fail("matrix rows must be arrays");
    int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            parse_fail("matrix is ragged");
        for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
    }
    return m;
}

Mat mat_from_json(const Json& j, int rows, int cols) {
    Mat m = mat_from_json(j);
    if (m.rows() != rows || m.cols() != cols) parse_fail("matrix has unexpected shape");
    return m;
}

Json element_to_json(const AlgebraElement& a) {
    Json blocks = Json::array();
    for (int k = 0; k < a.block_count(); ++k) blocks.push_back(mat_to_json(a.block(k)));
    return blocks;
}

AlgebraElement element_from_json(const AlgebraPtr& algebra, const Json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != algebra->block_count())
        parse_fail("element must list one matrix per algebra block");
    std::vector<Mat> blocks;
    blocks.reserve(algebra->block_count());
    for (int k = 0; k < algebra->block_count(); ++k)
        blocks.push_back(mat_from_json(j[k], algebra->block_size(k), algebra->block_size(k)));
    return AlgebraElement(algebra, std::move(blocks));
}

Json system_to_json(const TwistedSystem& system) {
    const auto& A = system.algebra();
    const auto& G = system.group();
    Json j;
    j["algebra"]["blocks"] = A->block_sizes();
    j["group"]["labels"] = G.labels();
    Json table = Json::array();
    for (int g = 0; g < G.order(); ++g) {
        Json row = Json::array();
        for (int h = 0; h < G.order(); ++h) row.push_back(G.mul(g, h));
        table.push_back(std::move(row));
    }
    j["group"]["table"] = std::move(table);
    Json alpha = Json::object();
    for (int g = 0; g < G.order(); ++g) {
        Json entry;
        entry["perm"] = system.alpha(g).block_perm();
        entry["unitary"] = element_to_json(system.alpha(g).unitary());
        alpha[G.label(g)] = std::move(entry);
    }
    j["alpha"] = std::move(alpha);
    Json sigma = Json::array();
    for (int g = 0; g < G.order(); ++g) {
        Json row = Json::array();
        for (int h = 0; h < G.order(); ++h) row.push_back(element_to_json(system.sigma(g, h)));
        sigma.push_back(std::move(row));
    }
    j["sigma"] = std::move(sigma);
    return j;
}

SystemPtr system_from_json(const Json& j, double tol) {
    const Json& algebra_doc = field(j, "algebra");
    const Json& blocks_doc = field(algebra_doc, "blocks");
    if (!blocks_doc.is_array() || blocks_doc.empty()) parse_fail("algebra blocks must be a list");
    std::vector<int> blocks;
    for (const auto& b : blocks_doc) {
        if (!b.is_number_integer() || b.get<int>() < 1)
            parse_fail("algebra block sizes must be positive integers");
        blocks.push_back(b.get<int>());
    }
    auto algebra = CStarAlgebra::make(std::move(blocks));

    const Json& group_doc = field(j, "group");
    const Json& labels_doc = field(group_doc, "labels");
    const Json& table_doc = field(group_doc, "table");
    if (!labels_doc.is_array() || labels_doc.empty()) parse_fail("group labels must be a list");
    std::vector<std::string> labels;
    for (const auto& l : labels_doc) {
        if (!l.is_string()) parse_fail("group labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    int order = static_cast<int>(labels.size());
    if (!table_doc.is_array() || static_cast<int>(table_doc.size()) != order)
        parse_fail("group table must have one row per element");
    std::vector<int> table;
    table.reserve(order * order);
    for (const auto& row : table_doc) {
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            parse_fail("group table is ragged");
        for (const auto& entry : row) {
            if (!entry.is_number_integer()) parse_fail("group table entries must be integers");
            table.push_back(entry.get<int>());
        }
    }
    FiniteGroup group = [&] {
        try {
            return FiniteGroup::from_table(std::move(labels), std::move(table));
        } catch (const Error& e) {
            parse_fail(std::string("invalid group: ") + e.what());
        }
    }();

    const Json& alpha_doc = field(j, "alpha");
    std::vector<Automorphism> alpha;
    alpha.reserve(order);
    for (int g = 0; g < order; ++g) {
        if (!alpha_doc.contains(group.label(g)))
            parse_fail("alpha is missing an entry for '" + group.label(g) + "'");
        const Json& entry = alpha_doc.at(group.label(g));
        const Json& perm_doc = field(entry, "perm");
        if (!perm_doc.is_array() || static_cast<int>(perm_doc.size()) != algebra->block_count())
            parse_fail("alpha perm must list one target per block");
        std::vector<int> perm;
        for (const auto& p : perm_doc) {
            if (!p.is_number_integer()) parse_fail("alpha perm entries must be integers");
            perm.push_back(p.get<int>());
        }
        auto unitary = element_from_json(algebra, field(entry, "unitary"));
        try {
            alpha.push_back(Automorphism::make(algebra, std::move(perm), std::move(unitary), tol));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Structure) parse_fail(e.what());
            throw;
        }
    }

    const Json& sigma_doc = field(j, "sigma");
    if (!sigma_doc.is_array() || static_cast<int>(sigma_doc.size()) != order)
        parse_fail("sigma must have one row per group element");
    std::vector<AlgebraElement> sigma;
    sigma.reserve(order * order);
    for (int g = 0; g < order; ++g) {
        if (!sigma_doc[g].is_array() || static_cast<int>(sigma_doc[g].size()) != order)
            parse_fail("sigma table is ragged");
        for (int h = 0; h < order; ++h)
            sigma.push_back(element_from_json(algebra, sigma_doc[g][h]));
    }
    return TwistedSystem::validated(algebra, std::move(group), std::move(alpha), std::move(sigma),
                                    tol);
}

Json crossed_element_to_json(const CrossedElement& f) {
    Json j = Json::object();
    const auto& G = f.system()->group();
    for (int g = 0; g < G.order(); ++g) j[G.label(g)] = element_to_json(f.at(g));
    return j;
}

CrossedElement crossed_element_from_json(const SystemPtr& system, const Json& j) {
    if (!j.is_object()) parse_fail("crossed element must map labels to elements");
    CrossedElement f(system);
    const auto& G = system->group();
    for (const auto& [label, value] : j.items()) {
        int g = [&] {
            try {
                return G.index_of(label);
            } catch (const Error&) {
                parse_fail("unknown group element '" + label + "'");
            }
        }();
        f.set(g, element_from_json(system->algebra(), value));
    }
    return f;
}

Json coeff_to_json(const CoeffMap& t) {
    Json j;
    j["system"] = system_to_json(*t.system());
    Json maps = Json::array();
    for (int g = 0; g < t.system()->group().order(); ++g) maps.push_back(mat_to_json(t.map(g)));
    j["maps"] = std::move(maps);
    return j;
}

CoeffMap coeff_from_json(const Json& j, double tol) {
    auto system = system_from_json(field(j, "system"), tol);
    const Json& maps_doc = field(j, "maps");
    int order = system->group().order();
    int da = system->algebra()->dim();
    if (!maps_doc.is_array() || static_cast<int>(maps_doc.size()) != order)
        parse_fail("coefficient document needs one matrix per group element");
    std::vector<Mat> maps;
    maps.reserve(order);
    for (int g = 0; g < order; ++g) maps.push_back(mat_from_json(maps_doc[g], da, da));
    return CoeffMap(std::move(system), std::move(maps));
}

Json rep_to_json(const EquivariantRep& rep, const std::vector<Vec>& vectors) {
    const auto& module = *rep.module();
    const auto& A = module.algebra();
    Json j;
    j["system"] = system_to_json(*rep.system());
    Json mod;
    mod["dim"] = module.dim();
    Json actions = Json::array();
    for (int t = 0; t < A->dim(); ++t) actions.push_back(mat_to_json(module.right_action(t)));
    mod["right_action"] = std::move(actions);
    Json ip = Json::array();
    for (int i = 0; i < module.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < module.dim(); ++k) {
            Vec coords(A->dim());
            for (int c = 0; c < A->dim(); ++c) coords(c) = module.gram(c)(i, k);
            row.push_back(element_to_json(A->from_coords(coords)));
        }
        ip.push_back(std::move(row));
    }
    mod["inner_product"] = std::move(ip);
    j["module"] = std::move(mod);
    Json rho = Json::array();
    for (int t = 0; t < A->dim(); ++t) rho.push_back(mat_to_json(rep.rho_basis(t)));
    j["rho"] = std::move(rho);
    Json v = Json::array();
    for (int g = 0; g < rep.system()->group().order(); ++g) v.push_back(mat_to_json(rep.v(g)));
    j["v"] = std::move(v);
    if (!vectors.empty()) {
        Json vecs = Json::array();
        for (const auto& x : vectors) {
            Json entry = Json::array();
            for (Eigen::Index i = 0; i < x.size(); ++i) entry.push_back(complex_to_json(x(i)));
            vecs.push_back(std::move(entry));
        }
        j["vectors"] = std::move(vecs);
    }
    return j;
}

RepDocument rep_from_json(const Json& j, double tol) {
    auto system = system_from_json(field(j, "system"), tol);
    const auto& A = system->algebra();
    const Json& mod = field(j, "module");
    const Json& dim_doc = field(mod, "dim");
    if (!dim_doc.is_number_integer() || dim_doc.get<int>() < 1)
        parse_fail("module dim must be a positive integer");
    int m = dim_doc.get<int>();

    const Json& actions_doc = field(mod, "right_action");
    if (!actions_doc.is_array() || static_cast<int>(actions_doc.size()) != A->dim())
        parse_fail("module right_action needs one matrix per algebra basis element");
    HilbertModule::RawData raw;
    raw.dim = m;
    for (int t = 0; t < A->dim(); ++t) raw.right_action.push_back(mat_from_json(actions_doc[t], m, m));

    const Json& ip_doc = field(mod, "inner_product");
    if (!ip_doc.is_array() || static_cast<int>(ip_doc.size()) != m)
        parse_fail("module inner_product must be an m×m array of elements");
    raw.gram.assign(A->dim(), Mat::Zero(m, m));
    for (int i = 0; i < m; ++i) {
        if (!ip_doc[i].is_array() || static_cast<int>(ip_doc[i].size()) != m)
            parse_fail("module inner_product is ragged");
        for (int k = 0; k < m; ++k) {
            Vec coords = element_from_json(A, ip_doc[i][k]).coords();
            for (int c = 0; c < A->dim(); ++c) raw.gram[c](i, k) = coords(c);
        }
    }
    auto module = HilbertModule::validated(A, std::move(raw), tol);
    if (module->dim() != m)
        fail(ErrorKind::Validation, "serialized module carries null vectors");

    const Json& rho_doc = field(j, "rho");
    const Json& v_doc = field(j, "v");
    if (!rho_doc.is_array() || static_cast<int>(rho_doc.size()) != A->dim())
        parse_fail("rho needs one matrix per algebra basis element");
    if (!v_doc.is_array() || static_cast<int>(v_doc.size()) != system->group().order())
        parse_fail("v needs one matrix per group element");
    std::vector<Mat> rho, v;
    for (int t = 0; t < A->dim(); ++t) rho.push_back(mat_from_json(rho_doc[t], m, m));
    for (int g = 0; g < system->group().order(); ++g) v.push_back(mat_from_json(v_doc[g], m, m));
    RepDocument doc{EquivariantRep::validated(std::move(system), std::move(module),
                                              std::move(rho), std::move(v), tol),
                    {}};
    if (j.contains("vectors")) {
        const Json& vecs = j.at("vectors");
        if (!vecs.is_array()) parse_fail("vectors must be an array");
        for (const auto& entry : vecs) {
            if (!entry.is_array() || static_cast<int>(entry.size()) != m)
                parse_fail("stored vector has wrong length");
            Vec x(m);
            for (int i = 0; i < m; ++i) x(i) = complex_from_json(entry[i]);
            doc.vectors.push_back(std::move(x));
        }
    }
    return doc;
}

Json crossed_export_json(const RegularRep& reg, const CrossedSummary& summary) {
    Json j;
    j["system"] = system_to_json(*reg.system());
    j["dim"] = summary.dim;
    j["center_dim"] = summary.center_dim;
    j["blocks"] = summary.blocks;
    Json lambda = Json::array();
    for (int g = 0; g < reg.system()->group().order(); ++g)
        lambda.push_back(mat_to_json(reg.lambda(g)));
    j["lambda"] = std::move(lambda);
    Json ell = Json::array();
    for (int t = 0; t < reg.system()->algebra()->dim(); ++t)
        ell.push_back(mat_to_json(reg.ell_basis(t)));
    j["ell_basis"] = std::move(ell);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("invalid document: ") + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
    out << j.dump(1) << "\n";
    if (!out) fail(ErrorKind::Io, "write failed for '" + path + "'");
}

}  // namespace tcsd
