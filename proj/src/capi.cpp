#include "tcsd/tcsd.h"

#include "gelfand_raikov.hpp"
#include "multiplier.hpp"
#include "serialize.hpp"
#include "suite.hpp"

#include <cstdlib>
#include <cstring>

struct tcsd_system {
    tcsd::SystemPtr system;
};

struct tcsd_coeff {
    tcsd::CoeffMap map;
};

struct tcsd_rep {
    tcsd::EquivariantRep rep;
    std::vector<tcsd::Vec> vectors;
};

namespace {

thread_local std::string g_last_error;

tcsd_status status_of(const tcsd::Error& e) {
    switch (e.kind()) {
        case tcsd::ErrorKind::Io: return TCSD_ERR_IO;
        case tcsd::ErrorKind::Parse: return TCSD_ERR_PARSE;
        case tcsd::ErrorKind::Structure: return TCSD_ERR_PARSE;
        case tcsd::ErrorKind::Validation: return TCSD_ERR_VALIDATION;
        case tcsd::ErrorKind::InvalidArgument: return TCSD_ERR_INVALID_ARGUMENT;
        case tcsd::ErrorKind::Precondition: return TCSD_ERR_PRECONDITION;
    }
    return TCSD_ERR_INTERNAL;
}

template <typename F>
tcsd_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return TCSD_OK;
    } catch (const tcsd::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TCSD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TCSD_ERR_INTERNAL;
    }
}

tcsd_status require_arg(bool ok, const char* what) {
    if (ok) return TCSD_OK;
    g_last_error = what;
    return TCSD_ERR_INVALID_ARGUMENT;
}

double effective_tol(double tol) { return tol > 0.0 ? tol : 1e-9; }

}  // namespace

extern "C" {

const char* tcsd_version(void) { return "1.0.0"; }

const char* tcsd_status_name(tcsd_status status) {
    switch (status) {
        case TCSD_OK: return "ok";
        case TCSD_ERR_IO: return "io error";
        case TCSD_ERR_PARSE: return "parse error";
        case TCSD_ERR_VALIDATION: return "validation error";
        case TCSD_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TCSD_ERR_PRECONDITION: return "precondition violated";
        case TCSD_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* tcsd_last_error(void) { return g_last_error.c_str(); }

tcsd_status tcsd_system_load(const char* path, double tol, tcsd_system** out) {
    if (auto bad = require_arg(path && out, "null argument")) return bad;
    return guarded([&] {
        auto doc = tcsd::load_json_file(path);
        *out = new tcsd_system{tcsd::system_from_json(doc, effective_tol(tol))};
    });
}

tcsd_status tcsd_system_parse(const char* json_text, double tol, tcsd_system** out) {
    if (auto bad = require_arg(json_text && out, "null argument")) return bad;
    return guarded([&] {
        tcsd::Json doc;
        try {
            doc = tcsd::Json::parse(json_text);
        } catch (const tcsd::Json::parse_error& e) {
            tcsd::fail(tcsd::ErrorKind::Parse, e.what());
        }
        *out = new tcsd_system{tcsd::system_from_json(doc, effective_tol(tol))};
    });
}

tcsd_status tcsd_system_builtin(const char* name, tcsd_system** out) {
    if (auto bad = require_arg(name && out, "null argument")) return bad;
    return guarded([&] { *out = new tcsd_system{tcsd::builtin_system(name)}; });
}

tcsd_status tcsd_system_save(const tcsd_system* system, const char* path) {
    if (auto bad = require_arg(system && path, "null argument")) return bad;
    return guarded([&] { tcsd::save_json_file(path, tcsd::system_to_json(*system->system)); });
}

void tcsd_system_free(tcsd_system* system) { delete system; }

tcsd_status tcsd_system_info(const tcsd_system* system, int* group_order, int* algebra_dim,
                             int* rep_dim) {
    if (auto bad = require_arg(system != nullptr, "null system")) return bad;
    if (group_order) *group_order = system->system->group().order();
    if (algebra_dim) *algebra_dim = system->system->algebra()->dim();
    if (rep_dim) *rep_dim = system->system->algebra()->rep_dim();
    return TCSD_OK;
}

tcsd_status tcsd_system_verify(const tcsd_system* system, double* worst_cocycle,
                               double* worst_inverse_law) {
    if (auto bad = require_arg(system != nullptr, "null system")) return bad;
    return guarded([&] {
        if (worst_cocycle) *worst_cocycle = system->system->worst_residual();
        if (worst_inverse_law) *worst_inverse_law = tcsd::lemma_cocycle_sweep(*system->system);
    });
}

tcsd_status tcsd_crossed_summary(const tcsd_system* system, double tol, int* dim,
                                 int* center_dim, int* blocks, int blocks_capacity,
                                 int* block_count) {
    if (auto bad = require_arg(system != nullptr, "null system")) return bad;
    return guarded([&] {
        auto reg = tcsd::RegularRep::make(system->system);
        auto summary = tcsd::analyze_crossed_product(*reg, effective_tol(tol));
        if (dim) *dim = summary.dim;
        if (center_dim) *center_dim = summary.center_dim;
        if (block_count) *block_count = static_cast<int>(summary.blocks.size());
        if (blocks) {
            int n = std::min<int>(blocks_capacity, static_cast<int>(summary.blocks.size()));
            for (int i = 0; i < n; ++i) blocks[i] = summary.blocks[i];
        }
    });
}

tcsd_status tcsd_crossed_export(const tcsd_system* system, double tol, const char* path) {
    if (auto bad = require_arg(system && path, "null argument")) return bad;
    return guarded([&] {
        auto reg = tcsd::RegularRep::make(system->system);
        auto summary = tcsd::analyze_crossed_product(*reg, effective_tol(tol));
        tcsd::save_json_file(path, tcsd::crossed_export_json(*reg, summary));
    });
}

tcsd_status tcsd_coeff_load(const char* path, double tol, tcsd_coeff** out) {
    if (auto bad = require_arg(path && out, "null argument")) return bad;
    return guarded([&] {
        auto doc = tcsd::load_json_file(path);
        *out = new tcsd_coeff{tcsd::coeff_from_json(doc, effective_tol(tol))};
    });
}

tcsd_status tcsd_coeff_save(const tcsd_coeff* coeff, const char* path) {
    if (auto bad = require_arg(coeff && path, "null argument")) return bad;
    return guarded([&] { tcsd::save_json_file(path, tcsd::coeff_to_json(coeff->map)); });
}

tcsd_status tcsd_coeff_identity(const tcsd_system* system, tcsd_coeff** out) {
    if (auto bad = require_arg(system && out, "null argument")) return bad;
    return guarded([&] { *out = new tcsd_coeff{tcsd::CoeffMap::identity(system->system)}; });
}

void tcsd_coeff_free(tcsd_coeff* coeff) { delete coeff; }

tcsd_status tcsd_pd_check(const tcsd_coeff* coeff, double tol, double* kernel_margin,
                          double* cp_margin, int* kernel_positive, int* cp_positive) {
    if (auto bad = require_arg(coeff != nullptr, "null coefficient map")) return bad;
    return guarded([&] {
        double t = effective_tol(tol);
        auto pd = tcsd::is_positive_definite(coeff->map, t);
        auto reg = tcsd::RegularRep::make(coeff->map.system());
        auto cp = tcsd::is_cp(tcsd::build_multiplier(coeff->map, reg), t);
        if (kernel_margin) *kernel_margin = pd.margin;
        if (cp_margin) *cp_margin = cp.margin;
        if (kernel_positive) *kernel_positive = pd.positive ? 1 : 0;
        if (cp_positive) *cp_positive = cp.cp ? 1 : 0;
    });
}

tcsd_status tcsd_coeff_export_multiplier(const tcsd_coeff* coeff, const char* path) {
    if (auto bad = require_arg(coeff && path, "null argument")) return bad;
    return guarded([&] {
        auto reg = tcsd::RegularRep::make(coeff->map.system());
        auto m = tcsd::build_multiplier(coeff->map, reg);
        tcsd::Json doc;
        doc["system"] = tcsd::system_to_json(*coeff->map.system());
        doc["coord_matrix"] = tcsd::mat_to_json(m.coord_matrix());
        tcsd::save_json_file(path, doc);
    });
}

tcsd_status tcsd_gr_reconstruct(const tcsd_coeff* coeff, double tol, tcsd_rep** out) {
    if (auto bad = require_arg(coeff && out, "null argument")) return bad;
    return guarded([&] {
        auto rec = tcsd::reconstruct(coeff->map, effective_tol(tol));
        *out = new tcsd_rep{std::move(rec.rep), {std::move(rec.cyclic)}};
    });
}

tcsd_status tcsd_rep_load(const char* path, double tol, tcsd_rep** out) {
    if (auto bad = require_arg(path && out, "null argument")) return bad;
    return guarded([&] {
        auto doc = tcsd::rep_from_json(tcsd::load_json_file(path), effective_tol(tol));
        *out = new tcsd_rep{std::move(doc.rep), std::move(doc.vectors)};
    });
}

tcsd_status tcsd_rep_save(const tcsd_rep* rep, const char* path) {
    if (auto bad = require_arg(rep && path, "null argument")) return bad;
    return guarded([&] { tcsd::save_json_file(path, tcsd::rep_to_json(rep->rep, rep->vectors)); });
}

void tcsd_rep_free(tcsd_rep* rep) { delete rep; }

tcsd_status tcsd_rep_dim(const tcsd_rep* rep, int* dim) {
    if (auto bad = require_arg(rep && dim, "null argument")) return bad;
    *dim = rep->rep.dim();
    return TCSD_OK;
}

tcsd_status tcsd_rep_vector_count(const tcsd_rep* rep, int* count) {
    if (auto bad = require_arg(rep && count, "null argument")) return bad;
    *count = static_cast<int>(rep->vectors.size());
    return TCSD_OK;
}

tcsd_status tcsd_rep_coefficient(const tcsd_rep* rep, int x_index, int y_index,
                                 tcsd_coeff** out) {
    if (auto bad = require_arg(rep && out, "null argument")) return bad;
    return guarded([&] {
        auto pick = [&](int index) -> tcsd::Vec {
            if (!rep->vectors.empty()) {
                tcsd::require(index >= 0 && index < static_cast<int>(rep->vectors.size()),
                              tcsd::ErrorKind::InvalidArgument, "stored vector index out of range");
                return rep->vectors[index];
            }
            tcsd::require(index >= 0 && index < rep->rep.dim(), tcsd::ErrorKind::InvalidArgument,
                          "carrier basis index out of range");
            return tcsd::Vec::Unit(rep->rep.dim(), index);
        };
        *out = new tcsd_coeff{tcsd::coefficient(rep->rep, pick(x_index), pick(y_index))};
    });
}

tcsd_status tcsd_suite_run(const char* const* system_paths, int n_paths, uint64_t seed,
                           double tol, const char* report_path, char** report_json,
                           int* failures) {
    return guarded([&] {
        std::vector<tcsd::CorpusEntry> systems;
        if (n_paths <= 0) {
            systems = tcsd::builtin_corpus();
        } else {
            tcsd::require(system_paths != nullptr, tcsd::ErrorKind::InvalidArgument,
                          "null system paths");
            for (int i = 0; i < n_paths; ++i) {
                auto doc = tcsd::load_json_file(system_paths[i]);
                systems.push_back(
                    {system_paths[i], tcsd::system_from_json(doc, effective_tol(tol))});
            }
        }
        auto report = tcsd::run_suite(systems, seed, effective_tol(tol));
        auto doc = report.to_json();
        if (report_path) tcsd::save_json_file(report_path, doc);
        if (report_json) {
            std::string text = doc.dump(1);
            *report_json = static_cast<char*>(std::malloc(text.size() + 1));
            tcsd::require(*report_json != nullptr, tcsd::ErrorKind::Io, "allocation failed");
            std::memcpy(*report_json, text.c_str(), text.size() + 1);
        }
        if (failures) *failures = report.failures();
    });
}

void tcsd_string_free(char* text) { std::free(text); }

}  // extern "C"
