// Command-line front end; talks to the library exclusively through the C API.

#include <tcsd/tcsd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

double tolerance_from(double flag_value) {
    if (flag_value > 0.0) return flag_value;
    if (const char* env = std::getenv("TCSD_TOL")) {
        double v = std::atof(env);
        if (v > 0.0) return v;
    }
    return 1e-9;
}

int report_error(tcsd_status status) {
    std::fprintf(stderr, "error: %s: %s\n", tcsd_status_name(status), tcsd_last_error());
    return kExitError;
}

struct SystemHandle {
    tcsd_system* ptr = nullptr;
    ~SystemHandle() { tcsd_system_free(ptr); }
};
struct CoeffHandle {
    tcsd_coeff* ptr = nullptr;
    ~CoeffHandle() { tcsd_coeff_free(ptr); }
};
struct RepHandle {
    tcsd_rep* ptr = nullptr;
    ~RepHandle() { tcsd_rep_free(ptr); }
};

int cmd_verify(const std::string& path, double tol) {
    SystemHandle system;
    // a failed load is a parse/validation outcome, not a crash
    if (auto status = tcsd_system_load(path.c_str(), tol, &system.ptr)) {
        if (status == TCSD_ERR_VALIDATION) {
            std::fprintf(stderr, "validation failed: %s\n", tcsd_last_error());
            return kExitViolation;
        }
        return report_error(status);
    }
    double worst_cocycle = 0.0, worst_inverse = 0.0;
    if (auto status = tcsd_system_verify(system.ptr, &worst_cocycle, &worst_inverse))
        return report_error(status);
    std::printf("cocycle residual   %.3e\n", worst_cocycle);
    std::printf("inverse-law sweep  %.3e\n", worst_inverse);
    if (worst_cocycle > tol || worst_inverse > tol) {
        std::printf("FAIL\n");
        return kExitViolation;
    }
    std::printf("OK\n");
    return kExitOk;
}

int cmd_crossed(const std::string& path, const std::string& export_path, double tol) {
    SystemHandle system;
    if (auto status = tcsd_system_load(path.c_str(), tol, &system.ptr)) return report_error(status);
    int dim = 0, center = 0, nblocks = 0;
    std::vector<int> blocks(64, 0);
    if (auto status = tcsd_crossed_summary(system.ptr, tol, &dim, &center, blocks.data(),
                                           static_cast<int>(blocks.size()), &nblocks))
        return report_error(status);
    std::printf("dim %d, center %d, blocks [", dim, center);
    for (int i = 0; i < nblocks; ++i) std::printf("%s%d", i ? " " : "", blocks[i]);
    std::printf("]\n");
    if (!export_path.empty()) {
        if (auto status = tcsd_crossed_export(system.ptr, tol, export_path.c_str()))
            return report_error(status);
        std::printf("exported %s\n", export_path.c_str());
    }
    return kExitOk;
}

int cmd_pd_check(const std::string& coeff_path, const std::string& system_path, bool identity,
                 const std::string& multiplier_path, double tol) {
    CoeffHandle coeff;
    if (identity) {
        SystemHandle system;
        if (auto status = tcsd_system_load(system_path.c_str(), tol, &system.ptr))
            return report_error(status);
        if (auto status = tcsd_coeff_identity(system.ptr, &coeff.ptr)) return report_error(status);
    } else {
        if (auto status = tcsd_coeff_load(coeff_path.c_str(), tol, &coeff.ptr))
            return report_error(status);
    }
    if (!multiplier_path.empty()) {
        if (auto status = tcsd_coeff_export_multiplier(coeff.ptr, multiplier_path.c_str()))
            return report_error(status);
        std::printf("multiplier matrix written to %s\n", multiplier_path.c_str());
    }
    double kernel_margin = 0.0, cp_margin = 0.0;
    int kernel_pd = 0, cp_pd = 0;
    if (auto status = tcsd_pd_check(coeff.ptr, tol, &kernel_margin, &cp_margin, &kernel_pd, &cp_pd))
        return report_error(status);
    std::printf("kernel margin %.6e (%s)\n", kernel_margin, kernel_pd ? "positive" : "negative");
    std::printf("cp margin     %.6e (%s)\n", cp_margin, cp_pd ? "positive" : "negative");
    if (kernel_pd != cp_pd) {
        // the two certificates must agree; a mismatch is a serious defect
        std::printf("VERDICTS DISAGREE: kernel %d vs cp %d\n", kernel_pd, cp_pd);
        return kExitViolation;
    }
    std::printf("verdicts agree: %s\n", kernel_pd ? "positive definite" : "not positive definite");
    return kExitOk;
}

int cmd_gr(const std::string& coeff_path, const std::string& out_path, double tol) {
    CoeffHandle coeff;
    if (auto status = tcsd_coeff_load(coeff_path.c_str(), tol, &coeff.ptr))
        return report_error(status);
    RepHandle rep;
    if (auto status = tcsd_gr_reconstruct(coeff.ptr, tol, &rep.ptr)) {
        if (status == TCSD_ERR_PRECONDITION) {
            std::fprintf(stderr, "not positive definite: %s\n", tcsd_last_error());
            return kExitViolation;
        }
        return report_error(status);
    }
    int dim = 0;
    tcsd_rep_dim(rep.ptr, &dim);
    if (auto status = tcsd_rep_save(rep.ptr, out_path.c_str())) return report_error(status);
    std::printf("reconstructed module dimension %d, wrote %s\n", dim, out_path.c_str());
    return kExitOk;
}

int cmd_coeff(const std::string& rep_path, int x_index, int y_index, const std::string& out_path,
              double tol) {
    RepHandle rep;
    if (auto status = tcsd_rep_load(rep_path.c_str(), tol, &rep.ptr)) return report_error(status);
    CoeffHandle coeff;
    if (auto status = tcsd_rep_coefficient(rep.ptr, x_index, y_index, &coeff.ptr))
        return report_error(status);
    if (auto status = tcsd_coeff_save(coeff.ptr, out_path.c_str())) return report_error(status);
    std::printf("wrote %s\n", out_path.c_str());
    return kExitOk;
}

int cmd_suite(const std::vector<std::string>& system_paths, std::uint64_t seed, double tol,
              const std::string& report_path, bool print_json) {
    std::vector<const char*> paths;
    paths.reserve(system_paths.size());
    for (const auto& p : system_paths) paths.push_back(p.c_str());
    char* report_text = nullptr;
    int failures = 0;
    auto status = tcsd_suite_run(paths.empty() ? nullptr : paths.data(),
                                 static_cast<int>(paths.size()), seed, tol,
                                 report_path.empty() ? nullptr : report_path.c_str(),
                                 &report_text, &failures);
    if (status) return report_error(status);
    if (print_json) {
        std::printf("%s\n", report_text);
    } else {
        // one line per item; the machine-readable report goes to --json-report
        auto doc = nlohmann::json::parse(report_text);
        for (const auto& item : doc.at("items"))
            std::printf("%s %-10s %-28s %s\n",
                        item.at("pass").get<bool>() ? "PASS" : "FAIL",
                        item.at("system").get<std::string>().c_str(),
                        item.at("name").get<std::string>().c_str(),
                        item.at("detail").get<std::string>().c_str());
    }
    tcsd_string_free(report_text);
    if (!report_path.empty()) std::printf("report written to %s\n", report_path.c_str());
    if (failures > 0) {
        std::printf("FAIL: %d item(s)\n", failures);
        return kExitViolation;
    }
    std::printf("all suite items passed\n");
    return kExitOk;
}

int cmd_corpus(const std::string& dir) {
    const char* names[] = {"trivial", "pauli", "flip", "m2_inner", "s3"};
    for (const char* name : names) {
        SystemHandle system;
        if (auto status = tcsd_system_builtin(name, &system.ptr)) return report_error(status);
        std::string path = dir + "/" + name + ".json";
        if (auto status = tcsd_system_save(system.ptr, path.c_str())) return report_error(status);
        std::printf("wrote %s\n", path.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted C*-dynamical systems: crossed products, coefficient algebras, "
                 "positivity and reconstruction"};
    app.require_subcommand(1);
    double tol_flag = 0.0;
    app.add_option("--tol", tol_flag, "tolerance (default 1e-9; TCSD_TOL overrides)");

    std::string path, export_path, out_path, system_path;
    bool identity = false;
    int x_index = 0, y_index = 0;
    std::uint64_t seed = 7;
    std::vector<std::string> suite_systems;
    std::string report_path;

    auto* verify = app.add_subcommand("verify", "validate a system file");
    verify->add_option("path", path, "system file")->required();

    auto* crossed = app.add_subcommand("crossed-product", "dimension, center and block data");
    crossed->add_option("path", path, "system file")->required();
    crossed->add_option("--export", export_path, "write the concrete matrices");

    auto* pd = app.add_subcommand("pd-check", "positivity kernel and multiplier certificates");
    pd->add_option("path", path, "coefficient file")->required(false);
    pd->add_flag("--identity", identity, "check the identity coefficient map instead");
    pd->add_option("--system", system_path, "system file (with --identity)");
    std::string multiplier_path;
    pd->add_option("--export-multiplier", multiplier_path, "write the multiplier matrix here");

    auto* gr = app.add_subcommand("gr", "reconstruct a representation from a positive map");
    gr->add_option("path", path, "coefficient file")->required();
    gr->add_option("-o,--output", out_path, "representation file to write")->required();

    auto* coeff = app.add_subcommand("coeff", "coefficient map of two vectors");
    coeff->add_option("path", path, "representation file")->required();
    coeff->add_option("-x", x_index, "first vector index")->required();
    coeff->add_option("-y", y_index, "second vector index")->required();
    coeff->add_option("-o,--output", out_path, "coefficient file to write")->required();

    auto* suite = app.add_subcommand("suite", "run the property battery");
    suite->add_option("systems", suite_systems, "system files (default: built-in corpus)");
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--json-report", report_path, "write the JSON report here");
    bool suite_json_stdout = false;
    suite->add_flag("--json", suite_json_stdout, "print the JSON report instead of lines");

    auto* corpus = app.add_subcommand("corpus", "export the built-in corpus as files");
    std::string corpus_dir = ".";
    corpus->add_option("dir", corpus_dir, "target directory");

    CLI11_PARSE(app, argc, argv);
    double tol = tolerance_from(tol_flag);

    if (verify->parsed()) return cmd_verify(path, tol);
    if (crossed->parsed()) return cmd_crossed(path, export_path, tol);
    if (pd->parsed()) {
        if (identity && system_path.empty()) {
            std::fprintf(stderr, "error: --identity needs --system\n");
            return kExitError;
        }
        if (!identity && path.empty()) {
            std::fprintf(stderr, "error: need a coefficient file or --identity\n");
            return kExitError;
        }
        return cmd_pd_check(path, system_path, identity, multiplier_path, tol);
    }
    if (gr->parsed()) return cmd_gr(path, out_path, tol);
    if (coeff->parsed()) return cmd_coeff(path, x_index, y_index, out_path, tol);
    if (suite->parsed())
        return cmd_suite(suite_systems, seed, tol, report_path, suite_json_stdout);
    if (corpus->parsed()) return cmd_corpus(corpus_dir);
    return kExitError;
}
