// Command-line front end. Talks to the engine exclusively through the shared
// library's C interface.
//
// Subcommands:
//   run <config> [--out DIR]                       run a simulation, write CSV + report
//   list-tests                                     show the built-in test catalog
//   compare <snapA> <snapB>                        L1/Linf difference per field
//   convergence <config> --grids 50,100,... --reference N
//                                                  grid-refinement study against a
//                                                  fine-grid reference
//
// Exit codes: 0 success, 2 configuration error, 3 runtime abort, 1 otherwise.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cosmofv.h"

namespace {

char err_buf[1024];

int status_to_exit(cfv_status st) {
    switch (st) {
        case CFV_OK: return 0;
        case CFV_ERR_CONFIG: return 2;
        case CFV_ERR_RUNTIME: return 3;
        default: return 1;
    }
}

int fail(cfv_status st, const char* what) {
    std::fprintf(stderr, "error (%s): %s\n", what, err_buf);
    return status_to_exit(st);
}

using config_ptr = std::unique_ptr<cfv_config, decltype(&cfv_config_free)>;
using result_ptr = std::unique_ptr<cfv_result, decltype(&cfv_result_free)>;
using snapshot_ptr = std::unique_ptr<cfv_snapshot, decltype(&cfv_snapshot_free)>;

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    cfv_config* cfg = nullptr;
    if (cfv_status st = cfv_config_parse_file(config_path.c_str(), &cfg, err_buf, sizeof err_buf))
        return fail(st, "config");
    config_ptr cfg_guard(cfg, cfv_config_free);

    cfv_result* res = nullptr;
    if (cfv_status st = cfv_run(cfg, &res, err_buf, sizeof err_buf)) return fail(st, "run");
    result_ptr res_guard(res, cfv_result_free);

    if (cfv_status st = cfv_result_write(res, out_dir.c_str(), err_buf, sizeof err_buf))
        return fail(st, "write");

    const cfv_snapshot* fin = cfv_result_final(res);
    std::printf("wrote %zu snapshot(s) + final state (t = %.17g) to %s\n",
                cfv_result_snapshot_count(res), cfv_snapshot_time(fin), out_dir.c_str());
    return 0;
}

int cmd_list_tests() {
    for (size_t i = 0; i < cfv_test_count(); ++i)
        std::printf("%-22s %s\n", cfv_test_id(i), cfv_test_summary(i));
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    cfv_snapshot* a = nullptr;
    if (cfv_status st = cfv_snapshot_load(path_a.c_str(), &a, err_buf, sizeof err_buf))
        return fail(st, path_a.c_str());
    snapshot_ptr a_guard(a, cfv_snapshot_free);
    cfv_snapshot* b = nullptr;
    if (cfv_status st = cfv_snapshot_load(path_b.c_str(), &b, err_buf, sizeof err_buf))
        return fail(st, path_b.c_str());
    snapshot_ptr b_guard(b, cfv_snapshot_free);

    std::printf("%-10s %-24s %-24s\n", "field", "L1", "Linf");
    for (const char* field : {"rho", "u", "v"}) {
        double l1 = 0.0, linf = 0.0;
        if (cfv_compare(a, b, field, &l1, &linf, err_buf, sizeof err_buf) != CFV_OK)
            continue;  // field absent (e.g. v in 1D)
        std::printf("%-10s %-24.17g %-24.17g\n", field, l1, linf);
    }
    return 0;
}

int cmd_convergence(const std::string& config_path, const std::vector<int>& grids,
                    int reference_n) {
    auto run_with_n = [&](int n, cfv_result** out) -> cfv_status {
        cfv_config* cfg = nullptr;
        if (cfv_status st = cfv_config_parse_file(config_path.c_str(), &cfg, err_buf,
                                                  sizeof err_buf))
            return st;
        config_ptr cfg_guard(cfg, cfv_config_free);
        const std::string n_str = std::to_string(n);
        if (cfv_status st = cfv_config_set(cfg, "N", n_str.c_str(), err_buf, sizeof err_buf))
            return st;
        return cfv_run(cfg, out, err_buf, sizeof err_buf);
    };

    cfv_result* ref = nullptr;
    std::printf("running reference at N = %d ...\n", reference_n);
    if (cfv_status st = run_with_n(reference_n, &ref)) return fail(st, "reference");
    result_ptr ref_guard(ref, cfv_result_free);
    const cfv_snapshot* ref_final = cfv_result_final(ref);

    std::printf("%-8s %-24s %-10s %-24s %-10s\n", "N", "L1(rho)", "order", "L1(u)", "order");
    double prev_rho = 0.0, prev_u = 0.0;
    for (size_t i = 0; i < grids.size(); ++i) {
        cfv_result* res = nullptr;
        if (cfv_status st = run_with_n(grids[i], &res)) return fail(st, "grid run");
        result_ptr res_guard(res, cfv_result_free);
        double l1_rho = 0.0, linf = 0.0, l1_u = 0.0;
        if (cfv_status st = cfv_compare(cfv_result_final(res), ref_final, "rho", &l1_rho, &linf,
                                        err_buf, sizeof err_buf))
            return fail(st, "compare rho");
        if (cfv_status st = cfv_compare(cfv_result_final(res), ref_final, "u", &l1_u, &linf,
                                        err_buf, sizeof err_buf))
            return fail(st, "compare u");
        if (i == 0)
            std::printf("%-8d %-24.17g %-10s %-24.17g %-10s\n", grids[i], l1_rho, "-", l1_u, "-");
        else {
            const double ratio = static_cast<double>(grids[i]) / grids[i - 1];
            const double ord_rho = std::log(prev_rho / l1_rho) / std::log(ratio);
            const double ord_u = std::log(prev_u / l1_u) / std::log(ratio);
            std::printf("%-8d %-24.17g %-10.3f %-24.17g %-10.3f\n", grids[i], l1_rho, ord_rho,
                        l1_u, ord_u);
        }
        prev_rho = l1_rho;
        prev_u = l1_u;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cosmofv: well-balanced finite-volume flows on cosmological backgrounds"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", snap_a, snap_b;
    std::vector<int> grids{50, 100, 200, 400};
    int reference_n = 5000;

    CLI::App* run_cmd = app.add_subcommand("run", "run a simulation from a config file");
    run_cmd->add_option("config", config_path, "config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory (default: out)");

    app.add_subcommand("list-tests", "list the built-in test problems");

    CLI::App* cmp_cmd = app.add_subcommand("compare", "L1/Linf difference of two snapshots");
    cmp_cmd->add_option("snapA", snap_a, "first snapshot")->required();
    cmp_cmd->add_option("snapB", snap_b, "second snapshot")->required();

    CLI::App* conv_cmd =
        app.add_subcommand("convergence", "grid refinement study against a reference run");
    conv_cmd->add_option("config", config_path, "config file")->required();
    conv_cmd->add_option("--grids", grids, "grid sizes")->delimiter(',');
    conv_cmd->add_option("--reference", reference_n, "reference grid size");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) return cmd_run(config_path, out_dir);
    if (app.get_subcommand("list-tests")->parsed()) return cmd_list_tests();
    if (cmp_cmd->parsed()) return cmd_compare(snap_a, snap_b);
    if (conv_cmd->parsed()) return cmd_convergence(config_path, grids, reference_n);
    return 1;
}
