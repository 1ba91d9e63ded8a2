#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "core/diagnostics.hpp"
#include "core/error.hpp"

namespace cosmofv {

namespace {

void report_snapshot(const SnapshotData& s, const RunSpec& spec, std::ostream& os) {
    const std::vector<double>& rho = *s.column("rho");
    const std::vector<double>& u = *s.column("u");
    const std::vector<double>* v = s.column("v");

    const auto [rho_min, rho_max] = std::minmax_element(rho.begin(), rho.end());
    const auto [u_min, u_max] = std::minmax_element(u.begin(), u.end());

    std::vector<double> speed(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        speed[i] = v ? std::sqrt(u[i] * u[i] + (*v)[i] * (*v)[i]) : std::abs(u[i]);

    // Fit the (rescaled when available) density against the b^2 family.
    const std::vector<double>& fit_rho = s.column("rho_tilde") ? *s.column("rho_tilde") : rho;
    std::vector<double> b2(rho.size());
    const std::vector<double>& x = *s.column("x");
    const std::vector<double>* y = s.column("y");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double b = spec.geom.b(x[i], y ? (*y)[i] : 0.0);
        b2[i] = b * b;
    }
    const SteadyFit fit = steady_residual(fit_rho, speed, b2);

    const double cell = s.dim == 2 ? s.dx * s.dy : s.dx;
    double mass = 0.0;
    const std::vector<double>* u0 = s.column("rho");
    for (double r : *u0) mass += r;
    mass *= cell;

    os << "t = " << format_g17(s.t) << "\n";
    os << "  rho in [" << format_g17(*rho_min) << ", " << format_g17(*rho_max) << "]\n";
    os << "  u in [" << format_g17(*u_min) << ", " << format_g17(*u_max) << "]\n";
    if (v) {
        const auto [v_min, v_max] = std::minmax_element(v->begin(), v->end());
        os << "  v in [" << format_g17(*v_min) << ", " << format_g17(*v_max) << "]\n";
    }
    os << "  integral of rho = " << format_g17(mass) << "\n";
    os << "  c_fit = " << format_g17(fit.c_fit)
       << ", steady_residual = " << format_g17(fit.residual) << "\n";
}

}  // namespace

void write_report(const RunResult& result, const RunSpec& spec, std::ostream& os) {
    os << "# cosmofv report\n";
    for (const auto& [k, v] : spec.echo) os << "# spec " << k << " = " << v << "\n";
    os << "steps = " << result.steps << "\n";
    for (const auto& s : result.snapshots) report_snapshot(s, spec, os);
    os << "final state:\n";
    report_snapshot(result.final, spec, os);
}

void write_run_result(const RunResult& result, const RunSpec& spec, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir);

    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "snap_%04zu.csv", i);
        write_snapshot_file(result.snapshots[i], out_dir + "/" + name);
    }
    write_snapshot_file(result.final, out_dir + "/final.csv");

    std::ofstream os(out_dir + "/report.txt");
    if (!os) throw IoError("cannot open report for writing");
    write_report(result, spec, os);
}

}  // namespace cosmofv
