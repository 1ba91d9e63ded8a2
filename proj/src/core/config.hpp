// Line-oriented `key = value` configuration files: parsing, per-test defaults,
// validation against the module invariants, and the mapping to a RunSpec.
#ifndef COSMOFV_CONFIG_HPP
#define COSMOFV_CONFIG_HPP

#include <string>

#include "core/driver.hpp"

namespace cosmofv {

// Fully resolved and validated configuration. Defaults come from the selected
// built-in test; explicit keys override them.
struct Config {
    std::string test;
    int dim = 1;
    int n = 100;
    int ny = 0;
    FluidParams params;
    Regime regime = Regime::static_bg;
    double t0 = 1.0;
    double t_end = 1.0;
    std::vector<double> snapshots;
    SchemeKind scheme = SchemeKind::hll;
    int space_order = 2;
    Integrator integrator = Integrator::rk4;
    BProfile b_profile = BProfile::flat;
    double cfl = 0.3;
    bool allow_cfl_above_half = false;
    SchemeParams numerics;  // theta, alpha_src, m, M, literal flags
    double c_t = 0.5;
    double dt_floor = 0.0;
    double dt_cap = 0.0;  // 0 means unlimited
    int format_version = 1;
};

// Throws ConfigError (with the offending line number) for unknown keys,
// malformed values, duplicates, missing `test`, or invariant violations.
Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

RunSpec make_run_spec(const Config& cfg);

// One-line listing of every built-in test with its defaults.
std::string describe_builtin_tests();

}  // namespace cosmofv

#endif
