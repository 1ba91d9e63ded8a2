#include "core/initial_conditions.hpp"

#include <cmath>

#include "core/error.hpp"

namespace cosmofv {

namespace {

std::vector<BuiltinTest> make_catalog() {
    using kv = std::vector<std::pair<std::string, std::string>>;
    std::vector<BuiltinTest> tests;

    tests.push_back({"expanding_riemann", 1,
                     "1D density jump 1 / 0.9 at x = 0.5, zero velocity, expanding background",
                     kv{{"regime", "expanding"}, {"N", "100"}, {"eps", "1"}, {"k", "0.7"},
                        {"kappa", "2"}, {"cfl", "0.3"}, {"t_end", "1.1"}, {"scheme", "hll"},
                        {"space_order", "2"}, {"integrator", "rk4"}, {"b_profile", "flat"}}});

    tests.push_back({"oscillatory_density", 1,
                     "1D oscillatory density 1 + sin(6 pi x / 7) cos(7 pi x / 2), zero velocity",
                     kv{{"regime", "expanding"}, {"N", "500"}, {"eps", "1"}, {"k", "0.5"},
                        {"kappa", "2"}, {"cfl", "0.3"}, {"t_end", "50"},
                        {"snapshots", "2,5,10,50"}, {"scheme", "hll"}, {"space_order", "2"},
                        {"integrator", "rk4"}, {"b_profile", "flat"}}});

    tests.push_back({"steady_b2", 1,
                     "1D steady state rho = b^2, u = 0 on a static background",
                     kv{{"regime", "static"}, {"N", "100"}, {"eps", "1"}, {"k", "0.5"},
                        {"cfl", "0.6"}, {"allow_cfl_above_half", "true"}, {"t_end", "10"},
                        {"snapshots", "10"}, {"scheme", "wb_hll"}, {"space_order", "2"},
                        {"integrator", "rk4"}, {"b_profile", "sin2pi"}}});

    tests.push_back({"steady_b2_perturbed", 1,
                     "1D steady state rho = b^2 with a 0.02 cos(30 pi x) bump on [0.2, 0.7]",
                     kv{{"regime", "static"}, {"N", "100"}, {"eps", "1"}, {"k", "0.5"},
                        {"cfl", "0.6"}, {"allow_cfl_above_half", "true"}, {"t_end", "10"},
                        {"snapshots", "10"}, {"scheme", "wb_hll"}, {"space_order", "2"},
                        {"integrator", "rk4"}, {"b_profile", "sincos"}}});

    tests.push_back({"uniform", 1, "1D uniform state rho = 1, u = 0",
                     kv{{"regime", "static"}, {"N", "100"}, {"eps", "1"}, {"k", "0.5"},
                        {"cfl", "0.3"}, {"t_end", "1"}, {"scheme", "hll"}, {"space_order", "2"},
                        {"integrator", "rk4"}, {"b_profile", "flat"}}});

    tests.push_back({"gaussian_2d", 2,
                     "2D Gaussian density bump 0.1 + 0.1 exp(-20 r^2), zero velocity",
                     kv{{"regime", "expanding"}, {"N", "100"}, {"Ny", "100"}, {"eps", "1"},
                        {"k", "0.5"}, {"kappa", "2"}, {"cfl", "0.5"},
                        {"allow_cfl_above_half", "true"}, {"t_end", "60"},
                        {"snapshots", "8,16,50,60"}, {"scheme", "hll"}, {"space_order", "2"},
                        {"integrator", "ssprk3"}, {"b_profile", "flat"}}});

    tests.push_back({"trig_2d", 2,
                     "2D transpose-symmetric trigonometric density over a Gaussian b(x,y)",
                     kv{{"regime", "static"}, {"N", "100"}, {"Ny", "100"}, {"eps", "1"},
                        {"k", "0.5"}, {"cfl", "0.5"}, {"allow_cfl_above_half", "true"},
                        {"t_end", "60"}, {"snapshots", "8,16,50,60"}, {"scheme", "wb_hll"},
                        {"space_order", "2"}, {"integrator", "ssprk3"},
                        {"b_profile", "gauss2d"}}});

    return tests;
}

}  // namespace

const std::vector<BuiltinTest>& builtin_tests() {
    static const std::vector<BuiltinTest> catalog = make_catalog();
    return catalog;
}

const BuiltinTest* find_builtin(const std::string& id) {
    for (const auto& t : builtin_tests())
        if (t.id == id) return &t;
    return nullptr;
}

Prim1 sample_ic_1d(const std::string& id, double x, const Geometry& geom) {
    if (id == "expanding_riemann") return {x <= 0.5 ? 1.0 : 0.9, 0.0};
    if (id == "oscillatory_density")
        return {1.0 + std::sin(6.0 * M_PI * x / 7.0) * std::cos(3.5 * M_PI * x), 0.0};
    if (id == "steady_b2") {
        const double b = geom.b(x);
        return {b * b, 0.0};
    }
    if (id == "steady_b2_perturbed") {
        const double b = geom.b(x);
        double rho = b * b;
        if (x >= 0.2 && x <= 0.7) rho += 0.02 * std::cos(30.0 * M_PI * x);
        return {rho, 0.0};
    }
    if (id == "uniform") return {1.0, 0.0};
    throw DomainError("unknown 1D initial condition: " + id);
}

Prim2 sample_ic_2d(const std::string& id, double x, double y, const Geometry&) {
    if (id == "gaussian_2d") {
        const double rx = x - 0.5;
        const double ry = y - 0.5;
        return {0.1 + 0.1 * std::exp(-20.0 * rx * rx - 20.0 * ry * ry), 0.0, 0.0};
    }
    if (id == "trig_2d") {
        const double p = std::sin(2.0 * M_PI * x) * std::cos(2.0 * M_PI * x) *
                         std::sin(2.0 * M_PI * y) * std::cos(2.0 * M_PI * y);
        return {1.0 + 0.01 * p, 0.0, 0.0};
    }
    throw DomainError("unknown 2D initial condition: " + id);
}

}  // namespace cosmofv
