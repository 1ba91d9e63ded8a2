#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>

#include "core/driver.hpp"
#include "core/error.hpp"
#include "core/initial_conditions.hpp"
#include "core/model.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cosmofv;

namespace {

const FluidParams par_half{1.0, 0.5, 2.0};

RunSpec static_oscillatory(int n) {
    RunSpec spec;
    spec.dim = 1;
    spec.n = n;
    spec.params = par_half;
    spec.geom.regime = Regime::static_bg;
    spec.method = Integrator::rk4;
    spec.scheme.scheme = SchemeKind::hll;
    spec.scheme.space_order = 2;
    spec.ctrl.cfl = 0.3;
    spec.t0 = 1.0;
    spec.t_end = 1.2;
    spec.test_id = "oscillatory_density";
    return spec;
}

std::string serialize(const SnapshotData& s) {
    std::ostringstream os;
    write_snapshot(s, os);
    return os.str();
}

}  // namespace

TEST_CASE("zero-length run echoes the initial data") {
    RunSpec spec = static_oscillatory(50);
    spec.t_end = spec.t0;
    const RunResult res = run(spec);
    CHECK(res.steps == 0);
    CHECK(res.snapshots.empty());
    const Grid1D g = make_initial_grid_1d(spec);
    CHECK(res.final == make_snapshot(g, spec));
}

TEST_CASE("runs are deterministic") {
    RunSpec spec = static_oscillatory(64);
    spec.t_end = 1.3;
    spec.snapshot_times = {1.1, 1.3};
    const RunResult a = run(spec);
    const RunResult b = run(spec);
    REQUIRE(a.snapshots.size() == b.snapshots.size());
    for (std::size_t i = 0; i < a.snapshots.size(); ++i)
        CHECK(serialize(a.snapshots[i]) == serialize(b.snapshots[i]));
    CHECK(serialize(a.final) == serialize(b.final));
}

TEST_CASE("snapshot scheduling") {
    RunSpec spec = static_oscillatory(50);
    spec.t_end = 1.5;
    spec.snapshot_times = {1.05, 1.2, 1.5};
    const RunResult res = run(spec);
    REQUIRE(res.snapshots.size() == 3);
    double prev = spec.t0;
    for (std::size_t i = 0; i < 3; ++i) {
        // Emitted at the first step time at or past the request, never
        // outside (t0, t_end].
        CHECK(res.snapshots[i].t >= spec.snapshot_times[i]);
        CHECK(res.snapshots[i].t > spec.t0);
        CHECK(res.snapshots[i].t <= spec.t_end);
        CHECK(res.snapshots[i].t >= prev);
        prev = res.snapshots[i].t;
    }
    CHECK(res.final.t == spec.t_end);
}

TEST_CASE("translation equivariance on a flat background") {
    RunSpec spec = static_oscillatory(40);
    const int shift = 7;

    const Grid1D base = make_initial_grid_1d(spec);
    Grid1D rotated = base;
    for (int i = 0; i < base.n; ++i) rotated.cells[(i + shift) % base.n] = base.cells[i];

    const RunResult res_base = run_from(spec, base);
    const RunResult res_rot = run_from(spec, rotated);

    const std::vector<double>& rho_base = *res_base.final.column("rho");
    const std::vector<double>& rho_rot = *res_rot.final.column("rho");
    const std::vector<double>& u_base = *res_base.final.column("u");
    const std::vector<double>& u_rot = *res_rot.final.column("u");
    for (int i = 0; i < base.n; ++i) {
        CHECK(rho_rot[(i + shift) % base.n] == rho_base[i]);
        CHECK(u_rot[(i + shift) % base.n] == u_base[i]);
    }
}

TEST_CASE("wb scheme reduces to the plain scheme on flat geometry") {
    // At first order the schemes differ only through the interface source and
    // the intermediate-state split, both of which vanish on a flat profile.
    // (At second order they remain distinct: the wb reconstruction blends
    // toward first order near discrete steady states.)
    RunSpec spec = static_oscillatory(60);
    spec.t_end = 1.4;
    spec.scheme.space_order = 1;
    const RunResult plain = run(spec);
    RunSpec wb = spec;
    wb.scheme.scheme = SchemeKind::wb_hll;
    const RunResult balanced = run(wb);
    const std::vector<double>& rho_a = *plain.final.column("rho");
    const std::vector<double>& rho_b = *balanced.final.column("rho");
    const std::vector<double>& u_a = *plain.final.column("u");
    const std::vector<double>& u_b = *balanced.final.column("u");
    for (int i = 0; i < spec.n; ++i) {
        CHECK(std::abs(rho_a[i] - rho_b[i]) <= 1e-12);
        CHECK(std::abs(u_a[i] - u_b[i]) <= 1e-12);
    }
}

TEST_CASE("aborts carry context") {
    SUBCASE("non-invertible cell") {
        RunSpec spec = static_oscillatory(8);
        Grid1D g = make_initial_grid_1d(spec);
        g.cells[3] = {1.0, 10.0};  // negative discriminant
        CHECK_THROWS_WITH_AS(run_from(spec, g),
                             doctest::Contains("primitive recovery failed at cell 3"), RunAbort);
    }

    SUBCASE("dt floor") {
        RunSpec spec = static_oscillatory(8);
        spec.ctrl.dt_floor = 10.0;
        CHECK_THROWS_AS(run(spec), RunAbort);
    }
}

TEST_CASE("snapshot columns by regime") {
    RunSpec spec = static_oscillatory(16);
    spec.t_end = spec.t0;

    SUBCASE("static 1D: x, rho, u plus identity-rescaled fields") {
        const RunResult res = run(spec);
        REQUIRE(res.final.columns.size() == 5);
        CHECK(res.final.columns[3].first == "rho_tilde");
        CHECK(*res.final.column("rho_tilde") == *res.final.column("rho"));
        CHECK(*res.final.column("u_tilde") == *res.final.column("u"));
    }

    SUBCASE("contracting 1D carries the velocity-distance indicator") {
        spec.geom.regime = Regime::contracting;
        spec.t0 = -1.0;
        spec.t_end = -0.5;
        spec.ctrl.cfl = 0.3;
        const RunResult res = run(spec);
        REQUIRE(res.final.columns.size() == 5);
        CHECK(res.final.columns[4].first == "vel_dist");
        const std::vector<double>& u = *res.final.column("u");
        const std::vector<double>& dist = *res.final.column("vel_dist");
        const std::vector<double>& rho = *res.final.column("rho");
        const std::vector<double>& rho_t = *res.final.column("rho_tilde");
        const double scale = std::pow(0.5, 2.0 * par_half.kappa);
        for (std::size_t i = 0; i < u.size(); ++i) {
            CHECK(dist[i] ==
                  std::min({std::abs(u[i] + 1.0), std::abs(u[i]), std::abs(u[i] - 1.0)}));
            CHECK(rho_t[i] == doctest::Approx(scale * rho[i]).epsilon(1e-15));
        }
    }
}

TEST_CASE("2D flat state on flat geometry is exactly stationary") {
    RunSpec spec;
    spec.dim = 2;
    spec.n = 12;
    spec.ny = 12;
    spec.params = par_half;
    spec.geom.regime = Regime::static_bg;
    spec.method = Integrator::ssp_rk3;
    spec.scheme.scheme = SchemeKind::hll;
    spec.ctrl.cfl = 0.4;
    spec.t0 = 1.0;
    spec.t_end = 1.5;
    spec.custom_ic_2d = [](double, double) { return Prim2{0.7, 0.0, 0.0}; };
    const RunResult res = run(spec);
    CHECK(res.steps > 0);
    for (double r : *res.final.column("rho")) CHECK(r == 0.7);
    for (double u : *res.final.column("u")) CHECK(u == 0.0);
    for (double v : *res.final.column("v")) CHECK(v == 0.0);
}

TEST_CASE("2D steady state is preserved by the wb scheme") {
    RunSpec spec;
    spec.dim = 2;
    spec.n = 24;
    spec.ny = 24;
    spec.params = par_half;
    spec.geom.regime = Regime::static_bg;
    spec.geom.b_kind = BProfile::gauss_2d;
    spec.method = Integrator::ssp_rk3;
    spec.scheme.scheme = SchemeKind::wb_hll;
    spec.scheme.space_order = 2;
    spec.ctrl.cfl = 0.4;
    spec.t0 = 1.0;
    spec.t_end = 2.0;
    const Geometry geom = spec.geom;
    spec.custom_ic_2d = [geom](double x, double y) {
        const double b = geom.b(x, y);
        return Prim2{1.5 * b * b, 0.0, 0.0};
    };
    const Grid2D initial = make_initial_grid_2d(spec);
    const SnapshotData start = make_snapshot(initial, spec);
    const RunResult res = run_from(spec, initial);
    const std::vector<double>& rho0 = *start.column("rho");
    const std::vector<double>& rho1 = *res.final.column("rho");
    const std::vector<double>& u1 = *res.final.column("u");
    const std::vector<double>& v1 = *res.final.column("v");
    for (std::size_t i = 0; i < rho0.size(); ++i) {
        CHECK(std::abs(rho1[i] - rho0[i]) <= 1e-12);
        CHECK(std::abs(u1[i]) <= 1e-12);
        CHECK(std::abs(v1[i]) <= 1e-12);
    }
}

TEST_CASE("y-invariant 2D run matches the 1D run per cell") {
    RunSpec spec1 = static_oscillatory(48);
    spec1.method = Integrator::ssp_rk3;
    spec1.geom.regime = Regime::expanding;
    spec1.geom.kappa = 2.0;
    spec1.t_end = 1.5;
    const RunResult res1 = run(spec1);

    RunSpec spec2 = spec1;
    spec2.dim = 2;
    spec2.ny = 6;
    spec2.test_id.clear();
    const Geometry geom = spec2.geom;
    spec2.custom_ic_2d = [geom](double x, double) {
        const Prim1 p = sample_ic_1d("oscillatory_density", x, geom);
        return Prim2{p.rho, p.u, 0.0};
    };
    const RunResult res2 = run(spec2);

    const std::vector<double>& rho1 = *res1.final.column("rho");
    const std::vector<double>& u1 = *res1.final.column("u");
    const std::vector<double>& rho2 = *res2.final.column("rho");
    const std::vector<double>& u2 = *res2.final.column("u");
    const std::vector<double>& v2 = *res2.final.column("v");
    CHECK(res2.final.t == res1.final.t);
    for (int j = 0; j < spec2.ny; ++j)
        for (int i = 0; i < spec2.n; ++i) {
            const std::size_t c = std::size_t(j) * spec2.n + i;
            CHECK(std::abs(rho2[c] - rho1[i]) <= 1e-12);
            CHECK(std::abs(u2[c] - u1[i]) <= 1e-12);
            CHECK(v2[c] == 0.0);
        }
}

TEST_CASE("transpose-symmetric 2D data stays symmetric") {
    RunSpec spec;
    spec.dim = 2;
    spec.n = 24;
    spec.ny = 24;
    spec.params = par_half;
    spec.geom.regime = Regime::expanding;
    spec.geom.kappa = 2.0;
    spec.method = Integrator::ssp_rk3;
    spec.scheme.scheme = SchemeKind::hll;
    spec.scheme.space_order = 2;
    spec.ctrl.cfl = 0.4;
    spec.t0 = 1.0;
    spec.t_end = 1.6;
    spec.test_id = "trig_2d";
    const RunResult res = run(spec);
    const std::vector<double>& rho = *res.final.column("rho");
    const std::vector<double>& u = *res.final.column("u");
    const std::vector<double>& v = *res.final.column("v");
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.n; ++i) {
            const std::size_t a = std::size_t(j) * spec.n + i;
            const std::size_t b = std::size_t(i) * spec.n + j;
            CHECK(std::abs(rho[a] - rho[b]) <= 1e-11);
            CHECK(std::abs(u[a] - v[b]) <= 1e-11);
        }
}
