#include "core/timestep.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/model.hpp"
#include "core/riemann.hpp"

namespace cosmofv {

namespace {

// Largest |lambda| over the interfaces of one periodic line of velocities.
double max_interface_speed(const std::vector<double>& u, const FluidParams& par) {
    const std::size_t n = u.size();
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const WaveSpeeds s = wave_speeds(u[i], u[(i + 1) % n], par);
        m = std::max({m, -s.lam_l, s.lam_r});
    }
    return m;
}

double apply_limits(double dt, double t, const StepControl& ctrl, bool contracting) {
    dt = std::min(dt, ctrl.dt_cap);
    if (dt < ctrl.dt_floor) throw RunAbort("time step collapsed below dt_floor");
    if (contracting) dt = std::min(dt, ctrl.contracting_guard * std::abs(t));
    dt = std::min(dt, ctrl.t_end - t);
    if (!(dt > 0.0)) throw RunAbort("non-positive time step");
    return dt;
}

}  // namespace

double compute_dt(const Grid1D& grid, const StepControl& ctrl, const FluidParams& par,
                  bool contracting) {
    std::vector<double> u(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        try {
            u[i] = cons_to_prim_1d(grid.cells[i], par).u;
        } catch (const RecoveryError& e) {
            throw RunAbort("primitive recovery failed at cell " + std::to_string(i) + ": " +
                           e.what());
        }
    }
    const double speed = max_interface_speed(u, par);
    if (!(speed > 0.0)) throw RunAbort("no positive wave speed on the grid");
    return apply_limits(ctrl.cfl * grid.dx / speed, grid.t, ctrl, contracting);
}

double compute_dt(const Grid2D& grid, const StepControl& ctrl, const FluidParams& par,
                  bool contracting) {
    std::vector<Prim2> prim(grid.cells.size());
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        try {
            prim[c] = cons_to_prim_2d(grid.cells[c], par);
        } catch (const RecoveryError& e) {
            throw RunAbort("primitive recovery failed at cell (" + std::to_string(c % grid.nx) +
                           ", " + std::to_string(c / grid.nx) + "): " + e.what());
        }
    }
    std::vector<double> line(std::max(grid.nx, grid.ny));
    double sx = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
        line.resize(grid.nx);
        for (int i = 0; i < grid.nx; ++i) line[i] = prim[grid.idx(i, j)].u;
        sx = std::max(sx, max_interface_speed(line, par));
    }
    double sy = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        line.resize(grid.ny);
        for (int j = 0; j < grid.ny; ++j) line[j] = prim[grid.idx(i, j)].v;
        sy = std::max(sy, max_interface_speed(line, par));
    }
    if (!(sx > 0.0) || !(sy > 0.0)) throw RunAbort("no positive wave speed on the grid");
    const double dt = ctrl.cfl * std::min(grid.dx / sx, grid.dy / sy);
    return apply_limits(dt, grid.t, ctrl, contracting);
}

const char* to_string(Integrator m) {
    switch (m) {
        case Integrator::forward_euler: return "euler";
        case Integrator::rk4: return "rk4";
        case Integrator::ssp_rk3: return "ssprk3";
    }
    return "?";
}

}  // namespace cosmofv
