#include "core/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/diagnostics.hpp"
#include "core/error.hpp"
#include "core/initial_conditions.hpp"
#include "core/model.hpp"
#include "core/reconstruction.hpp"
#include "core/riemann.hpp"
#include "core/wb_source.hpp"

namespace cosmofv {

const char* to_string(SchemeKind s) {
    return s == SchemeKind::hll ? "hll" : "wb_hll";
}

void SweepBuffers::resize(std::size_t n) {
    for (auto* v : {&rho, &un, &ut, &logb, &srho, &sun, &sut, &phi, &rho_l, &rho_r, &un_l,
                    &un_r, &ut_l, &ut_r, &shat_detect, &shat})
        v->resize(n);
    flux.resize(n);
}

namespace {

bool trace_admissible(double rho, double un, double ut, const FluidParams& par) {
    if (rho < 0.0) return false;
    if (par.eps > 0.0 && un * un + ut * ut >= 1.0 / par.eps2()) return false;
    return true;
}

double interface_source(const SchemeParams& sc, const Side& l, const Side& r, double logb_l,
                        double logb_r, const FluidParams& par) {
    if (sc.scheme == SchemeKind::wb_hll)
        return wb_interface_source(l.rho, l.un, l.ut, r.rho, r.un, r.ut, logb_l, logb_r, par,
                                   sc.alpha_src)
            .s_hat_dx;
    return centered_interface_source(l.rho, l.un, l.ut, r.rho, r.un, r.ut, logb_l, logb_r, par);
}

}  // namespace

void sweep_line(std::size_t n, double dx, const FluidParams& par, const SchemeParams& sc,
                SweepBuffers& w) {
    const bool second = sc.space_order == 2;

    if (second) {
        minmod_slopes({w.rho.data(), n}, dx, {w.srho.data(), n});
        minmod_slopes({w.un.data(), n}, dx, {w.sun.data(), n});
        minmod_slopes({w.ut.data(), n}, dx, {w.sut.data(), n});
        if (sc.scheme == SchemeKind::wb_hll) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t r = (i + 1) % n;
                w.shat_detect[i] =
                    wb_interface_source(w.rho[i], w.un[i], w.ut[i], w.rho[r], w.un[r], w.ut[r],
                                        w.logb[i], w.logb[r], par, sc.alpha_src)
                        .s_hat_dx;
            }
            blend_factors({w.rho.data(), n}, {w.un.data(), n}, {w.shat_detect.data(), n}, dx,
                          par, sc.blend_m, sc.blend_big_m, sc.paper_literal_psi,
                          {w.phi.data(), n});
        } else {
            std::fill_n(w.phi.begin(), n, 1.0);
        }
        // A cell whose own traces leave the admissible set falls back to its
        // cell average for this stage.
        bool fixed = false;
        const double half = 0.5 * dx;
        for (std::size_t i = 0; i < n; ++i) {
            if (w.phi[i] == 0.0) continue;
            const double f = w.phi[i] * half;
            if (!trace_admissible(w.rho[i] + f * w.srho[i], w.un[i] + f * w.sun[i],
                                  w.ut[i] + f * w.sut[i], par) ||
                !trace_admissible(w.rho[i] - f * w.srho[i], w.un[i] - f * w.sun[i],
                                  w.ut[i] - f * w.sut[i], par)) {
                w.phi[i] = 0.0;
                fixed = true;
            }
        }
        (void)fixed;
        interface_values({w.rho.data(), n}, {w.srho.data(), n}, {w.phi.data(), n}, dx,
                         {w.rho_l.data(), n}, {w.rho_r.data(), n});
        interface_values({w.un.data(), n}, {w.sun.data(), n}, {w.phi.data(), n}, dx,
                         {w.un_l.data(), n}, {w.un_r.data(), n});
        interface_values({w.ut.data(), n}, {w.sut.data(), n}, {w.phi.data(), n}, dx,
                         {w.ut_l.data(), n}, {w.ut_r.data(), n});
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t r = (i + 1) % n;
            w.rho_l[i] = w.rho[i];
            w.un_l[i] = w.un[i];
            w.ut_l[i] = w.ut[i];
            w.rho_r[i] = w.rho[r];
            w.un_r[i] = w.un[r];
            w.ut_r[i] = w.ut[r];
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = (i + 1) % n;
        const Side l{w.rho_l[i], w.un_l[i], w.ut_l[i]};
        const Side rr{w.rho_r[i], w.un_r[i], w.ut_r[i]};
        const WaveSpeeds s = wave_speeds(l.un, rr.un, par);
        const double shat = interface_source(sc, l, rr, w.logb[i], w.logb[r], par);
        const Intermediates mid = sc.scheme == SchemeKind::wb_hll
                                      ? wb_intermediates(l, rr, s, shat, sc.theta, par)
                                      : hll_intermediates(l, rr, s, shat, par);
        w.flux[i] = interface_flux(l, rr, s, mid, par);
        w.shat[i] = shat;
    }
}

// ---------------------------------------------------------------------------
// 1D stepper
// ---------------------------------------------------------------------------

Stepper1D::Stepper1D(const RunSpec& spec) : spec_(spec), adv_(spec.method) {
    w_.resize(spec.n);
    const double dx = 1.0 / spec.n;
    for (int i = 0; i < spec.n; ++i) w_.logb[i] = spec_.geom.log_b((i + 0.5) * dx);
}

void Stepper1D::rhs(const std::vector<Vec2>& cells, double t, std::vector<Vec2>& out) {
    const std::size_t n = cells.size();
    const double dx = 1.0 / spec_.n;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            const Prim1 p = cons_to_prim_1d(cells[i], spec_.params);
            w_.rho[i] = p.rho;
            w_.un[i] = p.u;
            w_.ut[i] = 0.0;
        } catch (const RecoveryError& e) {
            throw RunAbort("primitive recovery failed at cell " + std::to_string(i) + ", t = " +
                           format_g17(t) + ": " + e.what());
        }
    }
    sweep_line(n, dx, spec_.params, spec_.scheme, w_);
    const double inv_dx = 1.0 / dx;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i + n - 1) % n;
        const Vec2 q = time_source_q_1d({w_.rho[i], w_.un[i]}, t, spec_.geom, spec_.params,
                                        spec_.scheme.paper_literal_q1);
        out[i][0] = -(w_.flux[i][0] - w_.flux[im][0]) * inv_dx + q[0];
        out[i][1] = -(w_.flux[i][1] - w_.flux[im][1]) * inv_dx +
                    0.5 * inv_dx * (w_.shat[im] + w_.shat[i]) + q[1];
    }
}

void Stepper1D::step(Grid1D& grid, double dt) {
    adv_.step(grid.cells, grid.t, dt,
              [this](const std::vector<Vec2>& u, double t, std::vector<Vec2>& out) {
                  rhs(u, t, out);
              });
    grid.t += dt;
}

// ---------------------------------------------------------------------------
// 2D stepper: x-sweeps over rows, y-sweeps over columns with the velocity
// roles swapped, then the cell-centered time source.
// ---------------------------------------------------------------------------

Stepper2D::Stepper2D(const RunSpec& spec) : spec_(spec), adv_(spec.method) {
    const int nx = spec_.n;
    const int ny = spec_.ny > 0 ? spec_.ny : spec_.n;
    spec_.ny = ny;
    w_.resize(std::max(nx, ny));
    rho_.resize(std::size_t(nx) * ny);
    u_.resize(rho_.size());
    v_.resize(rho_.size());
    logb_.resize(rho_.size());
    const double dx = 1.0 / nx;
    const double dy = 1.0 / ny;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            logb_[std::size_t(j) * nx + i] = spec_.geom.log_b((i + 0.5) * dx, (j + 0.5) * dy);
}

void Stepper2D::rhs(const std::vector<Vec3>& cells, double t, std::vector<Vec3>& out) {
    const int nx = spec_.n;
    const int ny = spec_.ny;
    const double dx = 1.0 / nx;
    const double dy = 1.0 / ny;

    for (std::size_t c = 0; c < cells.size(); ++c) {
        try {
            const Prim2 p = cons_to_prim_2d(cells[c], spec_.params);
            rho_[c] = p.rho;
            u_[c] = p.u;
            v_[c] = p.v;
        } catch (const RecoveryError& e) {
            throw RunAbort("primitive recovery failed at cell (" +
                           std::to_string(c % nx) + ", " + std::to_string(c / nx) +
                           "), t = " + format_g17(t) + ": " + e.what());
        }
    }

    std::fill(out.begin(), out.end(), Vec3{});

    const double inv_dx = 1.0 / dx;
    for (int j = 0; j < ny; ++j) {
        const std::size_t row = std::size_t(j) * nx;
        for (int i = 0; i < nx; ++i) {
            w_.rho[i] = rho_[row + i];
            w_.un[i] = u_[row + i];
            w_.ut[i] = v_[row + i];
            w_.logb[i] = logb_[row + i];
        }
        sweep_line(nx, dx, spec_.params, spec_.scheme, w_);
        for (int i = 0; i < nx; ++i) {
            const int im = (i + nx - 1) % nx;
            Vec3& o = out[row + i];
            o[0] -= (w_.flux[i][0] - w_.flux[im][0]) * inv_dx;
            o[1] += -(w_.flux[i][1] - w_.flux[im][1]) * inv_dx +
                    0.5 * inv_dx * (w_.shat[im] + w_.shat[i]);
            o[2] -= (w_.flux[i][2] - w_.flux[im][2]) * inv_dx;
        }
    }

    const double inv_dy = 1.0 / dy;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const std::size_t c = std::size_t(j) * nx + i;
            w_.rho[j] = rho_[c];
            w_.un[j] = v_[c];
            w_.ut[j] = u_[c];
            w_.logb[j] = logb_[c];
        }
        sweep_line(ny, dy, spec_.params, spec_.scheme, w_);
        for (int j = 0; j < ny; ++j) {
            const int jm = (j + ny - 1) % ny;
            Vec3& o = out[std::size_t(j) * nx + i];
            o[0] -= (w_.flux[j][0] - w_.flux[jm][0]) * inv_dy;
            o[2] += -(w_.flux[j][1] - w_.flux[jm][1]) * inv_dy +
                    0.5 * inv_dy * (w_.shat[jm] + w_.shat[j]);
            o[1] -= (w_.flux[j][2] - w_.flux[jm][2]) * inv_dy;
        }
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Vec3 q = time_source_q_2d({rho_[c], u_[c], v_[c]}, t, spec_.geom, spec_.params,
                                        spec_.scheme.paper_literal_q1);
        out[c] += q;
    }
}

void Stepper2D::step(Grid2D& grid, double dt) {
    adv_.step(grid.cells, grid.t, dt,
              [this](const std::vector<Vec3>& u, double t, std::vector<Vec3>& out) {
                  rhs(u, t, out);
              });
    grid.t += dt;
}

// ---------------------------------------------------------------------------
// Initial data and snapshots
// ---------------------------------------------------------------------------

Grid1D make_initial_grid_1d(const RunSpec& spec) {
    Grid1D g;
    g.n = spec.n;
    g.dx = 1.0 / spec.n;
    g.t = spec.t0;
    g.cells.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        const double x = g.x_center(i);
        const Prim1 p = spec.custom_ic_1d ? spec.custom_ic_1d(x)
                                          : sample_ic_1d(spec.test_id, x, spec.geom);
        g.cells[i] = prim_to_cons_1d(p, spec.params);
    }
    return g;
}

Grid2D make_initial_grid_2d(const RunSpec& spec) {
    Grid2D g;
    g.nx = spec.n;
    g.ny = spec.ny > 0 ? spec.ny : spec.n;
    g.dx = 1.0 / g.nx;
    g.dy = 1.0 / g.ny;
    g.t = spec.t0;
    g.cells.resize(std::size_t(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x_center(i);
            const double y = g.y_center(j);
            const Prim2 p = spec.custom_ic_2d ? spec.custom_ic_2d(x, y)
                                              : sample_ic_2d(spec.test_id, x, y, spec.geom);
            g.cells[g.idx(i, j)] = prim_to_cons_2d(p, spec.params);
        }
    return g;
}

namespace {

// Diagnostic columns appended by regime: rescaled fields for expanding and
// static runs, the rescaled density plus the distance of the speed from
// {0, 1/eps} (and -1/eps in 1D) for contracting runs.
void append_rescaled_1d(SnapshotData& s, const RunSpec& spec, const std::vector<double>& rho,
                        const std::vector<double>& u) {
    const FluidParams& par = spec.params;
    if (spec.geom.regime == Regime::contracting) {
        const double scale = std::pow(-s.t, 2.0 * par.kappa);
        std::vector<double> rt(rho.size()), dist(rho.size());
        const double c = par.eps > 0.0 ? 1.0 / par.eps : 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
            rt[i] = scale * rho[i];
            dist[i] = par.eps > 0.0
                          ? std::min({std::abs(u[i] + c), std::abs(u[i]), std::abs(u[i] - c)})
                          : std::abs(u[i]);
        }
        s.columns.push_back({"rho_tilde", std::move(rt)});
        s.columns.push_back({"vel_dist", std::move(dist)});
        return;
    }
    double ta = 1.0, tb = 1.0;
    if (spec.geom.regime == Regime::expanding) {
        const RescaleExponents e = expanding_exponents(par);
        ta = std::pow(s.t, e.alpha);
        tb = std::pow(s.t, e.beta);
    }
    std::vector<double> rt(rho.size()), ut(u.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rt[i] = ta * rho[i];
    for (std::size_t i = 0; i < u.size(); ++i) ut[i] = tb * u[i];
    s.columns.push_back({"rho_tilde", std::move(rt)});
    s.columns.push_back({"u_tilde", std::move(ut)});
}

}  // namespace

SnapshotData make_snapshot(const Grid1D& grid, const RunSpec& spec) {
    SnapshotData s;
    s.dim = 1;
    s.nx = grid.n;
    s.ny = 1;
    s.dx = grid.dx;
    s.dy = 0.0;
    s.t = grid.t;
    s.echo = spec.echo;
    std::vector<double> x(grid.n), rho(grid.n), u(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        x[i] = grid.x_center(i);
        const Prim1 p = cons_to_prim_1d(grid.cells[i], spec.params);
        rho[i] = p.rho;
        u[i] = p.u;
    }
    s.columns.push_back({"x", std::move(x)});
    s.columns.push_back({"rho", rho});
    s.columns.push_back({"u", u});
    append_rescaled_1d(s, spec, rho, u);
    return s;
}

SnapshotData make_snapshot(const Grid2D& grid, const RunSpec& spec) {
    SnapshotData s;
    s.dim = 2;
    s.nx = grid.nx;
    s.ny = grid.ny;
    s.dx = grid.dx;
    s.dy = grid.dy;
    s.t = grid.t;
    s.echo = spec.echo;
    const std::size_t m = grid.cells.size();
    std::vector<double> x(m), y(m), rho(m), u(m), v(m);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const std::size_t c = grid.idx(i, j);
            x[c] = grid.x_center(i);
            y[c] = grid.y_center(j);
            const Prim2 p = cons_to_prim_2d(grid.cells[c], spec.params);
            rho[c] = p.rho;
            u[c] = p.u;
            v[c] = p.v;
        }
    s.columns.push_back({"x", std::move(x)});
    s.columns.push_back({"y", std::move(y)});
    s.columns.push_back({"rho", rho});
    s.columns.push_back({"u", u});
    s.columns.push_back({"v", v});

    const FluidParams& par = spec.params;
    if (spec.geom.regime == Regime::contracting) {
        const double scale = std::pow(-grid.t, 2.0 * par.kappa);
        std::vector<double> rt(m), dist(m);
        const double c = par.eps > 0.0 ? 1.0 / par.eps : 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            rt[i] = scale * rho[i];
            const double speed = std::sqrt(u[i] * u[i] + v[i] * v[i]);
            dist[i] = par.eps > 0.0 ? std::min(speed, std::abs(speed - c)) : speed;
        }
        s.columns.push_back({"rho_tilde", std::move(rt)});
        s.columns.push_back({"vel_dist", std::move(dist)});
    } else {
        double ta = 1.0, tb = 1.0;
        if (spec.geom.regime == Regime::expanding) {
            const RescaleExponents e = expanding_exponents(par);
            ta = std::pow(grid.t, e.alpha);
            tb = std::pow(grid.t, e.beta);
        }
        std::vector<double> rt(m), ut(m), vt(m);
        for (std::size_t i = 0; i < m; ++i) {
            rt[i] = ta * rho[i];
            ut[i] = tb * u[i];
            vt[i] = tb * v[i];
        }
        s.columns.push_back({"rho_tilde", std::move(rt)});
        s.columns.push_back({"u_tilde", std::move(ut)});
        s.columns.push_back({"v_tilde", std::move(vt)});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Time loop
// ---------------------------------------------------------------------------

namespace {

template <class Grid, class Stepper>
RunResult run_loop(const RunSpec& spec, Grid grid, Stepper& stepper) {
    RunResult res;
    std::vector<double> pending = spec.snapshot_times;
    std::sort(pending.begin(), pending.end());
    std::size_t next = 0;

    StepControl ctrl = spec.ctrl;
    ctrl.t_end = spec.t_end;
    const bool contracting = spec.geom.regime == Regime::contracting;
    const double land_tol =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(spec.t_end));

    auto check_finite = [&](const Grid& g) {
        for (std::size_t c = 0; c < g.cells.size(); ++c)
            for (std::size_t k = 0; k < g.cells[c].c.size(); ++k)
                if (!std::isfinite(g.cells[c][k]))
                    throw RunAbort("non-finite state component " + std::to_string(k) +
                                   " at cell " + std::to_string(c) + ", t = " +
                                   format_g17(g.t));
    };

    check_finite(grid);
    while (grid.t < spec.t_end) {
        const double dt = compute_dt(grid, ctrl, spec.params, contracting);
        stepper.step(grid, dt);
        if (std::abs(spec.t_end - grid.t) <= land_tol) grid.t = spec.t_end;
        check_finite(grid);
        ++res.steps;
        while (next < pending.size() && pending[next] <= grid.t) {
            res.snapshots.push_back(make_snapshot(grid, spec));
            ++next;
        }
    }
    // Requests at t_end that a one-ulp landing left behind.
    while (next < pending.size()) {
        res.snapshots.push_back(make_snapshot(grid, spec));
        ++next;
    }
    res.final = make_snapshot(grid, spec);
    return res;
}

}  // namespace

RunResult run_from(const RunSpec& spec, Grid1D initial) {
    RunSpec s = spec;
    s.dim = 1;
    s.n = initial.n;
    Stepper1D stepper(s);
    return run_loop(s, std::move(initial), stepper);
}

RunResult run_from(const RunSpec& spec, Grid2D initial) {
    RunSpec s = spec;
    s.dim = 2;
    s.n = initial.nx;
    s.ny = initial.ny;
    Stepper2D stepper(s);
    return run_loop(s, std::move(initial), stepper);
}

RunResult run(const RunSpec& spec) {
    if (spec.dim == 2) return run_from(spec, make_initial_grid_2d(spec));
    return run_from(spec, make_initial_grid_1d(spec));
}

}  // namespace cosmofv
