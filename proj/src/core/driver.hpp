// Simulation orchestration: run specifications, the per-stage right-hand side
// (directional sweeps of the interface solver), integrator glue and the time
// loop with snapshot scheduling.
#ifndef COSMOFV_DRIVER_HPP
#define COSMOFV_DRIVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/snapshot.hpp"
#include "core/timestep.hpp"
#include "core/types.hpp"

namespace cosmofv {

enum class SchemeKind { hll, wb_hll };
const char* to_string(SchemeKind s);

struct SchemeParams {
    SchemeKind scheme = SchemeKind::hll;
    int space_order = 2;
    double theta = 1e-12;       // positivity floor of the intermediate states
    double alpha_src = 100.0;   // fallback threshold of the well-balanced source
    double blend_m = 1.0;       // lower edge of the reconstruction blend ramp
    double blend_big_m = 10.0;  // upper edge
    bool paper_literal_psi = false;
    bool paper_literal_q1 = false;
};

struct RunSpec {
    int dim = 1;
    int n = 100;
    int ny = 0;  // defaults to n for 2D runs
    FluidParams params;
    Geometry geom;
    SchemeParams scheme;
    Integrator method = Integrator::rk4;
    StepControl ctrl;
    double t0 = 1.0;
    double t_end = 1.1;
    std::vector<double> snapshot_times;  // strictly inside (t0, t_end]

    std::string test_id;  // built-in initial condition, unless a sampler is set
    std::function<Prim1(double)> custom_ic_1d;
    std::function<Prim2(double, double)> custom_ic_2d;

    std::vector<std::pair<std::string, std::string>> echo;  // resolved config
};

struct RunResult {
    std::vector<SnapshotData> snapshots;
    SnapshotData final;
    long steps = 0;
};

Grid1D make_initial_grid_1d(const RunSpec& spec);
Grid2D make_initial_grid_2d(const RunSpec& spec);

SnapshotData make_snapshot(const Grid1D& grid, const RunSpec& spec);
SnapshotData make_snapshot(const Grid2D& grid, const RunSpec& spec);

// Scratch arrays for one directional sweep over a periodic line of cells.
struct SweepBuffers {
    std::vector<double> rho, un, ut, logb;              // cell values along the line
    std::vector<double> srho, sun, sut, phi;            // slopes and blend factor
    std::vector<double> rho_l, rho_r, un_l, un_r, ut_l, ut_r;  // interface traces
    std::vector<double> shat_detect, shat;              // S1_hat * dx per interface
    std::vector<Vec3> flux;
    void resize(std::size_t n);
};

// Fluxes and interface sources for one line; inputs are the cell primitives
// and log b values already stored in the buffers.
void sweep_line(std::size_t n, double dx, const FluidParams& par, const SchemeParams& sc,
                SweepBuffers& w);

class Stepper1D {
  public:
    explicit Stepper1D(const RunSpec& spec);
    // Semi-discrete right-hand side at stage time t.
    void rhs(const std::vector<Vec2>& cells, double t, std::vector<Vec2>& out);
    // One integrator step; advances grid.t by dt.
    void step(Grid1D& grid, double dt);

  private:
    RunSpec spec_;
    Advancer<Vec2> adv_;
    SweepBuffers w_;
};

class Stepper2D {
  public:
    explicit Stepper2D(const RunSpec& spec);
    void rhs(const std::vector<Vec3>& cells, double t, std::vector<Vec3>& out);
    void step(Grid2D& grid, double dt);

  private:
    RunSpec spec_;
    Advancer<Vec3> adv_;
    SweepBuffers w_;
    std::vector<double> rho_, u_, v_;  // cell primitives
    std::vector<double> logb_;         // log b at every cell
};

RunResult run(const RunSpec& spec);
RunResult run_from(const RunSpec& spec, Grid1D initial);
RunResult run_from(const RunSpec& spec, Grid2D initial);

}  // namespace cosmofv

#endif
