// Time-step selection under the CFL restriction and the explicit integrators
// (forward Euler, classical RK4, Shu-Osher SSP-RK3) over a generic RHS.
#ifndef COSMOFV_TIMESTEP_HPP
#define COSMOFV_TIMESTEP_HPP

#include <limits>
#include <vector>

#include "core/types.hpp"

namespace cosmofv {

enum class Integrator { forward_euler, rk4, ssp_rk3 };

struct StepControl {
    double cfl = 0.3;
    double dt_floor = 0.0;
    double dt_cap = std::numeric_limits<double>::infinity();
    double t_end = 0.0;
    double contracting_guard = 0.5;  // dt <= guard * |t| when integrating toward t = 0
};

// cfl * dx / (max over interfaces of max(|lam_l|, |lam_r|)), clamped by the
// cap, the contracting guard and the remaining time. Throws RunAbort when the
// CFL-limited step collapses below dt_floor or no wave speed is positive.
double compute_dt(const Grid1D& grid, const StepControl& ctrl, const FluidParams& par,
                  bool contracting);

// 2D variant: cfl * min over directions of (spacing / max directional speed).
double compute_dt(const Grid2D& grid, const StepControl& ctrl, const FluidParams& par,
                  bool contracting);

// Stage scratch plus the step routine; rhs(state, t, out) fills a preallocated
// derivative array. Stage times are passed to rhs so time-dependent sources
// keep the integrator's order.
template <class VecT>
struct Advancer {
    using State = std::vector<VecT>;

    explicit Advancer(Integrator method) : method_(method) {}

    template <class Rhs>
    void step(State& u, double t, double dt, Rhs&& rhs) {
        const std::size_t n = u.size();
        switch (method_) {
            case Integrator::forward_euler: {
                resize(k1_, n);
                rhs(u, t, k1_);
                for (std::size_t i = 0; i < n; ++i) u[i] += dt * k1_[i];
                return;
            }
            case Integrator::rk4: {
                resize(k1_, n), resize(k2_, n), resize(k3_, n), resize(k4_, n), resize(tmp_, n);
                rhs(u, t, k1_);
                for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k1_[i];
                rhs(tmp_, t + 0.5 * dt, k2_);
                for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k2_[i];
                rhs(tmp_, t + 0.5 * dt, k3_);
                for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + dt * k3_[i];
                rhs(tmp_, t + dt, k4_);
                const double w = dt / 6.0;
                for (std::size_t i = 0; i < n; ++i)
                    u[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
                return;
            }
            case Integrator::ssp_rk3: {
                resize(k1_, n), resize(tmp_, n);
                rhs(u, t, k1_);
                for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + dt * k1_[i];
                rhs(tmp_, t + dt, k1_);
                for (std::size_t i = 0; i < n; ++i)
                    tmp_[i] = 0.75 * u[i] + 0.25 * (tmp_[i] + dt * k1_[i]);
                rhs(tmp_, t + 0.5 * dt, k1_);
                const double c = 2.0 / 3.0;
                for (std::size_t i = 0; i < n; ++i)
                    u[i] = (1.0 / 3.0) * u[i] + c * (tmp_[i] + dt * k1_[i]);
                return;
            }
        }
    }

  private:
    static void resize(State& s, std::size_t n) {
        if (s.size() != n) s.assign(n, VecT{});
    }

    Integrator method_;
    State k1_, k2_, k3_, k4_, tmp_;
};

const char* to_string(Integrator m);

}  // namespace cosmofv

#endif
