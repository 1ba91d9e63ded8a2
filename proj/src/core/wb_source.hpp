// Interface discretizations of the spatial (b-profile) source and the
// midpoint discretization of the time-dependent (a-profile) source.
#ifndef COSMOFV_WB_SOURCE_HPP
#define COSMOFV_WB_SOURCE_HPP

#include "core/geometry.hpp"
#include "core/types.hpp"

namespace cosmofv {

enum class SourceBranch { well_balanced, fallback, vacuum_zero };

// Value of S1_hat * dx across one interface (the normal momentum source).
struct InterfaceSource {
    double s_hat_dx = 0.0;
    SourceBranch branch = SourceBranch::well_balanced;
};

// Well-balanced source. With w = 1/rho and B = log b, the full expression is
//   S1_hat dx = (2 k^2 / w_lr) (1 - eps^2 V_lr^2) (B_r - B_l) - k^2 A_lr,
//   A_lr = (1/w_lr) log(w_l/w_r) - (1/w_r - 1/w_l),
// where w_lr and the interface velocities are arithmetic means. The A_lr term
// is dropped (fallback branch) whenever the ratio of the full expression to
// its leading term reaches alpha_src, which also covers B_r == B_l where the
// ratio test degenerates. Double vacuum returns exactly zero; one-sided vacuum
// takes the fallback with w_lr from the non-vacuum side.
//
// Velocities enter only through the relativistic factor; `ut` carries the
// transverse component in 2D sweeps and is zero in 1D.
InterfaceSource wb_interface_source(double rho_l, double un_l, double ut_l,
                                    double rho_r, double un_r, double ut_r,
                                    double log_b_l, double log_b_r,
                                    const FluidParams& par, double alpha_src);

// Centered source of the unmodified scheme:
//   S1_hat dx = (rho_l + rho_r) k^2 (B_r - B_l) (1 - eps^2 V_lr^2).
double centered_interface_source(double rho_l, double un_l, double ut_l,
                                 double rho_r, double un_r, double ut_r,
                                 double log_b_l, double log_b_r, const FluidParams& par);

// Midpoint value of the time-dependent source Q at one cell. Rejects t = 0 on
// a non-static background. `literal_q1` reproduces the momentum component with
// the stray k^2 factor; the default matches the exact source.
Vec2 time_source_q_1d(const Prim1& p, double t, const Geometry& geom, const FluidParams& par,
                      bool literal_q1 = false);
Vec3 time_source_q_2d(const Prim2& p, double t, const Geometry& geom, const FluidParams& par,
                      bool literal_q1 = false);

}  // namespace cosmofv

#endif
