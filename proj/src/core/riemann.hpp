// Interface solvers: wave-speed estimates, the classic two-wave flux, and the
// four-state solver whose intermediate states absorb the interface source.
//
// Everything is written in normal/transverse form (see model.hpp) so the same
// kernels serve 1D states and both sweep directions of the 2D scheme.
#ifndef COSMOFV_RIEMANN_HPP
#define COSMOFV_RIEMANN_HPP

#include "core/model.hpp"
#include "core/types.hpp"

namespace cosmofv {

struct WaveSpeeds {
    double lam_l = 0.0;  // <= 0
    double lam_r = 0.0;  // >= 0
};

// lam_r = max(0, lambda_2(u_l), lambda_2(u_r)), lam_l = min(0, lambda_1(...)).
WaveSpeeds wave_speeds(double u_l, double u_r, const FluidParams& par);

// One primitive trace at an interface.
struct Side {
    double rho = 0.0;
    double un = 0.0;
    double ut = 0.0;
};

struct Intermediates {
    Vec3 minus;
    Vec3 plus;
    double s_hat_dx = 0.0;       // source value that entered the construction
    bool degenerate_clamp = false;  // positivity fix applied with a vanishing speed
};

// Single intermediate state of the two-wave solver, shifted by the source:
// both states equal U_m + (0, s_hat_dx, 0) / (lam_r - lam_l).
Intermediates hll_intermediates(const Side& l, const Side& r, const WaveSpeeds& s,
                                double s_hat_dx, const FluidParams& par);

// Four-state construction. The normal momentum gets a single shifted state;
// the mass component splits across the interface by s_hat_dx / Lambda(u_l,u_r)
// (by the density jump at a sonic product, |Lambda| < 1e-10), then the
// positivity floor theta is enforced while preserving the consistency
// identity. The transverse momentum keeps the single two-wave state.
Intermediates wb_intermediates(const Side& l, const Side& r, const WaveSpeeds& s,
                               double s_hat_dx, double theta, const FluidParams& par);

// Interface flux from the intermediate states:
//   F = 1/2 (F(U_l) + F(U_r) + lam_l (U_m^- - U_l) + lam_r (U_m^+ - U_r)).
Vec3 interface_flux(const Side& l, const Side& r, const WaveSpeeds& s,
                    const Intermediates& mid, const FluidParams& par);

// ---------------------------------------------------------------------------
// 1D API (thin projections of the kernels above)
// ---------------------------------------------------------------------------

struct Intermediates1 {
    Vec2 minus;
    Vec2 plus;
    double s_hat_dx = 0.0;
    bool degenerate_clamp = false;
};

// Source-free two-wave flux between 1D states.
Vec2 hll_flux(const Prim1& l, const Prim1& r, const FluidParams& par);

Intermediates1 wb_intermediate_states(const Prim1& l, const Prim1& r, double s_hat_dx,
                                      double theta, const FluidParams& par);

Vec2 wb_flux(const Prim1& l, const Prim1& r, const Intermediates1& mid, const FluidParams& par);

}  // namespace cosmofv

#endif
