// Governing system: conservative/primitive conversions, exact fluxes, wave
// speeds and exact geometric source terms, in one and two space dimensions.
//
// Evolved variables:
//   1D: U = (rho (1 + eps^4 k^2 u^2),  rho u (1 + eps^2 k^2))
//   2D: U = (rho (1 + eps^4 k^2 V^2),  rho u (1 + eps^2 k^2),  rho v (1 + eps^2 k^2))
// with V^2 = u^2 + v^2 bounded by the light speed squared.
#ifndef COSMOFV_MODEL_HPP
#define COSMOFV_MODEL_HPP

#include <utility>

#include "core/geometry.hpp"
#include "core/types.hpp"

namespace cosmofv {

// ---------------------------------------------------------------------------
// Normal/transverse kernels. Both dimensions route through these: slot 0 is
// the mass-like component, slot 1 the momentum normal to the interface, slot 2
// the transverse momentum. The 1D system is the ut == 0 section, and the
// normal flux is written so that every ut term vanishes exactly there.
// ---------------------------------------------------------------------------

inline Vec3 cons_nt(double rho, double un, double ut, const FluidParams& par) {
    const double mom = 1.0 + par.ek2();
    return {rho * (1.0 + par.e4k2() * (un * un + ut * ut)), rho * un * mom, rho * ut * mom};
}

inline Vec3 flux_nt(double rho, double un, double ut, const FluidParams& par) {
    const double mom = 1.0 + par.ek2();
    return {rho * un * mom,
            rho * (un * un + par.k2()) - par.ek2() * rho * ut * ut,
            mom * rho * un * ut};
}

// Velocity from the momentum/mass ratio r = U1/U0 (signed in 1D, a magnitude
// ratio in 2D). Evaluates the admissible root of the inversion quadratic in
// the cancellation-free form u = 2r / (A + sqrt(A^2 - 4 B r^2)), which is
// regular in the limits eps -> 0 and r -> 0. Throws RecoveryError when the
// discriminant is negative beyond round-off (clamped above -1e-12).
double recover_speed(double r, const FluidParams& par);

// ---------------------------------------------------------------------------
// 1D operations
// ---------------------------------------------------------------------------

// Rejects rho < 0 and |u| >= 1/eps.
Vec2 prim_to_cons_1d(const Prim1& p, const FluidParams& par);

// Case split: U0 = 0 gives vacuum; U1 = 0 gives (U0, 0); otherwise the
// quadratic root above.
Prim1 cons_to_prim_1d(const Vec2& U, const FluidParams& par);

Vec2 flux_1d(const Prim1& p, const FluidParams& par);
Vec2 flux_1d(const Vec2& U, const FluidParams& par);  // recovers primitives first

// Wave speeds (lambda_1 < lambda_2 for |u| < 1/eps).
std::pair<double, double> eigenvalues(double u, const FluidParams& par);

// Exact source at position x and time t. Rejects t = 0 on a non-static
// background.
Vec2 exact_source_1d(const Prim1& p, double x, double t, const Geometry& geom,
                     const FluidParams& par);

// ---------------------------------------------------------------------------
// 2D operations
// ---------------------------------------------------------------------------

Vec3 prim_to_cons_2d(const Prim2& p, const FluidParams& par);

// Inverts via the momentum magnitude (reduces to the 1D quadratic with the
// speed V), then scales by the momentum direction. A vanishing transverse
// momentum takes the exact 1D path.
Prim2 cons_to_prim_2d(const Vec3& U, const FluidParams& par);

Vec3 flux_2d_x(const Prim2& p, const FluidParams& par);
Vec3 flux_2d_y(const Prim2& p, const FluidParams& par);

Vec3 exact_source_2d(const Prim2& p, double x, double y, double t, const Geometry& geom,
                     const FluidParams& par);

}  // namespace cosmofv

#endif
