// Piecewise-linear reconstruction in primitive variables: minmod slopes, the
// steady-deviation blend factor phi, and interface traces. All arrays are
// periodic and indexed so that interface i sits between cells i and i+1.
#ifndef COSMOFV_RECONSTRUCTION_HPP
#define COSMOFV_RECONSTRUCTION_HPP

#include <span>

#include "core/types.hpp"

namespace cosmofv {

// slope[i] = sgn(q[i+1]-q[i-1]) min(|q[i]-q[i-1]|, |q[i+1]-q[i]|) / dx when the
// one-sided differences agree in sign, 0 at extrema.
void minmod_slopes(std::span<const double> q, double dx, std::span<double> slope);

// Piecewise-linear ramp: 0 below m*dx, 1 above M*dx.
double blend_ramp(double deviation, double m, double big_m, double dx);

// Per-cell blend factor from the discrete steady-state deviation. The
// deviation at interface i combines the momentum jump with
//   psi_i = rho_{i+1}(u_{i+1}^2 + k^2) - rho_i(u_i^2 + k^2) - s_hat_dx_i,
// which vanishes exactly on pairs satisfying the discrete steady relation.
// `literal_psi` switches to the unsquared velocity variant.
void blend_factors(std::span<const double> rho, std::span<const double> un,
                   std::span<const double> s_hat_dx, double dx, const FluidParams& par,
                   double m, double big_m, bool literal_psi, std::span<double> phi);

// Traces at interface i: left[i] = q_i + (dx/2) slope_i phi_i,
// right[i] = q_{i+1} - (dx/2) slope_{i+1} phi_{i+1}.
void interface_values(std::span<const double> q, std::span<const double> slope,
                      std::span<const double> phi, double dx, std::span<double> left,
                      std::span<double> right);

}  // namespace cosmofv

#endif
