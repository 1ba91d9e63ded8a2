// Rescaled variables, steady-state residuals, grid restriction and error
// norms against reference solutions.
#ifndef COSMOFV_DIAGNOSTICS_HPP
#define COSMOFV_DIAGNOSTICS_HPP

#include <span>
#include <vector>

#include "core/types.hpp"

namespace cosmofv {

// Decay exponents of the expanding regime: alpha = kappa (1 + 3 eps^2 k^2),
// beta = kappa (1 - 3 eps^2 k^2). beta > 0 requires k < 1/(eps sqrt(3)).
struct RescaleExponents {
    double alpha = 0.0;
    double beta = 0.0;
};
RescaleExponents expanding_exponents(const FluidParams& par);

// rho_tilde = t^alpha rho, u_tilde = t^beta u. Rejects t <= 0 and sound speeds
// with beta <= 0.
void rescale_expanding(double t, const FluidParams& par, std::span<const double> rho,
                       std::span<const double> u, std::vector<double>& rho_tilde,
                       std::vector<double>& u_tilde);

// rho_tilde = |t|^(2 kappa) rho. Rejects t >= 0.
std::vector<double> rescale_contracting(double t, const FluidParams& par,
                                        std::span<const double> rho);

// Fit of rho against C b^2: c_fit is the mean of rho/b^2, the residual the
// maximum relative density misfit plus the maximum speed.
struct SteadyFit {
    double c_fit = 0.0;
    double residual = 0.0;
};
SteadyFit steady_residual(std::span<const double> rho, std::span<const double> speed,
                          std::span<const double> b_squared);

// Conservative restriction of a periodic 1D cell field onto a coarser grid of
// the same domain (overlap-weighted averaging; exact block means for integer
// ratios). Preserves the discrete integral.
std::vector<double> restrict_average(std::span<const double> fine, std::size_t coarse_n);

// Discrete norms of (candidate - reference) on the candidate grid.
struct FieldNorms {
    double l1 = 0.0;
    double linf = 0.0;
};
FieldNorms field_norms(std::span<const double> candidate, std::span<const double> reference,
                       double cell_size);

}  // namespace cosmofv

#endif
