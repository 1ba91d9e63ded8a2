// Shared helpers for the test suites: deterministic random admissible states.
#ifndef COSMOFV_TEST_UTIL_HPP
#define COSMOFV_TEST_UTIL_HPP

#include <random>

#include "core/types.hpp"

namespace cosmofv::testing {

inline std::mt19937_64 rng(unsigned seed) {
    return std::mt19937_64{seed};
}

// Density in [lo, hi], speed strictly inside the admissible range.
inline Prim1 random_prim_1d(std::mt19937_64& g, const FluidParams& par, double rho_lo = 1e-3,
                            double rho_hi = 10.0, double speed_frac = 0.95) {
    std::uniform_real_distribution<double> rho_dist(rho_lo, rho_hi);
    const double cap = par.eps > 0.0 ? speed_frac / par.eps : speed_frac * 10.0;
    std::uniform_real_distribution<double> u_dist(-cap, cap);
    return {rho_dist(g), u_dist(g)};
}

inline Prim2 random_prim_2d(std::mt19937_64& g, const FluidParams& par, double rho_lo = 1e-3,
                            double rho_hi = 10.0, double speed_frac = 0.95) {
    std::uniform_real_distribution<double> rho_dist(rho_lo, rho_hi);
    const double cap = par.eps > 0.0 ? speed_frac / par.eps : speed_frac * 10.0;
    std::uniform_real_distribution<double> mag_dist(0.0, cap);
    std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * M_PI);
    const double mag = mag_dist(g);
    const double phi = angle_dist(g);
    return {rho_dist(g), mag * std::cos(phi), mag * std::sin(phi)};
}

}  // namespace cosmofv::testing

#endif
