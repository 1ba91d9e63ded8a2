#include "core/reconstruction.hpp"

#include <cmath>

namespace cosmofv {

void minmod_slopes(std::span<const double> q, double dx, std::span<double> slope) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double qm = q[(i + n - 1) % n];
        const double qp = q[(i + 1) % n];
        const double dl = q[i] - qm;
        const double dr = qp - q[i];
        if (dl * dr > 0.0) {
            const double mag = std::min(std::abs(dl), std::abs(dr)) / dx;
            slope[i] = std::copysign(mag, qp - qm);
        } else {
            slope[i] = 0.0;
        }
    }
}

double blend_ramp(double deviation, double m, double big_m, double dx) {
    const double lo = m * dx;
    const double hi = big_m * dx;
    if (deviation < lo) return 0.0;
    if (deviation > hi) return 1.0;
    return (deviation - lo) / (hi - lo);
}

void blend_factors(std::span<const double> rho, std::span<const double> un,
                   std::span<const double> s_hat_dx, double dx, const FluidParams& par,
                   double m, double big_m, bool literal_psi, std::span<double> phi) {
    const std::size_t n = rho.size();
    const double k2 = par.k2();

    auto deviation_at = [&](std::size_t i) {
        const std::size_t r = (i + 1) % n;
        const double mom_jump = rho[r] * un[r] - rho[i] * un[i];
        const double fl = literal_psi ? un[i] + k2 : un[i] * un[i] + k2;
        const double fr = literal_psi ? un[r] + k2 : un[r] * un[r] + k2;
        const double psi = rho[r] * fr - rho[i] * fl - s_hat_dx[i];
        return std::sqrt(mom_jump * mom_jump + psi * psi);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const double dev = deviation_at(i) + deviation_at((i + n - 1) % n);
        phi[i] = blend_ramp(dev, m, big_m, dx);
    }
}

void interface_values(std::span<const double> q, std::span<const double> slope,
                      std::span<const double> phi, double dx, std::span<double> left,
                      std::span<double> right) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = (i + 1) % n;
        left[i] = q[i] + 0.5 * dx * slope[i] * phi[i];
        right[i] = q[r] - 0.5 * dx * slope[r] * phi[r];
    }
}

}  // namespace cosmofv
