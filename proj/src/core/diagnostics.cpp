#include "core/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace cosmofv {

RescaleExponents expanding_exponents(const FluidParams& par) {
    const double s = 3.0 * par.ek2();
    return {par.kappa * (1.0 + s), par.kappa * (1.0 - s)};
}

void rescale_expanding(double t, const FluidParams& par, std::span<const double> rho,
                       std::span<const double> u, std::vector<double>& rho_tilde,
                       std::vector<double>& u_tilde) {
    if (!(t > 0.0)) throw DomainError("expanding rescale needs t > 0");
    const RescaleExponents e = expanding_exponents(par);
    if (!(e.beta > 0.0)) throw DomainError("expanding rescale needs k < 1/(eps sqrt(3))");
    const double ta = std::pow(t, e.alpha);
    const double tb = std::pow(t, e.beta);
    rho_tilde.resize(rho.size());
    u_tilde.resize(u.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho_tilde[i] = ta * rho[i];
    for (std::size_t i = 0; i < u.size(); ++i) u_tilde[i] = tb * u[i];
}

std::vector<double> rescale_contracting(double t, const FluidParams& par,
                                        std::span<const double> rho) {
    if (!(t < 0.0)) throw DomainError("contracting rescale needs t < 0");
    const double scale = std::pow(-t, 2.0 * par.kappa);
    std::vector<double> out(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) out[i] = scale * rho[i];
    return out;
}

SteadyFit steady_residual(std::span<const double> rho, std::span<const double> speed,
                          std::span<const double> b_squared) {
    SteadyFit fit;
    if (rho.empty()) return fit;
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) sum += rho[i] / b_squared[i];
    fit.c_fit = sum / static_cast<double>(rho.size());

    double drho = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        drho = std::max(drho, std::abs(rho[i] / (fit.c_fit * b_squared[i]) - 1.0));
    double dspeed = 0.0;
    for (double s : speed) dspeed = std::max(dspeed, std::abs(s));
    fit.residual = drho + dspeed;
    return fit;
}

std::vector<double> restrict_average(std::span<const double> fine, std::size_t coarse_n) {
    const std::size_t nf = fine.size();
    if (coarse_n == 0 || nf == 0 || coarse_n > nf)
        throw DomainError("restriction needs 0 < coarse_n <= fine size");
    std::vector<double> out(coarse_n, 0.0);
    if (nf % coarse_n == 0) {
        const std::size_t ratio = nf / coarse_n;
        for (std::size_t j = 0; j < coarse_n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < ratio; ++r) s += fine[j * ratio + r];
            out[j] = s / static_cast<double>(ratio);
        }
        return out;
    }
    // Overlap-weighted average for incommensurate grids.
    const double h = 1.0 / static_cast<double>(nf);
    const double big_h = 1.0 / static_cast<double>(coarse_n);
    for (std::size_t j = 0; j < coarse_n; ++j) {
        const double lo = j * big_h;
        const double hi = (j + 1) * big_h;
        const std::size_t first = static_cast<std::size_t>(lo / h);
        double s = 0.0;
        for (std::size_t i = first; i < nf && i * h < hi; ++i) {
            const double overlap = std::min(hi, (i + 1) * h) - std::max(lo, i * h);
            if (overlap > 0.0) s += overlap * fine[i];
        }
        out[j] = s / big_h;
    }
    return out;
}

FieldNorms field_norms(std::span<const double> candidate, std::span<const double> reference,
                       double cell_size) {
    if (candidate.size() != reference.size()) throw DomainError("field size mismatch");
    FieldNorms n;
    double sum = 0.0;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const double d = std::abs(candidate[i] - reference[i]);
        sum += d;
        n.linf = std::max(n.linf, d);
    }
    n.l1 = cell_size * sum;
    return n;
}

}  // namespace cosmofv
