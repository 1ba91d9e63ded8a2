#include "core/wb_source.hpp"

#include <cmath>

#include "core/error.hpp"

namespace cosmofv {

InterfaceSource wb_interface_source(double rho_l, double un_l, double ut_l,
                                    double rho_r, double un_r, double ut_r,
                                    double log_b_l, double log_b_r,
                                    const FluidParams& par, double alpha_src) {
    if (rho_l == 0.0 && rho_r == 0.0) return {0.0, SourceBranch::vacuum_zero};

    const double un_lr = 0.5 * (un_l + un_r);
    const double ut_lr = 0.5 * (ut_l + ut_r);
    const double rel = 1.0 - par.eps2() * (un_lr * un_lr + ut_lr * ut_lr);
    const double db = log_b_r - log_b_l;

    if (rho_l == 0.0 || rho_r == 0.0) {
        const double w = 1.0 / (rho_l == 0.0 ? rho_r : rho_l);
        return {2.0 * par.k2() / w * rel * db, SourceBranch::fallback};
    }

    const double w_l = 1.0 / rho_l;
    const double w_r = 1.0 / rho_r;
    const double w_lr = 0.5 * (w_l + w_r);
    const double lead = 2.0 * par.k2() / w_lr * rel * db;
    const double a_lr = std::log(w_l / w_r) / w_lr - (rho_r - rho_l);
    const double full = lead - par.k2() * a_lr;

    // B_r == B_l sends the ratio to infinity unless A_lr also vanishes, so the
    // fallback applies there; either branch then returns the same value when
    // A_lr == 0.
    if (db == 0.0) {
        if (a_lr == 0.0) return {full, SourceBranch::well_balanced};
        return {lead, SourceBranch::fallback};
    }
    if (std::abs(full / lead) >= alpha_src) return {lead, SourceBranch::fallback};
    return {full, SourceBranch::well_balanced};
}

double centered_interface_source(double rho_l, double un_l, double ut_l,
                                 double rho_r, double un_r, double ut_r,
                                 double log_b_l, double log_b_r, const FluidParams& par) {
    const double un_lr = 0.5 * (un_l + un_r);
    const double ut_lr = 0.5 * (ut_l + ut_r);
    const double rel = 1.0 - par.eps2() * (un_lr * un_lr + ut_lr * ut_lr);
    return (rho_l + rho_r) * par.k2() * (log_b_r - log_b_l) * rel;
}

Vec3 time_source_q_2d(const Prim2& p, double t, const Geometry& geom, const FluidParams& par,
                      bool literal_q1) {
    if (!geom.scale_factor_active()) return {0.0, 0.0, 0.0};
    if (t == 0.0) throw DomainError("time source evaluated at t = 0");
    const double da = geom.dlog_a(t);
    const double v2 = p.u * p.u + p.v * p.v;
    const double q0 = -da * p.rho * (1.0 + 3.0 * par.ek2() + (1.0 - par.ek2()) * par.eps2() * v2);
    double c = 2.0 * da * p.rho * (1.0 + par.ek2());
    if (literal_q1) c *= par.k2();
    return {q0, -c * p.u, -c * p.v};
}

Vec2 time_source_q_1d(const Prim1& p, double t, const Geometry& geom, const FluidParams& par,
                      bool literal_q1) {
    const Vec3 q = time_source_q_2d({p.rho, p.u, 0.0}, t, geom, par, literal_q1);
    return {q[0], q[1]};
}

}  // namespace cosmofv
