#include "core/model.hpp"

#include <cmath>

#include "core/error.hpp"

namespace cosmofv {

namespace {
constexpr double discriminant_tol = 1e-12;

void require_admissible_speed(double speed, const FluidParams& par) {
    if (par.eps > 0.0 && std::abs(speed) >= 1.0 / par.eps)
        throw DomainError("velocity at or beyond the light speed");
}
}  // namespace

bool params_admissible(const FluidParams& par) {
    if (!(par.eps >= 0.0) || !(par.k > 0.0) || !(par.kappa > 0.0)) return false;
    if (par.eps > 0.0 && !(par.k < 1.0 / par.eps)) return false;
    return true;
}

double recover_speed(double r, const FluidParams& par) {
    const double a = 1.0 + par.ek2();
    const double b = par.e4k2();
    double disc = a * a - 4.0 * b * r * r;
    if (disc < 0.0) {
        if (disc < -discriminant_tol) throw RecoveryError("non-invertible conservative state");
        disc = 0.0;
    }
    return 2.0 * r / (a + std::sqrt(disc));
}

Vec2 prim_to_cons_1d(const Prim1& p, const FluidParams& par) {
    if (p.rho < 0.0) throw DomainError("negative density");
    require_admissible_speed(p.u, par);
    const Vec3 U = cons_nt(p.rho, p.u, 0.0, par);
    return {U[0], U[1]};
}

Prim1 cons_to_prim_1d(const Vec2& U, const FluidParams& par) {
    if (U[0] == 0.0) return {0.0, 0.0};
    if (U[1] == 0.0) return {U[0], 0.0};
    const double u = recover_speed(U[1] / U[0], par);
    return {U[0] / (1.0 + par.e4k2() * u * u), u};
}

Vec2 flux_1d(const Prim1& p, const FluidParams& par) {
    const Vec3 f = flux_nt(p.rho, p.u, 0.0, par);
    return {f[0], f[1]};
}

Vec2 flux_1d(const Vec2& U, const FluidParams& par) {
    return flux_1d(cons_to_prim_1d(U, par), par);
}

std::pair<double, double> eigenvalues(double u, const FluidParams& par) {
    const double ek = par.eps2() * par.k;
    return {(u - par.k) / (1.0 - ek * u), (u + par.k) / (1.0 + ek * u)};
}

Vec2 exact_source_1d(const Prim1& p, double x, double t, const Geometry& geom,
                     const FluidParams& par) {
    const Vec3 s = exact_source_2d({p.rho, p.u, 0.0}, x, 0.0, t, geom, par);
    return {s[0], s[1]};
}

Vec3 prim_to_cons_2d(const Prim2& p, const FluidParams& par) {
    if (p.rho < 0.0) throw DomainError("negative density");
    require_admissible_speed(std::sqrt(p.u * p.u + p.v * p.v), par);
    return cons_nt(p.rho, p.u, p.v, par);
}

Prim2 cons_to_prim_2d(const Vec3& U, const FluidParams& par) {
    if (U[0] == 0.0) return {0.0, 0.0, 0.0};
    if (U[2] == 0.0) {
        const Prim1 p = cons_to_prim_1d({U[0], U[1]}, par);
        return {p.rho, p.u, 0.0};
    }
    if (U[1] == 0.0) {
        const Prim1 p = cons_to_prim_1d({U[0], U[2]}, par);
        return {p.rho, 0.0, p.u};
    }
    const double mag = std::sqrt(U[1] * U[1] + U[2] * U[2]);
    const double speed = recover_speed(mag / U[0], par);
    const double scale = speed / mag;
    return {U[0] / (1.0 + par.e4k2() * speed * speed), U[1] * scale, U[2] * scale};
}

Vec3 flux_2d_x(const Prim2& p, const FluidParams& par) {
    return flux_nt(p.rho, p.u, p.v, par);
}

Vec3 flux_2d_y(const Prim2& p, const FluidParams& par) {
    const Vec3 f = flux_nt(p.rho, p.v, p.u, par);
    return {f[0], f[2], f[1]};
}

Vec3 exact_source_2d(const Prim2& p, double x, double y, double t, const Geometry& geom,
                     const FluidParams& par) {
    if (geom.scale_factor_active() && t == 0.0) throw DomainError("source evaluated at t = 0");
    const double da = geom.dlog_a(t);
    const double v2 = p.u * p.u + p.v * p.v;
    const double rel = 1.0 - par.eps2() * v2;
    const double mom = 1.0 + par.ek2();
    const double b = geom.b(x, y);
    const double s0 = -da * p.rho * (1.0 + 3.0 * par.ek2() + (1.0 - par.ek2()) * par.eps2() * v2);
    const double s1 = 2.0 * p.rho * (par.k2() * geom.db_dx(x, y) / b * rel - da * mom * p.u);
    const double s2 = 2.0 * p.rho * (par.k2() * geom.db_dy(x, y) / b * rel - da * mom * p.v);
    return {s0, s1, s2};
}

}  // namespace cosmofv
