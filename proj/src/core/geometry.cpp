#include "core/geometry.hpp"

#include <cmath>

#include "core/error.hpp"

namespace cosmofv {

namespace {
constexpr double two_pi = 2.0 * M_PI;

double gauss_bump(double x, double y) {
    const double rx = x - 0.5;
    const double ry = y - 0.5;
    return std::exp(-20.0 * rx * rx - 20.0 * ry * ry);
}
}  // namespace

double Geometry::dlog_a(double t) const {
    if (regime == Regime::static_bg) return 0.0;
    if (t == 0.0) throw DomainError("scale factor derivative evaluated at t = 0");
    return kappa / t;
}

double Geometry::b(double x, double y) const {
    switch (b_kind) {
        case BProfile::flat:
            return 1.0;
        case BProfile::sin_2pi:
            return 1.0 + 0.01 * std::sin(two_pi * x);
        case BProfile::sin_cos:
            return 1.0 + 0.01 * (std::sin(3.0 * two_pi * x) + std::cos(two_pi * x));
        case BProfile::gauss_2d:
            return 0.1 + 0.01 * gauss_bump(x, y);
    }
    return 1.0;
}

double Geometry::log_b(double x, double y) const {
    if (b_kind == BProfile::flat) return 0.0;
    return std::log(b(x, y));
}

double Geometry::db_dx(double x, double y) const {
    switch (b_kind) {
        case BProfile::flat:
            return 0.0;
        case BProfile::sin_2pi:
            return 0.01 * two_pi * std::cos(two_pi * x);
        case BProfile::sin_cos:
            return 0.01 * (3.0 * two_pi * std::cos(3.0 * two_pi * x) - two_pi * std::sin(two_pi * x));
        case BProfile::gauss_2d:
            return 0.01 * gauss_bump(x, y) * (-40.0 * (x - 0.5));
    }
    return 0.0;
}

double Geometry::db_dy(double x, double y) const {
    if (b_kind == BProfile::gauss_2d) return 0.01 * gauss_bump(x, y) * (-40.0 * (y - 0.5));
    return 0.0;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::expanding: return "expanding";
        case Regime::contracting: return "contracting";
        case Regime::static_bg: return "static";
    }
    return "?";
}

const char* to_string(BProfile b) {
    switch (b) {
        case BProfile::flat: return "flat";
        case BProfile::sin_2pi: return "sin2pi";
        case BProfile::sin_cos: return "sincos";
        case BProfile::gauss_2d: return "gauss2d";
    }
    return "?";
}

}  // namespace cosmofv
