// Background geometry: the scale factor a(t) = |t|^kappa (or a constant) and
// the 1-periodic spatial profile b with analytic derivatives.
#ifndef COSMOFV_GEOMETRY_HPP
#define COSMOFV_GEOMETRY_HPP

#include <string>

namespace cosmofv {

// Time range the run lives in. `static_bg` means a(t) is identically 1, so the
// time-dependent part of the source vanishes and any start time is allowed.
enum class Regime { expanding, contracting, static_bg };

enum class BProfile {
    flat,     // b = 1
    sin_2pi,  // b = 1 + 0.01 sin(2 pi x)
    sin_cos,  // b = 1 + 0.01 (sin(6 pi x) + cos(2 pi x))
    gauss_2d  // b = 0.1 + 0.01 exp(-20 (x-1/2)^2 - 20 (y-1/2)^2)
};

struct Geometry {
    Regime regime = Regime::static_bg;
    double kappa = 2.0;
    BProfile b_kind = BProfile::flat;

    bool scale_factor_active() const { return regime != Regime::static_bg; }

    // d(log a)/dt; equals kappa/t in both time regimes, 0 for a static background.
    double dlog_a(double t) const;

    double b(double x, double y = 0.0) const;
    double log_b(double x, double y = 0.0) const;
    double db_dx(double x, double y = 0.0) const;
    double db_dy(double x, double y = 0.0) const;

    bool b_is_flat() const { return b_kind == BProfile::flat; }
};

const char* to_string(Regime r);
const char* to_string(BProfile b);

}  // namespace cosmofv

#endif
