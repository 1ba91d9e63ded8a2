// Basic value types shared by all modules: fluid parameters, small fixed-size
// state vectors, primitive states and periodic grids in one and two dimensions.
#ifndef COSMOFV_TYPES_HPP
#define COSMOFV_TYPES_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace cosmofv {

// Physical constants of the model. The light speed is 1/eps; eps == 0 selects
// the non-relativistic limit. The sound speed k must satisfy 0 < k < 1/eps.
struct FluidParams {
    double eps = 1.0;    // inverse light speed
    double k = 0.5;      // sound speed
    double kappa = 2.0;  // expansion/contraction exponent of a(t) = |t|^kappa

    double eps2() const { return eps * eps; }
    double k2() const { return k * k; }
    double ek2() const { return eps2() * k2(); }    // eps^2 k^2
    double e4k2() const { return eps2() * ek2(); }  // eps^4 k^2
};

bool params_admissible(const FluidParams& par);

template <std::size_t N>
struct Vec {
    std::array<double, N> c{};

    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (std::size_t i = 0; i < N; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
};

using Vec2 = Vec<2>;  // 1D conservative/flux vector: (mass-like, momentum)
using Vec3 = Vec<3>;  // 2D conservative/flux vector: (mass-like, x-mom, y-mom)

struct Prim1 {
    double rho = 0.0;
    double u = 0.0;
};

struct Prim2 {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
};

// Cell-centered state on the periodic unit interval; dx * n == 1.
struct Grid1D {
    int n = 0;
    double dx = 0.0;
    double t = 0.0;
    std::vector<Vec2> cells;

    double x_center(int i) const { return (i + 0.5) * dx; }
};

// Cell-centered state on the periodic unit square, row-major (j * nx + i).
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    double t = 0.0;
    std::vector<Vec3> cells;

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double x_center(int i) const { return (i + 0.5) * dx; }
    double y_center(int j) const { return (j + 0.5) * dy; }
};

}  // namespace cosmofv

#endif
