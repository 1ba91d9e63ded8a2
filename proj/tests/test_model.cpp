#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "core/error.hpp"
#include "core/model.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cosmofv;

namespace {
const FluidParams par_half{1.0, 0.5, 2.0};  // eps = 1, k = 0.5
}

TEST_CASE("prim_to_cons_1d pinned values") {
    CHECK(prim_to_cons_1d({1.0, 0.0}, par_half)[0] == 1.0);
    CHECK(prim_to_cons_1d({1.0, 0.0}, par_half)[1] == 0.0);
    CHECK(prim_to_cons_1d({0.0, 0.3}, par_half)[0] == 0.0);
    CHECK(prim_to_cons_1d({0.0, 0.3}, par_half)[1] == 0.0);

    // rho = 2, u = 0.4: U0 = 2 (1 + 0.25 * 0.16) = 2.08, U1 = 2 * 0.4 * 1.25 = 1.
    const Vec2 u = prim_to_cons_1d({2.0, 0.4}, par_half);
    CHECK(u[0] == doctest::Approx(2.08).epsilon(1e-15));
    CHECK(u[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("prim_to_cons_1d rejects inadmissible states") {
    CHECK_THROWS_AS(prim_to_cons_1d({-1.0, 0.0}, par_half), DomainError);
    CHECK_THROWS_AS(prim_to_cons_1d({1.0, 1.0}, par_half), DomainError);
    CHECK_THROWS_AS(prim_to_cons_1d({1.0, -1.5}, par_half), DomainError);
}

TEST_CASE("cons_to_prim_1d case split") {
    const Prim1 vac = cons_to_prim_1d({0.0, 0.0}, par_half);
    CHECK(vac.rho == 0.0);
    CHECK(vac.u == 0.0);
    const Prim1 rest = cons_to_prim_1d({1.0, 0.0}, par_half);
    CHECK(rest.rho == 1.0);
    CHECK(rest.u == 0.0);
}

TEST_CASE("cons_to_prim_1d signals a negative discriminant") {
    // |U1/U0| beyond (1 + eps^2 k^2) / (2 eps^2 k) makes the quadratic complex.
    CHECK_THROWS_AS(cons_to_prim_1d({1.0, 10.0}, par_half), RecoveryError);
}

TEST_CASE("1D roundtrip on random admissible states") {
    auto g = testing::rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        const Prim1 p = testing::random_prim_1d(g, par_half);
        const Prim1 q = cons_to_prim_1d(prim_to_cons_1d(p, par_half), par_half);
        CHECK(q.rho == doctest::Approx(p.rho).epsilon(1e-13));
        CHECK(q.u == doctest::Approx(p.u).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("flux_1d pinned values") {
    const Vec2 rest = flux_1d(Prim1{1.0, 0.0}, par_half);
    CHECK(rest[0] == 0.0);
    CHECK(rest[1] == doctest::Approx(0.25).epsilon(1e-15));

    const Vec2 vac = flux_1d(Prim1{0.0, 0.0}, par_half);
    CHECK(vac[0] == 0.0);
    CHECK(vac[1] == 0.0);

    // rho = 2, u = 0.4: F = (1, 2 (0.16 + 0.25)) = (1, 0.82).
    const Vec2 f = flux_1d(Prim1{2.0, 0.4}, par_half);
    CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f[1] == doctest::Approx(0.82).epsilon(1e-15));

    // The conservative-variable overload recovers primitives first.
    const Vec2 f2 = flux_1d(prim_to_cons_1d({2.0, 0.4}, par_half), par_half);
    CHECK(f2[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(f2[1] == doctest::Approx(0.82).epsilon(1e-13));
}

TEST_CASE("flux reduces to non-relativistic Euler at eps = 0") {
    const FluidParams nr{0.0, 0.5, 2.0};
    auto g = testing::rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Prim1 p = testing::random_prim_1d(g, nr);
        const Vec2 f = flux_1d(p, nr);
        CHECK(f[0] == doctest::Approx(p.rho * p.u).epsilon(1e-14));
        CHECK(f[1] ==
              doctest::Approx(p.rho * p.u * p.u + nr.k2() * p.rho).epsilon(1e-14));
        // Conservative variables collapse to (rho, rho u).
        const Vec2 u = prim_to_cons_1d(p, nr);
        CHECK(u[0] == p.rho);
        CHECK(u[1] == p.rho * p.u);
    }
}

TEST_CASE("eigenvalues") {
    const auto [l1, l2] = eigenvalues(0.0, par_half);
    CHECK(l1 == -0.5);
    CHECK(l2 == 0.5);

    // At the light speed both waves travel at the light speed.
    const auto [c1, c2] = eigenvalues(1.0, par_half);
    CHECK(c1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c2 == doctest::Approx(1.0).epsilon(1e-15));

    const auto [m1, m2] = eigenvalues(0.5, par_half);
    CHECK(m1 == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(m2 == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("hyperbolicity: ordered wave speeds inside the light cone") {
    auto g = testing::rng(13);
    for (int trial = 0; trial < 10000; ++trial) {
        const Prim1 p = testing::random_prim_1d(g, par_half, 1.0, 1.0, 0.999);
        const auto [l1, l2] = eigenvalues(p.u, par_half);
        CHECK(l1 < l2);
        CHECK(std::abs(l1) < 1.0 + 1e-12);
        CHECK(std::abs(l2) < 1.0 + 1e-12);
    }
}

TEST_CASE("exact_source_1d") {
    Geometry flat_geom;  // static a, flat b

    SUBCASE("vanishes for a constant background") {
        const Vec2 s = exact_source_1d({1.0, 0.3}, 0.25, 5.0, flat_geom, par_half);
        CHECK(s[0] == 0.0);
        CHECK(s[1] == 0.0);
    }

    SUBCASE("expanding homogeneous value") {
        Geometry geom;
        geom.regime = Regime::expanding;
        geom.kappa = 2.0;
        // u = 0, rho = 1, t = 1: S0 = -2 (1 + 0.75) = -3.5, S1 = 0.
        const Vec2 s = exact_source_1d({1.0, 0.0}, 0.4, 1.0, geom, par_half);
        CHECK(s[0] == doctest::Approx(-3.5).epsilon(1e-15));
        CHECK(s[1] == 0.0);
        CHECK_THROWS_AS(exact_source_1d({1.0, 0.0}, 0.4, 0.0, geom, par_half), DomainError);
    }

    SUBCASE("static a keeps only the b-profile term") {
        Geometry geom;
        geom.b_kind = BProfile::sin_2pi;
        const double x = 0.3;
        const Prim1 p{1.2, 0.0};
        const Vec2 s = exact_source_1d(p, x, 7.0, geom, par_half);
        const double expect =
            2.0 * p.rho * par_half.k2() * geom.db_dx(x) / geom.b(x);
        CHECK(s[0] == 0.0);
        CHECK(s[1] == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("2D conversions and fluxes") {
    SUBCASE("rest state") {
        const Vec3 u = prim_to_cons_2d({1.0, 0.0, 0.0}, par_half);
        CHECK(u[0] == 1.0);
        CHECK(u[1] == 0.0);
        CHECK(u[2] == 0.0);
        const Vec3 fx = flux_2d_x({1.0, 0.0, 0.0}, par_half);
        CHECK(fx[0] == 0.0);
        CHECK(fx[1] == doctest::Approx(0.25));
        CHECK(fx[2] == 0.0);
        const Vec3 fy = flux_2d_y({1.0, 0.0, 0.0}, par_half);
        CHECK(fy[1] == 0.0);
        CHECK(fy[2] == doctest::Approx(0.25));
    }

    SUBCASE("y-invariant data embeds the 1D flux") {
        auto g = testing::rng(14);
        for (int trial = 0; trial < 200; ++trial) {
            const Prim1 p = testing::random_prim_1d(g, par_half);
            const Vec3 f2 = flux_2d_x({p.rho, p.u, 0.0}, par_half);
            const Vec2 f1 = flux_1d(p, par_half);
            CHECK(f2[0] == f1[0]);
            CHECK(f2[1] == f1[1]);
            CHECK(f2[2] == 0.0);
        }
    }

    SUBCASE("roundtrip on random admissible 2D states") {
        auto g = testing::rng(15);
        for (int trial = 0; trial < 10000; ++trial) {
            const Prim2 p = testing::random_prim_2d(g, par_half);
            const Prim2 q = cons_to_prim_2d(prim_to_cons_2d(p, par_half), par_half);
            CHECK(q.rho == doctest::Approx(p.rho).epsilon(1e-13));
            CHECK(q.u == doctest::Approx(p.u).epsilon(1e-13).scale(1.0));
            CHECK(q.v == doctest::Approx(p.v).epsilon(1e-13).scale(1.0));
        }
    }

    SUBCASE("x/y flux symmetry under coordinate swap") {
        auto g = testing::rng(16);
        for (int trial = 0; trial < 200; ++trial) {
            const Prim2 p = testing::random_prim_2d(g, par_half);
            const Vec3 fx = flux_2d_x(p, par_half);
            const Vec3 fy = flux_2d_y({p.rho, p.v, p.u}, par_half);
            CHECK(fx[0] == fy[0]);
            CHECK(fx[1] == fy[2]);
            CHECK(fx[2] == fy[1]);
        }
    }
}

TEST_CASE("2D exact source matches components") {
    Geometry geom;
    geom.regime = Regime::expanding;
    geom.kappa = 2.0;
    geom.b_kind = BProfile::flat;
    const Prim2 p{1.5, 0.2, -0.3};
    const double t = 2.0;
    const Vec3 s = exact_source_2d(p, 0.1, 0.6, t, geom, par_half);
    const double da = geom.kappa / t;
    const double v2 = p.u * p.u + p.v * p.v;
    CHECK(s[0] == doctest::Approx(-da * p.rho * (1.0 + 3.0 * 0.25 + (1.0 - 0.25) * v2))
                      .epsilon(1e-14));
    CHECK(s[1] == doctest::Approx(-2.0 * p.rho * da * 1.25 * p.u).epsilon(1e-14));
    CHECK(s[2] == doctest::Approx(-2.0 * p.rho * da * 1.25 * p.v).epsilon(1e-14));
}
