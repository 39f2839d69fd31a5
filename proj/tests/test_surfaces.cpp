#include <doctest.h>

#include <cmath>
#include <random>

#include "spincgeom/surfaces_ekt.hpp"

using namespace spincgeom;

TEST_CASE("rotate_J is a g-compatible rotation by pi/2") {
    std::mt19937 rng(10001);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::Matrix2d A;
        A << 1 + std::abs(n(rng)), 0.3 * n(rng), 0, 1 + std::abs(n(rng));
        Eigen::Matrix2d g = A.transpose() * A;  // SPD
        Eigen::Matrix2d J = rotate_J(g);
        CHECK((J * J + Eigen::Matrix2d::Identity()).norm() < 1e-12);
        Eigen::Vector2d X(n(rng), n(rng));
        CHECK(std::abs(double(X.transpose() * g * (J * X))) < 1e-12);
        CHECK(double((J * X).transpose() * g * (J * X)) ==
              doctest::Approx(double(X.transpose() * g * X)).epsilon(1e-12));
    }
}

TEST_CASE("induced point data on the totally geodesic slice") {
    SurfaceField field(builtin_entry("slice-h2xr"), 1e-5);
    SurfacePointData d = field.at(0.1, -0.2);
    // The slice is totally geodesic and horizontal: E = 0, f = 1, T = 0, H = 0.
    CHECK(d.shape.norm() < 1e-8);
    CHECK(d.f == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d.T.norm() < 1e-10);
    CHECK(std::abs(d.H) < 1e-8);
    // Adapted frame is orthonormal for the ambient metric.
    Eigen::Matrix3d G = field.chart().metric(d.p);
    Eigen::Matrix3d F;
    F.col(0) = d.t1; F.col(1) = d.t2; F.col(2) = d.nu;
    CHECK((F.transpose() * G * F - Eigen::Matrix3d::Identity()).norm() < 1e-10);
}

TEST_CASE("Gauss curvature oracle on the hyperbolic slice") {
    SurfaceField field(builtin_entry("slice-h2xr"), 1e-5);
    SurfacePointFn fn = field.fn();
    for (auto [u, v] : {std::pair{0.0, 0.0}, {0.2, -0.3}, {-0.35, 0.1}})
        CHECK(gauss_curvature(fn, u, v, 1e-3) == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("minimal vertical plane has H = 0 and f = 0") {
    SurfaceField field(builtin_entry("nil3-vertical-geodesic-cylinder"), 1e-5);
    SurfacePointData d = field.at(0.3, -0.1);
    CHECK(std::abs(d.H) < 1e-8);
    CHECK(std::abs(d.f) < 1e-10);
    CHECK(std::abs(d.f * d.f + double(d.T.transpose() * d.g * d.T) - 1.0) < 1e-10);
}

TEST_CASE("compatibility residuals of the built-in catalog") {
    SurfaceCheckOptions opts;
    opts.grid = 64;  // the advertised residual bounds are for the default grid
    for (const CatalogEntry& e : builtin_catalog()) {
        INFO("surface: ", e.name);
        CompatibilityResidual r = check_compatibility_ekt(e, opts);
        double tol = e.expected_max_residual.value_or(5e-4);
        CHECK(r.gauss < tol);
        CHECK(r.codazzi < tol);
        CHECK(r.cond1 < tol);
        CHECK(r.cond2 < tol);
        CHECK(r.unit < 1e-10);
        CHECK(r.max_residual() < tol);
    }
}

TEST_CASE("catalog mean curvature values") {
    SurfaceCheckOptions opts;
    opts.grid = 16;
    CompatibilityResidual plane =
        check_compatibility_ekt(builtin_entry("nil3-vertical-geodesic-cylinder"), opts);
    CHECK(std::abs(plane.mean_H) < 1e-8);
    CHECK(plane.stddev_H < 1e-8);
    // The unit vertical cylinder in Nil_3 is CMC with H = 1/2.
    CompatibilityResidual cyl =
        check_compatibility_ekt(builtin_entry("nil3-vertical-cylinder"), opts);
    CHECK(std::abs(std::abs(cyl.mean_H) - 0.5) < 1e-8);
    CHECK(cyl.stddev_H < 1e-7);  // finite-difference noise in the jets
}

TEST_CASE("negative control: corrupted field data violates the equations") {
    SurfaceField field(builtin_entry("berger-chart-disk"), 1e-5);
    SurfacePointFn fn = field.fn();
    SurfacePointFn corrupted = [fn](double u, double v) {
        SurfacePointData d = fn(u, v);
        d.f *= 1.0 + 0.05 * std::sin(3.0 * u);  // breaks (2) and the unit relation
        return d;
    };
    SurfaceCheckOptions opts;
    opts.grid = 16;
    CompatibilityResidual r =
        check_compatibility_ekt(corrupted, field.spec(), field.domain(), opts);
    CHECK(r.cond2 > 1e-2);
    CHECK(r.unit > 1e-3);
}

TEST_CASE("field-step convergence at second order") {
    const CatalogEntry& e = builtin_entry("berger-chart-disk");
    SurfaceField field(e, 1e-5);
    SurfaceCheckOptions coarse, fine;
    coarse.grid = fine.grid = 16;
    coarse.field_step = 0.02;
    fine.field_step = 0.01;
    CompatibilityResidual rc = check_compatibility_ekt(field.fn(), field.spec(),
                                                       field.domain(), coarse);
    CompatibilityResidual rf = check_compatibility_ekt(field.fn(), field.spec(),
                                                       field.domain(), fine);
    for (auto [a, b] : {std::pair{rc.gauss, rf.gauss}, {rc.codazzi, rf.codazzi},
                        {rc.cond1, rf.cond1}, {rc.cond2, rf.cond2}}) {
        double order = std::log2(a / b);
        INFO("coarse ", a, " fine ", b);
        CHECK(order > 1.8);
    }
}

TEST_CASE("option preconditions") {
    const CatalogEntry& e = builtin_entry("slice-h2xr");
    SurfaceCheckOptions opts;
    opts.grid = 2;
    CHECK_THROWS_AS(check_compatibility_ekt(e, opts), std::invalid_argument);
    opts.grid = 16;
    opts.field_step = 10.0;  // stencil cannot fit in the domain
    CHECK_THROWS_AS(check_compatibility_ekt(e, opts), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceField(e, 0.0), std::invalid_argument);
}
