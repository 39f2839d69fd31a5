#include <doctest.h>

#include <cmath>
#include <random>

#include "spincgeom/clifford.hpp"
#include "spincgeom/correspondence.hpp"

using namespace spincgeom;

TEST_CASE("sister parameters: H^2 x R minimal graph <-> Nil_3") {
    SisterParams p;
    p.kappa1 = -1.0;
    p.tau1 = 0.0;
    p.H1 = 0.5;
    p.tau2 = 0.5;
    SisterData d = solve_sister(p);
    CHECK(std::abs(d.kappa2 - 0.0) < 1e-15);
    CHECK(std::abs(d.H2 - 0.0) < 1e-15);
    CHECK(std::abs(d.theta - (-M_PI / 2.0)) < 1e-15);

    // Bundle quantity is invariant.
    CHECK(p.kappa1 - 4 * p.tau1 * p.tau1 ==
          doctest::Approx(d.kappa2 - 4 * p.tau2 * p.tau2).epsilon(1e-15));
    // H^2 + tau^2 is invariant.
    CHECK(p.H1 * p.H1 + p.tau1 * p.tau1 ==
          doctest::Approx(d.H2 * d.H2 + p.tau2 * p.tau2).epsilon(1e-15));
}

TEST_CASE("round-trip inversion") {
    std::mt19937 rng(12001);
    std::uniform_real_distribution<double> un(-1.5, 1.5);
    int checked = 0;
    while (checked < 200) {
        SisterParams p;
        p.kappa1 = un(rng);
        p.tau1 = un(rng);
        p.H1 = un(rng);
        p.tau2 = un(rng);
        if (std::abs(p.kappa1 - 4 * p.tau1 * p.tau1) < 1e-3) continue;
        if (p.H1 * p.H1 + p.tau1 * p.tau1 - p.tau2 * p.tau2 < 1e-6) continue;
        SisterData d = solve_sister(p);

        SisterParams back;
        back.kappa1 = d.kappa2;
        back.tau1 = p.tau2;
        back.H1 = d.H2;
        back.tau2 = p.tau1;
        back.sign = p.H1 >= 0 ? +1 : -1;
        SisterData d2 = solve_sister(back);
        CHECK(std::abs(d2.kappa2 - p.kappa1) < 1e-12);
        CHECK(std::abs(d2.H2 - p.H1) < 1e-12);
        // Phases cancel modulo 2 pi.
        double s = d.theta + d2.theta;
        s = std::remainder(s, 2.0 * M_PI);
        CHECK(std::abs(s) < 1e-12);
        ++checked;
    }
}

TEST_CASE("parameter preconditions") {
    SisterParams p;
    p.kappa1 = -1.0;
    p.tau1 = 0.1;
    p.H1 = 0.0;
    p.tau2 = 2.0;  // discriminant negative
    CHECK_THROWS_AS(solve_sister(p), std::domain_error);
    p.tau1 = 0.0;
    p.tau2 = 0.0;  // phase undefined at tau1 = H1 = 0
    CHECK_THROWS_AS(solve_sister(p), std::domain_error);
    p.tau1 = 0.5;
    p.tau2 = 0.25;
    p.sign = 2;
    CHECK_THROWS_AS(solve_sister(p), std::invalid_argument);
}

TEST_CASE("rotations of tensors and spinors") {
    std::mt19937 rng(12002);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::Matrix2d A;
        A << 1 + std::abs(n(rng)), 0.4 * n(rng), 0, 1 + std::abs(n(rng));
        Eigen::Matrix2d g = A.transpose() * A;
        double t1 = n(rng), t2 = n(rng);
        Eigen::Matrix2d R1 = rotation_theta(g, t1), R2 = rotation_theta(g, t2);
        CHECK((R1 * R2 - rotation_theta(g, t1 + t2)).norm() < 1e-12);
        CHECK((rotation_theta(g, 0.0) - Eigen::Matrix2d::Identity()).norm() < 1e-14);
        // g-orthogonal.
        CHECK((R1.transpose() * g * R1 - g).norm() < 1e-12);

        // Shape rotation preserves the trace and round-trips.
        Eigen::Matrix2d sym;
        double a = n(rng), b = n(rng), c = n(rng);
        sym << a, b, b, c;
        Eigen::Matrix2d shape1 = g.inverse() * sym;  // g-symmetric mixed-index operator
        double H1 = 0.5 * shape1.trace(), H2 = n(rng);
        Eigen::Matrix2d shape2 = rotate_shape(g, shape1, H1, H2, t1);
        CHECK(0.5 * shape2.trace() == doctest::Approx(H2).epsilon(1e-12));
        Eigen::Matrix2d back = rotate_shape(g, shape2, H2, H1, -t1);
        CHECK((back - shape1).norm() < 1e-12);

        // Spinor rotation is unitary on each chirality component.
        Eigen::Vector2cd phi;
        phi << Complex(n(rng), n(rng)), Complex(n(rng), n(rng));
        Eigen::Vector2cd rphi = rotate_spinor(phi, t1);
        CHECK(std::abs(rphi.norm() - phi.norm()) < 1e-13);
        CHECK((rotate_spinor(rphi, -t1) - phi).norm() < 1e-13);
        CHECK(std::abs(rphi(0) - phi(0)) < 1e-15);  // + part fixed
        CHECK(std::abs(rphi(1) - std::exp(Complex(0, t1)) * phi(1)) < 1e-13);
    }
}

TEST_CASE("verify_sister on the minimal vertical plane in Nil_3") {
    SisterParams p;
    p.kappa1 = 0.0;
    p.tau1 = 0.5;
    p.H1 = 0.0;
    p.tau2 = -0.5;
    SurfaceCheckOptions opts;
    opts.grid = 24;
    SisterReport rep = verify_sister(builtin_entry("nil3-vertical-geodesic-cylinder"),
                                     p, opts);
    CHECK(rep.original.max_residual() < 5e-4);
    CHECK(rep.sister.max_residual() < 5e-4);
    CHECK(std::abs(rep.data.kappa2) < 1e-14);
    CHECK(std::abs(rep.data.H2) < 1e-14);
}

TEST_CASE("negative control: a wrong phase breaks the sister equations") {
    SisterParams p;
    p.kappa1 = 0.0;
    p.tau1 = 0.5;
    p.H1 = 0.0;
    p.tau2 = -0.5;
    p.theta_offset = 0.1;
    SurfaceCheckOptions opts;
    opts.grid = 24;
    SisterReport rep = verify_sister(builtin_entry("nil3-vertical-geodesic-cylinder"),
                                     p, opts);
    CHECK(rep.sister.max_residual() > 1e-2);
}

TEST_CASE("the CMC gate rejects non-CMC input") {
    SisterParams p;
    p.kappa1 = 1.0;
    p.tau1 = 1.0;
    p.H1 = 0.0;
    p.tau2 = 0.5;
    SurfaceCheckOptions opts;
    opts.grid = 16;
    // berger-chart-disk is not CMC (stddev of H is order 0.3).
    CHECK_THROWS_AS(verify_sister(builtin_entry("berger-chart-disk"), p, opts),
                    std::domain_error);
}
