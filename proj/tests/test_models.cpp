#include <doctest.h>

#include <random>

#include "spincgeom/models.hpp"

using namespace spincgeom;

namespace {

Eigen::Vector3d random_point(const EktChart& chart, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (;;) {
        Eigen::Vector3d p(u(rng), u(rng), u(rng));
        if (chart.in_domain(p(0), p(1))) return p;
    }
}

}  // namespace

TEST_CASE("model spec constructors guard their domains") {
    CHECK_THROWS_AS(ModelSpec::ekt(1.0, 0.5), std::domain_error);  // kappa = 4 tau^2
    CHECK_THROWS_AS(ModelSpec::csf(0.0), std::domain_error);
    CHECK(ModelSpec::ekt(-1.0, 0.0).bundle_quantity() == -1.0);
    CHECK(ModelSpec::ekt(2.0, 1.0).bundle_quantity() == -2.0);
    // The homogeneous tau = 0 frame exists only for kappa < 0.
    CHECK_THROWS_AS(christoffel_ekt(ModelSpec::ekt(1.0, 0.0)), std::domain_error);
}

TEST_CASE("homogeneous Christoffel table of E(kappa, tau)") {
    ModelSpec spec = ModelSpec::ekt(1.0, 0.25);
    ChristoffelTable t = christoffel_ekt(spec);
    double sigma = spec.tau - spec.kappa / (2.0 * spec.tau);
    CHECK(t.entry(0, 1, 2) == doctest::Approx(spec.tau).epsilon(1e-15));
    CHECK(t.entry(0, 2, 1) == doctest::Approx(-spec.tau).epsilon(1e-15));
    CHECK(t.entry(1, 0, 2) == doctest::Approx(-spec.tau).epsilon(1e-15));
    CHECK(t.entry(1, 2, 0) == doctest::Approx(spec.tau).epsilon(1e-15));
    CHECK(t.entry(2, 0, 1) == doctest::Approx(-sigma).epsilon(1e-15));
    CHECK(t.entry(2, 1, 0) == doctest::Approx(sigma).epsilon(1e-15));

    // Metric compatibility: entry(i, j, k) antisymmetric in (j, k).
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(t.entry(i, j, k) == doctest::Approx(-t.entry(i, k, j)).epsilon(1e-15));
}

TEST_CASE("vertical field equation nabla_X xi = tau X ^ xi") {
    std::mt19937 rng(8001);
    std::normal_distribution<double> n;
    for (auto [kappa, tau] : {std::pair{1.0, 0.25}, {2.0, 1.0}, {-1.0, 0.25}, {-1.0, 0.0}}) {
        ModelSpec spec = ModelSpec::ekt(kappa, tau);
        for (int trial = 0; trial < 50; ++trial) {
            Eigen::Vector3d X(n(rng), n(rng), n(rng));
            CHECK(vertical_derivative_check(spec, X) < 1e-14 * (1 + X.norm()));
        }
    }
}

TEST_CASE("curvature from the table matches the closed forms") {
    for (auto [kappa, tau] : {std::pair{1.0, 0.25}, {2.0, 1.0}, {-1.0, 0.25}, {-2.0, 0.0}}) {
        ModelSpec spec = ModelSpec::ekt(kappa, tau);
        ChristoffelTable t = christoffel_ekt(spec);

        // Sectional curvatures: K(e1, e2) = kappa - 3 tau^2, mixed = tau^2.
        CHECK(riemann_component(t, 0, 1, 1, 0) ==
              doctest::Approx(kappa - 3 * tau * tau).epsilon(1e-13));
        CHECK(riemann_component(t, 0, 2, 2, 0) == doctest::Approx(tau * tau).epsilon(1e-13));
        CHECK(riemann_component(t, 1, 2, 2, 1) == doctest::Approx(tau * tau).epsilon(1e-13));

        // Symmetries of a curvature tensor.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        double r = riemann_component(t, i, j, k, l);
                        CHECK(r == doctest::Approx(-riemann_component(t, j, i, k, l)).epsilon(1e-13));
                        CHECK(r == doctest::Approx(-riemann_component(t, i, j, l, k)).epsilon(1e-13));
                        CHECK(r == doctest::Approx(riemann_component(t, k, l, i, j)).epsilon(1e-13));
                    }

        // Ricci: (kappa - 2 tau^2, kappa - 2 tau^2, 2 tau^2); scalar 2 kappa - 2 tau^2.
        Eigen::Matrix3d ric = ricci_from_table(t);
        Eigen::Vector3d want(kappa - 2 * tau * tau, kappa - 2 * tau * tau, 2 * tau * tau);
        CHECK((ric - want.asDiagonal().toDenseMatrix()).norm() < 1e-12);
        CHECK(scalar_from_table(t) == doctest::Approx(2 * kappa - 2 * tau * tau).epsilon(1e-13));
        std::mt19937 rng(8002);
        std::normal_distribution<double> n;
        Eigen::Vector3d X(n(rng), n(rng), n(rng));
        CHECK((ric * X - ricci_ekt(spec, X)).norm() < 1e-12 * (1 + X.norm()));
    }
}

TEST_CASE("coordinate chart: frame, metric, Christoffels") {
    std::mt19937 rng(8003);
    for (auto [kappa, tau] : {std::pair{1.0, 0.25}, {-1.0, 0.25}, {-1.0, 0.0}, {2.0, 1.0}}) {
        EktChart chart{ModelSpec::ekt(kappa, tau)};
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::Vector3d p = random_point(chart, rng);
            Eigen::Matrix3d G = chart.metric(p);
            Eigen::Matrix3d E = chart.frame(p);
            Eigen::Matrix3d Th = chart.coframe(p);
            CHECK((E.transpose() * G * E - Eigen::Matrix3d::Identity()).norm() < 1e-12);
            CHECK((Th * E - Eigen::Matrix3d::Identity()).norm() < 1e-12);

            // Analytic Christoffels against central differences of the metric.
            auto chr = chart.christoffels(p);
            auto fd = christoffels_fd(chart, p, 1e-6);
            for (int k = 0; k < 3; ++k) CHECK((chr[k] - fd[k]).norm() < 1e-7);

            // The chart gauge carries the canonical parallel/Killing spinor.
            CHECK(chart.killing_residual(p) < 1e-11);
        }
    }
}

TEST_CASE("chart domain boundary for kappa > 0") {
    EktChart chart{ModelSpec::ekt(2.0, 1.0)};  // domain x^2 + y^2 < 2
    CHECK(chart.in_domain(0.5, 0.5));
    CHECK(!chart.in_domain(1.2, 1.0));
    CHECK_THROWS_AS(chart.require_in_domain(2.0, 0.0), std::domain_error);
    CHECK(chart.lambda(0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("complex space form curvature tensor") {
    Eigen::Matrix4d J = csf_complex_structure();
    CHECK((J * J + Eigen::Matrix4d::Identity()).norm() < 1e-15);
    CHECK((J.transpose() * J - Eigen::Matrix4d::Identity()).norm() < 1e-15);

    for (double c : {1.0, -0.5, 2.0}) {
        ModelSpec spec = ModelSpec::csf(c);
        Eigen::Vector4d e1 = Eigen::Vector4d::Unit(0), e2 = Eigen::Vector4d::Unit(1),
                        e3 = Eigen::Vector4d::Unit(2);
        // Holomorphic sectional curvature 4c, totally real c.
        CHECK(curvature_csf(spec, e1, e2, e2, e1) == doctest::Approx(4 * c).epsilon(1e-14));
        CHECK(curvature_csf(spec, e1, e3, e3, e1) == doctest::Approx(c).epsilon(1e-14));

        std::mt19937 rng(8004);
        std::normal_distribution<double> n;
        for (int trial = 0; trial < 50; ++trial) {
            Eigen::Vector4d X, Y, Z, W;
            for (int k = 0; k < 4; ++k) { X(k) = n(rng); Y(k) = n(rng); Z(k) = n(rng); W(k) = n(rng); }
            double r = curvature_csf(spec, X, Y, Z, W);
            CHECK(r == doctest::Approx(-curvature_csf(spec, Y, X, Z, W)).epsilon(1e-12));
            CHECK(r == doctest::Approx(-curvature_csf(spec, X, Y, W, Z)).epsilon(1e-12));
            CHECK(r == doctest::Approx(curvature_csf(spec, Z, W, X, Y)).epsilon(1e-12));
            // First Bianchi identity.
            double b = curvature_csf(spec, X, Y, Z, W) + curvature_csf(spec, Y, Z, X, W) +
                       curvature_csf(spec, Z, X, Y, W);
            CHECK(std::abs(b) < 1e-11 * (1 + std::abs(r)));
            // Kaehler invariance: R(JX, JY, Z, W) = R(X, Y, Z, W).
            CHECK(curvature_csf(spec, J * X, J * Y, Z, W) == doctest::Approx(r).epsilon(1e-12));
        }
    }
}
