#pragma once

// The sister correspondence between simply connected constant mean curvature
// surfaces of E(kappa1, tau1) and E(kappa2, tau2) with the same bundle
// quantity kappa - 4 tau^2: given (H1, tau1) and the target tau2, the sister
// has
//   H2^2 = H1^2 + tau1^2 - tau2^2,   kappa2 = kappa1 - 4 tau1^2 + 4 tau2^2,
// and the induced data transforms by the phase theta = arg((tau2 + i H2) /
// (tau1 + i H1)):
//   g2 = g1,  f2 = f1,  T2 = R_theta T1,
//   E2 = H2 Id + R_theta (E1 - H1 Id),
//   phi2 = phi1^+ + e^{i theta} phi1^-.
// verify_sister checks that the transformed quadruple again satisfies the
// compatibility equations of E(kappa2, tau2).

#include "spincgeom/surfaces_ekt.hpp"

namespace spincgeom {

struct SisterParams {
    double kappa1 = 0.0;
    double tau1 = 0.0;
    double H1 = 0.0;
    double tau2 = 0.0;
    int sign = +1;              // branch of H2 = sign * sqrt(H1^2 + tau1^2 - tau2^2)
    double theta_offset = 0.0;  // deliberate phase error (negative control)
};

struct SisterData {
    double kappa2 = 0.0;
    double H2 = 0.0;
    double theta = 0.0;  // principal branch (-pi, pi]
};

// Throws std::domain_error when H1^2 + tau1^2 - tau2^2 < 0 or tau1 = H1 = 0.
SisterData solve_sister(const SisterParams& params);

// Rotation by theta acting on mixed-index tangent tensors of the metric g.
Eigen::Matrix2d rotation_theta(const Eigen::Matrix2d& g, double theta);

// E2 = H2 Id + R_theta (E1 - H1 Id) (mixed-index shape operators).
Eigen::Matrix2d rotate_shape(const Eigen::Matrix2d& g, const Eigen::Matrix2d& shape1,
                             double H1, double H2, double theta);

// phi2 = phi1^+ + e^{i theta} phi1^- in the adapted gauge.
Eigen::Vector2cd rotate_spinor(const Eigen::Vector2cd& phi, double theta);

// Point data of the sister surface derived from the data of the original.
SurfacePointFn sister_point_fn(const SurfacePointFn& fn, const SisterParams& params,
                               const SisterData& data);

struct SisterReport {
    SisterData data;
    CompatibilityResidual original;  // compatibility in E(kappa1, tau1)
    CompatibilityResidual sister;    // compatibility of transformed data in E(kappa2, tau2)
};

// Verifies that the original data is compatible and CMC (stddev of H over the
// sample grid <= cmc_tol, mean within cmc_tol of params.H1; violations throw
// std::domain_error), then checks the transformed data in E(kappa2, tau2).
SisterReport verify_sister(const SurfacePointFn& fn, const Domain& dom,
                           const SisterParams& params, const SurfaceCheckOptions& opts,
                           double cmc_tol = 1e-3);

SisterReport verify_sister(const CatalogEntry& entry, const SisterParams& params,
                           const SurfaceCheckOptions& opts, double cmc_tol = 1e-3);

}  // namespace spincgeom
