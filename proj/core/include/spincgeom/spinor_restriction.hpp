#pragma once

// Restriction of the ambient Killing / parallel spinor of E(kappa, tau) to an
// immersed surface, in the adapted gauge: spinor components refer to the
// adapted frame (t1, t2, nu), where the bullet action X . phi = (X . nu . psi)
// is realized by the constant matrices B_a = gamma_a gamma_3 of the n = 3
// representation, conjugation is phi -> s3 phi, and the gauge transport from
// the coordinate-model frame is the spin lift of the frame rotation.
//
// The verified identities (all on interior sample grids):
//   nabla_X phi + 1/2 II(X) . phi - i (tau/2) X . conj(phi) = 0
//   D phi = H phi - i tau conj(phi)     (+ the ambient-assembled version)
//   |phi| = 1
//   Omega(t1, t2) = -(kappa - 4 tau^2) f
//   f, T recovered from phi match the induced geometric data
//   T . phi = -f phi + conj(phi);  i phi - i f conj(phi) + JT . phi = 0
//   energy-momentum tensor: trace, asymmetry, and reconstruction of nabla phi

#include <Eigen/Dense>

#include "spincgeom/clifford.hpp"
#include "spincgeom/surfaces_ekt.hpp"

namespace spincgeom {

// Bullet matrices of the adapted gauge: index 0, 1 -> t1., t2.; index 2 is
// the Clifford action of the unit normal (nu . , not a bullet).
const Eigen::Matrix2cd& bullet_matrix(int i);

// conj(phi) = phi^+ - phi^- in the adapted gauge.
Eigen::Vector2cd restricted_conjugate(const Eigen::Vector2cd& phi);

// f and T (adapted-frame components) extracted from a restricted spinor.
double extract_f(const Eigen::Vector2cd& phi);
Eigen::Vector2d extract_T(const Eigen::Vector2cd& phi);

// Energy-momentum data computed algebraically from phi and the two
// covariant derivatives nabla_{t_a} phi.
struct EnergyMomentum {
    Eigen::Matrix2d Tplus, Tminus;  // T^phi_+-(t_a, t_b)
    Eigen::Matrix2d Tphi;           // reconstruction tensor
    double trace_residual;          // |tr T_+- + H |phi^-+|^2| (max of the two)
    double asym_residual;           // antisymmetric-part identity (max)
    double reconstruction_residual; // |nabla_a phi + T^phi(t_a).phi - i(tau/2) t_a.conj phi|
};

EnergyMomentum energy_momentum(const Eigen::Vector2cd& phi,
                               const Eigen::Vector2cd& dphi1,
                               const Eigen::Vector2cd& dphi2, double tau, double H);

// Restricted spinor with its gauge data at a surface point.
struct GaugePoint {
    SurfacePointData sd;
    Eigen::Matrix3d Q;       // adapted frame in canonical-frame components
    Eigen::Matrix2cd U;      // spin lift of Q
    Eigen::Vector2cd phi;    // U^dagger psi, psi the ambient canonical spinor
};

GaugePoint gauge_at(const SurfaceField& field, double u, double v,
                    const Eigen::Matrix2cd& align);

struct RestrictionResidual {
    double eq_killing = 0.0;   // restricted Killing equation
    double dirac = 0.0;        // D phi - H phi + i tau conj(phi)
    double dirac_gauss = 0.0;  // D phi - H phi - tau nu . phi (ambient assembly)
    double norm_drift = 0.0;
    double omega_pullback = 0.0;
    double f_extract = 0.0;
    double T_extract = 0.0;
    double algebraic = 0.0;  // T.phi and theta-rotation identities
    double em_trace = 0.0;
    double em_asym = 0.0;
    double em_reconstruction = 0.0;
    double max_residual() const;
};

// Scaling applied to the spinor field before the checks; the identity scaling
// verifies the restriction, a nonconstant scaling is the negative control.
using SpinorScaling = std::function<Complex(double, double)>;

RestrictionResidual check_restriction(const SurfaceField& field,
                                      const SurfaceCheckOptions& opts,
                                      const SpinorScaling& scaling = nullptr);

}  // namespace spincgeom
