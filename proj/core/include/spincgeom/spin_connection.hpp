#pragma once

// Spin^c connection of E(kappa, tau) in the canonical homogeneous frame and
// the algebraic verification of the Killing spinor equation
//   nabla_X psi = (tau / 2) X . psi
// together with its standard consequences (Dirac eigenvalue, the curvature
// action of the auxiliary bundle, the Schroedinger-Lichnerowicz identity and
// the spinorial Ricci identity).

#include <complex>

#include <Eigen/Dense>

#include "spincgeom/clifford.hpp"
#include "spincgeom/models.hpp"

namespace spincgeom {

// Chirality of the structure: Canonical has e3 . psi = -i psi, AntiCanonical
// has e3 . psi = +i psi.
enum class Chirality { Canonical, AntiCanonical };

// Auxiliary connection 1-form evaluated on the canonical frame (purely
// imaginary values).
struct AuxConnection {
    std::array<Complex, 3> a{};  // a[i] = A(e_i)

    static AuxConnection canonical(const ModelSpec& spec);
    static AuxConnection anti_canonical(const ModelSpec& spec);
    static AuxConnection make(const ModelSpec& spec, Chirality ch);
};

// Spinor covariant derivative in direction e_i for a spinor field whose
// frame components have derivative `frame_deriv` at the point:
//   frame_deriv + 1/4 sum_{j,k} Gamma(i,j,k) e_j . e_k . psi + 1/2 A(e_i) psi
Spinor spinor_cov_deriv(const ModelSpec& spec, const AuxConnection& aux, int dir,
                        const Spinor& psi, const Spinor& frame_deriv);

// Connection matrix K_i with nabla_{e_i} psi = K_i psi for frame-constant psi.
CMatrix spinor_connection_matrix(const ModelSpec& spec, const AuxConnection& aux, int dir);

// Curvature 2-form of the auxiliary bundle in the canonical frame:
// Omega(e1, e2) = -(kappa - 4 tau^2), all other independent entries zero.
Eigen::Matrix3d aux_curvature(const ModelSpec& spec);

// Omega . psi
Spinor aux_curvature_action(const ModelSpec& spec, const Spinor& psi);

struct KillingVerdict {
    Spinor psi;                  // unit spinor with e3 . psi = -+ i psi
    double eigen_residual;       // |e3 . psi +- i conj(psi)|
    double killing_residual;     // max_i |nabla_i psi - (tau/2) e_i . psi|
    double dirac_residual;       // |D psi + (3 tau / 2) psi|
    double eq_curvature_residual;    // |Omega . psi -+ i (kappa - 4 tau^2) psi|
    double lichnerowicz_residual;    // |D^2 - nabla*nabla - S/4 - (i/2) Omega . |
    double ricci_identity_residual;  // max_X |Ric(X).psi - i(X _| Omega).psi - 2 tau^2 X.psi|
    double eq5_residual;  // max_X |sum_k e_k . R(e_k, X) psi - 1/2 Ric(X).psi + (i/2)(X _| Omega).psi|
    double max_residual() const;
};

KillingVerdict verify_killing(const ModelSpec& spec, Chirality ch = Chirality::Canonical);

}  // namespace spincgeom
