#pragma once

// Hypersurface machinery for the complex space forms M^2_C(c): homogeneous
// almost contact instances, the restriction of the ambient parallel spinor,
// the Clifford commutator lemma, the compatibility equations
//
//   (G)  g(R(X,Y)Z,W) = c{ g(Y,Z)g(X,W) - g(X,Z)g(Y,W) + g(XY,Z)g(XX,W)
//                          - g(XX,Z)g(XY,W) - 2 g(XX,Y)g(XZ,W) }
//                        + g(EY,Z)g(EX,W) - g(EX,Z)g(EY,W)
//   (C)  d^nabla E(X,Y) = c( eta(X) X Y - eta(Y) X X - 2 g(X X, Y) xi )
//   (3)  (nabla_X X)Y = eta(Y) EX - g(EX,Y) xi
//   (4)  nabla_X xi = X E X
//
// (X denotes the almost contact endomorphism), and the Gauss-iff-Codazzi
// equivalence probe.  Everything here is exact frame algebra on
// structure-constant models; no finite differences.

#include <array>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "spincgeom/clifford.hpp"
#include "spincgeom/models.hpp"
#include "spincgeom/spin_connection.hpp"

namespace spincgeom {

// Homogeneous almost contact metric instance with frame {e1, e2 = X e1,
// e3 = xi}, a constant-Christoffel connection and a spin^c auxiliary
// connection whose curvature is Omega(e1, e2) = -6c, other entries zero.
struct ContactInstance {
    double c = 0.0;      // ambient holomorphic sectional curvature / 4
    ModelSpec intrinsic; // EKT model providing the Christoffel table
    ChristoffelTable table;
    Eigen::Matrix3d Xfield;  // almost contact endomorphism
    Eigen::Vector3d xi;      // Reeb field (frame components)
    AuxConnection aux;
    Eigen::Matrix3d shape;  // canonical shape candidate for the instance

    // The Sasakian instance carrying the hypersurface spinor of M^2_C(c):
    // intrinsically E(4c + 4, -1) with A(e3) = -3ci and E = Id - c eta (x) xi.
    static ContactInstance sasaki(double c);

    // E(kappa, tau) with its canonical structure viewed as an instance for
    // c = (kappa - 4 tau^2) / 6 and E = -tau Id: the spinor hypotheses hold
    // but the Codazzi equation for M^2_C(c) fails (the non-immersibility
    // counterexample).
    static ContactInstance canonical(double kappa, double tau);
};

// Almost contact + Sasakian structure identities:
// X^2 = -Id + eta (x) xi, X xi = 0, |xi| = 1, nabla_X xi and (nabla_X X)Y.
double structure_residual(const ContactInstance& inst);

// Curvature of the auxiliary connection from the frame brackets versus the
// required form -6c g(X e_i, e_j).
double aux_curvature_residual(const ContactInstance& inst);

// Coefficients of E(e_i) . E(e_j) - E(e_j) . E(e_i) as a Clifford action:
// 2 (E e_i) x (E e_j) (cross product of the i-th and j-th columns).
Eigen::Vector3d commutator_coeffs(const Eigen::Matrix3d& E, int i, int j);

// Max deviation between the coefficient formula and the brute-force matrix
// commutator in the 3-dimensional representation, over random spinors.
double commutator_lemma_residual(const Eigen::Matrix3d& E, std::mt19937& rng,
                                 int samples = 16);

struct ParallelRestrictionResidual {
    double killing = 0.0;    // max_i |nabla_i phi + 1/2 (E e_i) . phi|
    double eigen = 0.0;      // |xi . phi + i phi|
    double curvature = 0.0;  // |Omega . phi - 6ci phi|
    double max_residual() const;
};

// Residuals of the Lemma-type restriction facts for phi = (1, 0) and a given
// shape candidate E on the instance.  Throws std::invalid_argument when the
// frame is not adapted (X e1 != e2).
ParallelRestrictionResidual restrict_parallel_residual(const ContactInstance& inst,
                                                       const Eigen::Matrix3d& E);

// d^nabla E(e_i, e_j) = (nabla_{e_i} E) e_j - (nabla_{e_j} E) e_i with
// nabla_i E = [Gamma_i, E] for a frame-constant E.
Eigen::Vector3d dnabla_shape(const ContactInstance& inst, const Eigen::Matrix3d& E,
                             int i, int j);

// Right hand side of (C).
Eigen::Vector3d codazzi_rhs_csf(const ContactInstance& inst, int i, int j);

struct CsfCompatibilityResidual {
    double gauss = 0.0;    // (G) over all 81 index quadruples
    double codazzi = 0.0;  // (C) over frame pairs
    double cond3 = 0.0;    // (3)
    double cond4 = 0.0;    // (4)
    double max_residual() const;
};

CsfCompatibilityResidual check_compatibility_csf(const ContactInstance& inst,
                                                 const Eigen::Matrix3d& E);

// Shape operator and mean curvature of the Sasaki hypersurface family:
// E = Id - c eta (x) xi, H = (3 - c) / 3.
Eigen::Matrix3d sasaki_shape(double c);
double sasaki_mean_curvature(double c);

// Optional replacement for dnabla_shape used to inject synthetic Codazzi
// violations into the probe.
using DnablaOverride = std::function<Eigen::Vector3d(int, int)>;

// Gauss-iff-Codazzi equivalence probe.  For each X = e_m the spinorial Ricci
// identity applied to the generalized Killing spinor yields
//   1/4 sum_k e_k.(EX . Ee_k - Ee_k . EX).phi - 1/2 Ric(X).phi
//     + (i/2)(X _| Omega).phi  =  1/2 sum_k e_k . d^nabla E(e_k, X) . phi;
// the left side collects the Gauss-type terms (curvature, quadratic shape,
// c), the right side the Codazzi terms.  Pairing both sides against the real
// orthonormal spinor frame {phi, e_1.phi, e_2.phi, e_3.phi} gives twelve
// scalar identities; `residual` is their difference.  A synthetic Codazzi
// bump moves `codazzi_side` by exactly the pairing coefficient, which is the
// predicted propagation to the Gauss side.
struct ProbeReport {
    Eigen::Matrix<double, 3, 4> gauss_side;
    Eigen::Matrix<double, 3, 4> codazzi_side;
    Eigen::Matrix<double, 3, 4> residual;
    double max_residual() const;
};

// Throws std::domain_error when the spinor hypotheses are not satisfied by
// (inst, E) within `hypothesis_tol`.
ProbeReport gauss_iff_codazzi_probe(const ContactInstance& inst,
                                    const Eigen::Matrix3d& E,
                                    const DnablaOverride& override_dE = nullptr,
                                    double hypothesis_tol = 1e-8);

}  // namespace spincgeom
