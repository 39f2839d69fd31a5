#pragma once

// Model geometries.
//
// EKT: the homogeneous 3-manifolds E(kappa, tau) with 4-dimensional isometry
// group (kappa - 4 tau^2 != 0), carrying a Riemannian fibration over the
// simply connected surface M^2(kappa) with bundle curvature tau.  In a
// canonical orthonormal frame {e1, e2, e3 = xi} the connection is given by a
// constant Christoffel table.  A coordinate model on (a subset of) R^3 is
// also provided:
//   lambda(x, y) = (1 + kappa (x^2 + y^2)/4)^{-1}
//   g = lambda^2 (dx^2 + dy^2) + (tau lambda (y dx - x dy) + dz)^2
// with chart domain x^2 + y^2 < 4/kappa when kappa > 0.
//
// CSF: the complex space forms M^2_C(c) of constant holomorphic sectional
// curvature 4c (c != 0), used through their curvature tensor in a Hermitian
// frame {e1, e2 = J e1, e3, e4 = J e3}.

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

namespace spincgeom {

struct ModelSpec {
    enum class Kind { EKT, CSF };
    Kind kind = Kind::EKT;
    double kappa = 0.0;  // base curvature (EKT)
    double tau = 0.0;    // bundle curvature (EKT)
    double c = 0.0;      // holomorphic sectional curvature / 4 (CSF)

    static ModelSpec ekt(double kappa, double tau);
    static ModelSpec csf(double c);

    // kappa - 4 tau^2, the curvature of the auxiliary line bundle up to sign.
    double bundle_quantity() const { return kappa - 4.0 * tau * tau; }
};

// Constant Christoffel table of a homogeneous frame:
//   entry(i, j, k) = <nabla_{e_i} e_j, e_k>.
struct ChristoffelTable {
    std::array<double, 27> v{};
    double& entry(int i, int j, int k) { return v[9 * i + 3 * j + k]; }
    double entry(int i, int j, int k) const { return v[9 * i + 3 * j + k]; }
    // Connection matrix G_i with (G_i)_{kj} = entry(i, j, k), acting on
    // constant-component vector fields: nabla_{e_i} v = G_i v.
    Eigen::Matrix3d matrix(int i) const;
};

// Canonical-frame Christoffel table of E(kappa, tau).  For tau != 0 this is
// the canonical fibration frame; for tau = 0 (requires kappa < 0) it is a
// homogeneous solvable frame of H^2(kappa) x R, since the product frame of
// S^2 x R is not constant-Christoffel.
ChristoffelTable christoffel_ekt(const ModelSpec& spec);

// Curvature operator R(e_i, e_j) (as a matrix acting on frame components)
// computed algebraically from a constant Christoffel table, with the
// convention R(X, Y) = [nabla_X, nabla_Y] - nabla_[X, Y].
Eigen::Matrix3d riemann_from_table(const ChristoffelTable& t, int i, int j);

// R_{ijkl} = <R(e_i, e_j) e_k, e_l> from the table.
double riemann_component(const ChristoffelTable& t, int i, int j, int k, int l);

// Ricci endomorphism computed from the table: Ric(X, Y) = sum_k <R(e_k, X) Y, e_k>.
Eigen::Matrix3d ricci_from_table(const ChristoffelTable& t);

double scalar_from_table(const ChristoffelTable& t);

// Closed-form Ricci endomorphism of E(kappa, tau):
// (kappa - 2 tau^2) on the horizontal plane, 2 tau^2 on the fibre.
Eigen::Vector3d ricci_ekt(const ModelSpec& spec, const Eigen::Vector3d& X);

// Residual of nabla_X xi = tau X ^ xi against the table.
double vertical_derivative_check(const ModelSpec& spec, const Eigen::Vector3d& X);

// Complex structure of the Hermitian frame {e1, e2 = J e1, e3, e4 = J e3}.
Eigen::Matrix4d csf_complex_structure();

// <R(X, Y) Z, W> in M^2_C(c) for frame components X, Y, Z, W.
double curvature_csf(const ModelSpec& spec, const Eigen::Vector4d& X,
                     const Eigen::Vector4d& Y, const Eigen::Vector4d& Z,
                     const Eigen::Vector4d& W);

// ---------------------------------------------------------------------------
// Coordinate model of E(kappa, tau).

class EktChart {
  public:
    explicit EktChart(const ModelSpec& spec);

    const ModelSpec& spec() const { return spec_; }

    bool in_domain(double x, double y) const;
    void require_in_domain(double x, double y) const;

    double lambda(double x, double y) const;

    Eigen::Matrix3d metric(const Eigen::Vector3d& p) const;
    // Partial derivatives of the metric with respect to x and y (z-invariant).
    std::array<Eigen::Matrix3d, 2> dmetric(const Eigen::Vector3d& p) const;

    // Coordinate Christoffel symbols: chr[k](i, j) = Gamma^k_{ij}.
    std::array<Eigen::Matrix3d, 3> christoffels(const Eigen::Vector3d& p) const;

    // Orthonormal frame (columns e1, e2, e3) and coframe (rows theta^1..3).
    Eigen::Matrix3d frame(const Eigen::Vector3d& p) const;
    Eigen::Matrix3d coframe(const Eigen::Vector3d& p) const;

    // Auxiliary connection 1-form of the canonical spin^c structure in the
    // coordinate gauge, returned as a complex covector: A(w) = a . w for a
    // coordinate vector w.  Its curvature is dA = -i (kappa - 4 tau^2) th1 ^ th2.
    Eigen::Vector3cd aux_form(const Eigen::Vector3d& p) const;

    // Rotation coefficients of the coordinate frame: W[i](j, k) = <nabla_{e_i} e_j, e_k>.
    std::array<Eigen::Matrix3d, 3> frame_rotation(const Eigen::Vector3d& p) const;

    // Covariant derivative of a coordinate vector field value: given the
    // Jacobian dV (columns = d V / d x^i) and the direction w at p,
    // returns nabla_w V in coordinates.
    Eigen::Vector3d cov_deriv(const Eigen::Vector3d& p, const Eigen::Matrix3d& dV,
                              const Eigen::Vector3d& V, const Eigen::Vector3d& w) const;

    // Max residual over frame directions of the Killing / parallel equation
    // for the canonical ambient spinor in the coordinate gauge at p.  This is
    // a consistency check of the chart, frame, and auxiliary form.
    double killing_residual(const Eigen::Vector3d& p) const;

  private:
    ModelSpec spec_;
};

// Finite-difference Christoffels of an arbitrary metric field (used by tests
// to cross-check the analytic ones); step h.
std::array<Eigen::Matrix3d, 3> christoffels_fd(
    const EktChart& chart, const Eigen::Vector3d& p, double h);

}  // namespace spincgeom
