#include "spincgeom/spin_connection.hpp"

#include <cmath>
#include <stdexcept>

namespace spincgeom {

namespace {
const Complex I(0.0, 1.0);

void require_table_model(const ModelSpec& spec) {
    if (spec.kind != ModelSpec::Kind::EKT)
        throw std::invalid_argument("spin_connection: EKT spec required");
    if (spec.tau == 0.0 && spec.kappa >= 0.0)
        throw std::domain_error(
            "spin_connection: tau = 0 requires kappa < 0 for the homogeneous-frame table");
}
}  // namespace

AuxConnection AuxConnection::canonical(const ModelSpec& spec) {
    require_table_model(spec);
    AuxConnection a;
    if (spec.tau == 0.0) {
        // Product H^2(kappa) x R in the solvable-group frame (see
        // christoffel_ekt): the canonical structure is the pull-back of the
        // base spin^c structure, A = i * (base rotation form).
        a.a[1] = I * std::sqrt(-spec.kappa);
    } else {
        a.a[2] = -I * (2.0 * spec.tau - spec.kappa / (2.0 * spec.tau));
    }
    return a;
}

AuxConnection AuxConnection::anti_canonical(const ModelSpec& spec) {
    AuxConnection a = canonical(spec);
    for (auto& z : a.a) z = -z;
    return a;
}

AuxConnection AuxConnection::make(const ModelSpec& spec, Chirality ch) {
    return ch == Chirality::Canonical ? canonical(spec) : anti_canonical(spec);
}

Spinor spinor_cov_deriv(const ModelSpec& spec, const AuxConnection& aux, int dir,
                        const Spinor& psi, const Spinor& frame_deriv) {
    if (dir < 0 || dir > 2) throw std::invalid_argument("spinor_cov_deriv: bad direction");
    const CliffordRep& cl = CliffordRep::get(3);
    ChristoffelTable t = christoffel_ekt(spec);
    Spinor out = frame_deriv;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (t.entry(dir, j, k) != 0.0)
                out += 0.25 * t.entry(dir, j, k) * (cl.gamma[j] * (cl.gamma[k] * psi));
    out += 0.5 * aux.a[dir] * psi;
    return out;
}

CMatrix spinor_connection_matrix(const ModelSpec& spec, const AuxConnection& aux, int dir) {
    const CliffordRep& cl = CliffordRep::get(3);
    ChristoffelTable t = christoffel_ekt(spec);
    CMatrix K = CMatrix::Zero(2, 2);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (t.entry(dir, j, k) != 0.0)
                K += 0.25 * t.entry(dir, j, k) * (cl.gamma[j] * cl.gamma[k]);
    K += 0.5 * aux.a[dir] * CMatrix::Identity(2, 2);
    return K;
}

Eigen::Matrix3d aux_curvature(const ModelSpec& spec) {
    Eigen::Matrix3d O = Eigen::Matrix3d::Zero();
    O(0, 1) = -spec.bundle_quantity();
    O(1, 0) = -O(0, 1);
    return O;
}

Spinor aux_curvature_action(const ModelSpec& spec, const Spinor& psi) {
    const CliffordRep& cl = CliffordRep::get(3);
    return cl.two_form_action(aux_curvature(spec), psi);
}

double KillingVerdict::max_residual() const {
    double m = eigen_residual;
    m = std::max(m, killing_residual);
    m = std::max(m, dirac_residual);
    m = std::max(m, eq_curvature_residual);
    m = std::max(m, lichnerowicz_residual);
    m = std::max(m, ricci_identity_residual);
    m = std::max(m, eq5_residual);
    return m;
}

KillingVerdict verify_killing(const ModelSpec& spec, Chirality ch) {
    require_table_model(spec);
    const CliffordRep& cl = CliffordRep::get(3);
    const double tau = spec.tau;
    const double chi = (ch == Chirality::Canonical) ? 1.0 : -1.0;

    // Spinor with e3 . psi = -chi i psi, found as an eigenvector.
    Eigen::ComplexEigenSolver<CMatrix> es(cl.gamma[2]);
    Spinor psi;
    int hits = 0;
    for (int k = 0; k < 2; ++k) {
        if (std::abs(es.eigenvalues()(k) + chi * I) < 1e-10) {
            psi = es.eigenvectors().col(k);
            ++hits;
        }
    }
    if (hits != 1) throw std::runtime_error("verify_killing: eigenline not 1-dimensional");
    psi /= psi.norm();

    AuxConnection aux = AuxConnection::make(spec, ch);
    ChristoffelTable t = christoffel_ekt(spec);

    KillingVerdict v{};
    v.psi = psi;
    v.eigen_residual = (cl.gamma[2] * psi + chi * I * psi).norm();

    std::array<CMatrix, 3> K;
    for (int i = 0; i < 3; ++i) K[i] = spinor_connection_matrix(spec, aux, i);

    v.killing_residual = 0.0;
    for (int i = 0; i < 3; ++i) {
        Spinor r = K[i] * psi - 0.5 * tau * (cl.gamma[i] * psi);
        v.killing_residual = std::max(v.killing_residual, r.norm());
    }

    // Dirac operator on frame-constant spinors.
    CMatrix D = CMatrix::Zero(2, 2);
    for (int i = 0; i < 3; ++i) D += cl.gamma[i] * K[i];
    v.dirac_residual = (D * psi + 1.5 * tau * psi).norm();

    // Curvature action of the auxiliary bundle.
    v.eq_curvature_residual =
        (aux_curvature_action(spec, psi) - chi * I * spec.bundle_quantity() * psi).norm();

    // Schroedinger-Lichnerowicz: D^2 = nabla*nabla + S/4 + (i/2) Omega .
    // On frame-constant spinors nabla*nabla = -sum_i (K_i^2 - K_{nabla_i e_i}).
    CMatrix lap = CMatrix::Zero(2, 2);
    for (int i = 0; i < 3; ++i) {
        lap -= K[i] * K[i];
        for (int k = 0; k < 3; ++k)
            if (t.entry(i, i, k) != 0.0) lap += t.entry(i, i, k) * K[k];
    }
    const double S = scalar_from_table(t);
    // The curvature of the anti-canonical auxiliary bundle is the negative of
    // the canonical one, hence the chirality weight on the Omega terms below.
    Spinor sl = D * (D * psi) - lap * psi - 0.25 * S * psi -
                0.5 * chi * I * aux_curvature_action(spec, psi);
    v.lichnerowicz_residual = sl.norm();

    // Spinor curvature of the connection: R(e_i, e_j) = [K_i, K_j] - K_{[e_i, e_j]}.
    auto spin_curv = [&](int i, int j) -> CMatrix {
        Eigen::Vector3d br = t.matrix(i).col(j) - t.matrix(j).col(i);
        CMatrix m = K[i] * K[j] - K[j] * K[i];
        for (int k = 0; k < 3; ++k) m -= br(k) * K[k];
        return m;
    };

    Eigen::Matrix3d ric = ricci_from_table(t);
    Eigen::Matrix3d omega = chi * aux_curvature(spec);
    v.ricci_identity_residual = 0.0;
    v.eq5_residual = 0.0;
    for (int a = 0; a < 3; ++a) {
        Eigen::VectorXd ricX = ric.col(a);
        Eigen::VectorXd hook = omega.row(a).transpose();  // (e_a _| Omega) as a vector
        Spinor lhs5 = Spinor::Zero(2);
        for (int k = 0; k < 3; ++k) lhs5 += cl.gamma[k] * (spin_curv(k, a) * psi);
        Spinor rhs5 = 0.5 * cl.mul(ricX, psi) - 0.5 * I * cl.mul(hook, psi);
        v.eq5_residual = std::max(v.eq5_residual, (lhs5 - rhs5).norm());

        Eigen::VectorXd ea = Eigen::Vector3d::Unit(a);
        Spinor r27 = cl.mul(ricX, psi) - I * cl.mul(hook, psi) -
                     2.0 * tau * tau * cl.mul(ea, psi);
        v.ricci_identity_residual = std::max(v.ricci_identity_residual, r27.norm());
    }
    return v;
}

}  // namespace spincgeom
