#include "spincgeom/hypersurfaces_mc2.hpp"

#include <cmath>
#include <stdexcept>

namespace spincgeom {

namespace {

Eigen::Matrix3d contact_endomorphism() {
    Eigen::Matrix3d X = Eigen::Matrix3d::Zero();
    X(1, 0) = 1.0;
    X(0, 1) = -1.0;
    return X;
}

// Structure constants [e_i, e_j] = nabla_i e_j - nabla_j e_i from the table.
Eigen::Vector3d bracket(const ChristoffelTable& t, int i, int j) {
    Eigen::Vector3d out;
    for (int k = 0; k < 3; ++k) out(k) = t.entry(i, j, k) - t.entry(j, i, k);
    return out;
}

const CliffordRep& cl3() { return CliffordRep::get(3); }

Eigen::Vector2cd gmul(const Eigen::Vector3d& v, const Eigen::Vector2cd& s) {
    return cl3().mul(v, s);
}

}  // namespace

ContactInstance ContactInstance::sasaki(double c) {
    if (c == 0.0) throw std::invalid_argument("ContactInstance::sasaki: c must be nonzero");
    ContactInstance inst;
    inst.c = c;
    inst.intrinsic = ModelSpec::ekt(4.0 * c + 4.0, -1.0);
    inst.table = christoffel_ekt(inst.intrinsic);
    inst.Xfield = contact_endomorphism();
    inst.xi = Eigen::Vector3d(0, 0, 1);
    inst.aux.a = {Complex(0, 0), Complex(0, 0), Complex(0, -3.0 * c)};
    inst.shape = sasaki_shape(c);
    return inst;
}

ContactInstance ContactInstance::canonical(double kappa, double tau) {
    ModelSpec spec = ModelSpec::ekt(kappa, tau);
    if (tau == 0.0)
        throw std::invalid_argument("ContactInstance::canonical: tau must be nonzero");
    ContactInstance inst;
    inst.c = spec.bundle_quantity() / 6.0;
    inst.intrinsic = spec;
    inst.table = christoffel_ekt(spec);
    inst.Xfield = contact_endomorphism();
    inst.xi = Eigen::Vector3d(0, 0, 1);
    inst.aux = AuxConnection::canonical(spec);
    inst.shape = -tau * Eigen::Matrix3d::Identity();
    return inst;
}

double structure_residual(const ContactInstance& inst) {
    const Eigen::Matrix3d& X = inst.Xfield;
    Eigen::Vector3d eta = inst.xi;  // orthonormal frame: eta(e_i) = xi_i
    double r = 0.0;

    // X^2 = -Id + eta (x) xi and X xi = 0,  |xi| = 1.
    Eigen::Matrix3d X2 = X * X + Eigen::Matrix3d::Identity() - inst.xi * eta.transpose();
    r = std::max(r, X2.cwiseAbs().maxCoeff());
    r = std::max(r, (X * inst.xi).norm());
    r = std::max(r, std::abs(inst.xi.norm() - 1.0));

    // nabla_i xi = Gamma_i xi and the compatibility of nabla with the
    // distinguished shape: nabla_X xi = X E X (cond 4) and the (nabla X)
    // identity (cond 3) are checked against the instance shape.
    for (int i = 0; i < 3; ++i) {
        Eigen::Matrix3d Gi = inst.table.matrix(i);
        Eigen::Vector3d ei = Eigen::Vector3d::Unit(i);
        Eigen::Vector3d dxi = Gi * inst.xi;
        r = std::max(r, (dxi - X * (inst.shape * ei)).norm());
        Eigen::Matrix3d dX = Gi * X - X * Gi;
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d ej = Eigen::Vector3d::Unit(j);
            Eigen::Vector3d rhs =
                eta(j) * (inst.shape * ei) - (inst.shape * ei).dot(ej) * inst.xi;
            r = std::max(r, (dX * ej - rhs).norm());
        }
    }
    return r;
}

double aux_curvature_residual(const ContactInstance& inst) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            // For frame-constant A: Omega(e_i, e_j) = -A([e_i, e_j]).
            Eigen::Vector3d br = bracket(inst.table, i, j);
            Complex omega = -(inst.aux.a[0] * br(0) + inst.aux.a[1] * br(1) +
                              inst.aux.a[2] * br(2));
            double want = -6.0 * inst.c * (inst.Xfield.col(i)).dot(Eigen::Vector3d::Unit(j));
            r = std::max(r, std::abs(omega - Complex(0, want)));
        }
    return r;
}

Eigen::Vector3d commutator_coeffs(const Eigen::Matrix3d& E, int i, int j) {
    if ((E - E.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("commutator_coeffs: E must be symmetric");
    return 2.0 * E.col(i).cross(E.col(j));
}

double commutator_lemma_residual(const Eigen::Matrix3d& E, std::mt19937& rng,
                                 int samples) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double r = 0.0;
    for (int s = 0; s < samples; ++s) {
        Eigen::Vector2cd psi(Complex(dist(rng), dist(rng)), Complex(dist(rng), dist(rng)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Eigen::Vector2cd lhs = gmul(E.col(i), gmul(E.col(j), psi)) -
                                       gmul(E.col(j), gmul(E.col(i), psi));
                Eigen::Vector2cd rhs = gmul(commutator_coeffs(E, i, j), psi);
                r = std::max(r, (lhs - rhs).norm());
            }
    }
    return r;
}

double ParallelRestrictionResidual::max_residual() const {
    return std::max(killing, std::max(eigen, curvature));
}

ParallelRestrictionResidual restrict_parallel_residual(const ContactInstance& inst,
                                                       const Eigen::Matrix3d& E) {
    if ((inst.Xfield.col(0) - Eigen::Vector3d::Unit(1)).norm() > 1e-8)
        throw std::invalid_argument("restrict_parallel_residual: frame not adapted");

    const Eigen::Vector2cd phi(1.0, 0.0);
    const Complex im(0, 1);
    ParallelRestrictionResidual r;

    for (int i = 0; i < 3; ++i) {
        CMatrix K = spinor_connection_matrix(inst.intrinsic, inst.aux, i);
        Eigen::Vector2cd res = K * phi + 0.5 * gmul(E.col(i), phi);
        r.killing = std::max(r.killing, res.norm());
    }
    r.eigen = (gmul(inst.xi, phi) + im * phi).norm();

    Eigen::Matrix3d Om = Eigen::Matrix3d::Zero();
    Om(0, 1) = -6.0 * inst.c;
    Om(1, 0) = 6.0 * inst.c;
    Spinor act = cl3().two_form_action(Om, phi);
    r.curvature = (act - 6.0 * inst.c * im * phi).norm();
    return r;
}

Eigen::Vector3d dnabla_shape(const ContactInstance& inst, const Eigen::Matrix3d& E,
                             int i, int j) {
    Eigen::Matrix3d Gi = inst.table.matrix(i), Gj = inst.table.matrix(j);
    Eigen::Matrix3d di = Gi * E - E * Gi, dj = Gj * E - E * Gj;
    return di.col(j) - dj.col(i);
}

Eigen::Vector3d codazzi_rhs_csf(const ContactInstance& inst, int i, int j) {
    Eigen::Vector3d ei = Eigen::Vector3d::Unit(i), ej = Eigen::Vector3d::Unit(j);
    double eta_i = inst.xi(i), eta_j = inst.xi(j);
    return inst.c * (eta_i * inst.Xfield * ej - eta_j * inst.Xfield * ei -
                     2.0 * (inst.Xfield * ei).dot(ej) * inst.xi);
}

double CsfCompatibilityResidual::max_residual() const {
    return std::max(std::max(gauss, codazzi), std::max(cond3, cond4));
}

CsfCompatibilityResidual check_compatibility_csf(const ContactInstance& inst,
                                                 const Eigen::Matrix3d& E) {
    CsfCompatibilityResidual r;
    const Eigen::Matrix3d& X = inst.Xfield;
    const double c = inst.c;

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double lhs = riemann_component(inst.table, i, j, k, l);
                    Eigen::Vector3d ei = Eigen::Vector3d::Unit(i),
                                    ej = Eigen::Vector3d::Unit(j),
                                    ek = Eigen::Vector3d::Unit(k),
                                    el = Eigen::Vector3d::Unit(l);
                    double rhs =
                        c * (ej.dot(ek) * ei.dot(el) - ei.dot(ek) * ej.dot(el) +
                             (X * ej).dot(ek) * (X * ei).dot(el) -
                             (X * ei).dot(ek) * (X * ej).dot(el) -
                             2.0 * (X * ei).dot(ej) * (X * ek).dot(el)) +
                        (E * ej).dot(ek) * (E * ei).dot(el) -
                        (E * ei).dot(ek) * (E * ej).dot(el);
                    r.gauss = std::max(r.gauss, std::abs(lhs - rhs));
                }

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            r.codazzi = std::max(
                r.codazzi, (dnabla_shape(inst, E, i, j) - codazzi_rhs_csf(inst, i, j)).norm());

    for (int i = 0; i < 3; ++i) {
        Eigen::Matrix3d Gi = inst.table.matrix(i);
        Eigen::Vector3d ei = Eigen::Vector3d::Unit(i);
        Eigen::Matrix3d dX = Gi * X - X * Gi;
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d ej = Eigen::Vector3d::Unit(j);
            Eigen::Vector3d rhs = inst.xi(j) * (E * ei) - (E * ei).dot(ej) * inst.xi;
            r.cond3 = std::max(r.cond3, (dX * ej - rhs).norm());
        }
        r.cond4 = std::max(r.cond4, (Gi * inst.xi - X * (E * ei)).norm());
    }
    return r;
}

Eigen::Matrix3d sasaki_shape(double c) {
    Eigen::Matrix3d E = Eigen::Matrix3d::Identity();
    E(2, 2) = 1.0 - c;
    return E;
}

double sasaki_mean_curvature(double c) { return (3.0 - c) / 3.0; }

double ProbeReport::max_residual() const { return residual.cwiseAbs().maxCoeff(); }

ProbeReport gauss_iff_codazzi_probe(const ContactInstance& inst,
                                    const Eigen::Matrix3d& E,
                                    const DnablaOverride& override_dE,
                                    double hypothesis_tol) {
    ParallelRestrictionResidual hyp = restrict_parallel_residual(inst, E);
    if (hyp.max_residual() > hypothesis_tol)
        throw std::domain_error(
            "gauss_iff_codazzi_probe: spinor hypotheses not satisfied by the data");

    const Eigen::Vector2cd phi(1.0, 0.0);
    const Complex im(0, 1);
    Eigen::Matrix3d ric = ricci_from_table(inst.table);
    Eigen::Matrix3d Om = Eigen::Matrix3d::Zero();
    Om(0, 1) = -6.0 * inst.c;
    Om(1, 0) = 6.0 * inst.c;

    auto dE = [&](int k, int m) {
        return override_dE ? override_dE(k, m) : dnabla_shape(inst, E, k, m);
    };

    // Real orthonormal spinor frame {phi, e_1.phi, e_2.phi, e_3.phi}.
    std::array<Eigen::Vector2cd, 4> basis;
    basis[0] = phi;
    for (int k = 0; k < 3; ++k) basis[k + 1] = gmul(Eigen::Vector3d::Unit(k), phi);

    ProbeReport rep;
    for (int m = 0; m < 3; ++m) {
        Eigen::Vector3d X = Eigen::Vector3d::Unit(m);

        Eigen::Vector2cd gauss = Eigen::Vector2cd::Zero();
        Eigen::Vector2cd codazzi = Eigen::Vector2cd::Zero();
        for (int k = 0; k < 3; ++k) {
            Eigen::Vector3d ek = Eigen::Vector3d::Unit(k);
            Eigen::Vector2cd quad =
                gmul(E * X, gmul(E * ek, phi)) - gmul(E * ek, gmul(E * X, phi));
            gauss += 0.25 * gmul(ek, quad);
            codazzi += 0.5 * gmul(ek, gmul(dE(k, m), phi));
        }
        gauss -= 0.5 * gmul(ric * X, phi);
        for (int j = 0; j < 3; ++j)
            gauss += 0.5 * im * Om(m, j) * gmul(Eigen::Vector3d::Unit(j), phi);

        for (int b = 0; b < 4; ++b) {
            rep.gauss_side(m, b) = herm_product(gauss, basis[b]).real();
            rep.codazzi_side(m, b) = herm_product(codazzi, basis[b]).real();
            rep.residual(m, b) = rep.gauss_side(m, b) - rep.codazzi_side(m, b);
        }
    }
    return rep;
}

}  // namespace spincgeom
