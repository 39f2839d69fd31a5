#include "spincgeom/models.hpp"

#include <cmath>

#include "spincgeom/clifford.hpp"

namespace spincgeom {

ModelSpec ModelSpec::ekt(double kappa, double tau) {
    ModelSpec s;
    s.kind = Kind::EKT;
    s.kappa = kappa;
    s.tau = tau;
    if (std::abs(kappa - 4.0 * tau * tau) < 1e-12)
        throw std::domain_error("ModelSpec::ekt: kappa - 4 tau^2 must be nonzero");
    return s;
}

ModelSpec ModelSpec::csf(double c) {
    ModelSpec s;
    s.kind = Kind::CSF;
    s.c = c;
    if (std::abs(c) < 1e-12)
        throw std::domain_error("ModelSpec::csf: c must be nonzero");
    return s;
}

Eigen::Matrix3d ChristoffelTable::matrix(int i) const {
    Eigen::Matrix3d m;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m(k, j) = entry(i, j, k);
    return m;
}

ChristoffelTable christoffel_ekt(const ModelSpec& spec) {
    if (spec.kind != ModelSpec::Kind::EKT)
        throw std::invalid_argument("christoffel_ekt: EKT spec required");
    ChristoffelTable t{};
    const double tau = spec.tau;
    if (tau == 0.0) {
        // Product M^2(kappa) x R.  A frame with constant rotation
        // coefficients reproducing the base curvature exists for kappa < 0
        // (the solvable-group frame of H^2): <nabla_{e2} e1, e2> = sqrt(-kappa).
        if (spec.kappa >= 0.0)
            throw std::domain_error(
                "christoffel_ekt: tau = 0 requires kappa < 0 for a constant table");
        const double mu = std::sqrt(-spec.kappa);
        t.entry(1, 0, 1) = mu;
        t.entry(1, 1, 0) = -mu;
        return t;
    }
    const double sigma = tau - spec.kappa / (2.0 * tau);
    // <nabla_{e1} e2, e3> = tau, antisymmetry in the last two slots.
    t.entry(0, 1, 2) = tau;
    t.entry(0, 2, 1) = -tau;
    t.entry(1, 0, 2) = -tau;
    t.entry(1, 2, 0) = tau;
    t.entry(2, 0, 1) = -sigma;
    t.entry(2, 1, 0) = sigma;
    return t;
}

Eigen::Matrix3d riemann_from_table(const ChristoffelTable& t, int i, int j) {
    Eigen::Matrix3d Gi = t.matrix(i), Gj = t.matrix(j);
    // [e_i, e_j] = nabla_{e_i} e_j - nabla_{e_j} e_i
    Eigen::Vector3d br = Gi.col(j) - Gj.col(i);
    Eigen::Matrix3d Gbr = Eigen::Matrix3d::Zero();
    for (int k = 0; k < 3; ++k) Gbr += br(k) * t.matrix(k);
    return Gi * Gj - Gj * Gi - Gbr;
}

double riemann_component(const ChristoffelTable& t, int i, int j, int k, int l) {
    return riemann_from_table(t, i, j)(l, k);
}

Eigen::Matrix3d ricci_from_table(const ChristoffelTable& t) {
    Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int k = 0; k < 3; ++k) ric(a, b) += riemann_component(t, k, a, b, k);
    return ric;
}

double scalar_from_table(const ChristoffelTable& t) { return ricci_from_table(t).trace(); }

Eigen::Vector3d ricci_ekt(const ModelSpec& spec, const Eigen::Vector3d& X) {
    if (spec.kind != ModelSpec::Kind::EKT)
        throw std::invalid_argument("ricci_ekt: EKT spec required");
    const double h = spec.kappa - 2.0 * spec.tau * spec.tau;
    const double v = 2.0 * spec.tau * spec.tau;
    return Eigen::Vector3d(h * X(0), h * X(1), v * X(2));
}

double vertical_derivative_check(const ModelSpec& spec, const Eigen::Vector3d& X) {
    ChristoffelTable t = christoffel_ekt(spec);
    Eigen::Vector3d xi(0, 0, 1);
    Eigen::Vector3d lhs = Eigen::Vector3d::Zero();
    for (int i = 0; i < 3; ++i) lhs += X(i) * (t.matrix(i) * xi);
    Eigen::Vector3d rhs = spec.tau * X.cross(xi);
    return (lhs - rhs).norm();
}

Eigen::Matrix4d csf_complex_structure() {
    Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
    J(1, 0) = 1;  // J e1 = e2
    J(0, 1) = -1;
    J(3, 2) = 1;  // J e3 = e4
    J(2, 3) = -1;
    return J;
}

double curvature_csf(const ModelSpec& spec, const Eigen::Vector4d& X,
                     const Eigen::Vector4d& Y, const Eigen::Vector4d& Z,
                     const Eigen::Vector4d& W) {
    if (spec.kind != ModelSpec::Kind::CSF)
        throw std::invalid_argument("curvature_csf: CSF spec required");
    static const Eigen::Matrix4d J = csf_complex_structure();
    auto g = [](const Eigen::Vector4d& a, const Eigen::Vector4d& b) { return a.dot(b); };
    return spec.c * (g(Y, Z) * g(X, W) - g(X, Z) * g(Y, W) + g(J * Y, Z) * g(J * X, W) -
                     g(J * X, Z) * g(J * Y, W) - 2.0 * g(J * X, Y) * g(J * Z, W));
}

// ---------------------------------------------------------------------------

EktChart::EktChart(const ModelSpec& spec) : spec_(spec) {
    if (spec.kind != ModelSpec::Kind::EKT)
        throw std::invalid_argument("EktChart: EKT spec required");
}

bool EktChart::in_domain(double x, double y) const {
    if (spec_.kappa <= 0.0) return true;
    return x * x + y * y < 4.0 / spec_.kappa;
}

void EktChart::require_in_domain(double x, double y) const {
    if (!in_domain(x, y))
        throw std::domain_error("EktChart: point outside the chart domain x^2+y^2 < 4/kappa");
}

double EktChart::lambda(double x, double y) const {
    return 1.0 / (1.0 + spec_.kappa * (x * x + y * y) / 4.0);
}

namespace {

struct LambdaJet {
    double l, lx, ly;
};

LambdaJet lambda_jet(double kappa, double x, double y) {
    LambdaJet j;
    j.l = 1.0 / (1.0 + kappa * (x * x + y * y) / 4.0);
    j.lx = -0.5 * kappa * x * j.l * j.l;
    j.ly = -0.5 * kappa * y * j.l * j.l;
    return j;
}

}  // namespace

Eigen::Matrix3d EktChart::metric(const Eigen::Vector3d& p) const {
    require_in_domain(p(0), p(1));
    const double x = p(0), y = p(1);
    const double l = lambda(x, y);
    const double a = spec_.tau * l;
    Eigen::Matrix3d G;
    G << l * l + a * a * y * y, -a * a * x * y, a * y,
         -a * a * x * y, l * l + a * a * x * x, -a * x,
         a * y, -a * x, 1.0;
    return G;
}

std::array<Eigen::Matrix3d, 2> EktChart::dmetric(const Eigen::Vector3d& p) const {
    require_in_domain(p(0), p(1));
    const double x = p(0), y = p(1), tau = spec_.tau;
    LambdaJet lj = lambda_jet(spec_.kappa, x, y);
    const double l = lj.l, a = tau * l;
    const double ax = tau * lj.lx, ay = tau * lj.ly;

    Eigen::Matrix3d Gx, Gy;
    Gx << 2 * l * lj.lx + 2 * a * ax * y * y, -(2 * a * ax * x * y + a * a * y), ax * y,
          -(2 * a * ax * x * y + a * a * y), 2 * l * lj.lx + 2 * a * ax * x * x + 2 * a * a * x,
          -(ax * x + a),
          ax * y, -(ax * x + a), 0.0;
    Gy << 2 * l * lj.ly + 2 * a * ay * y * y + 2 * a * a * y, -(2 * a * ay * x * y + a * a * x),
          ay * y + a,
          -(2 * a * ay * x * y + a * a * x), 2 * l * lj.ly + 2 * a * ay * x * x, -ay * x,
          ay * y + a, -ay * x, 0.0;
    return {Gx, Gy};
}

std::array<Eigen::Matrix3d, 3> EktChart::christoffels(const Eigen::Vector3d& p) const {
    Eigen::Matrix3d G = metric(p);
    auto dG = dmetric(p);
    Eigen::Matrix3d Ginv = G.inverse();
    auto d = [&](int m, int i, int j) -> double {
        if (m == 2) return 0.0;  // z-invariance
        return dG[m](i, j);
    };
    std::array<Eigen::Matrix3d, 3> chr;
    for (int k = 0; k < 3; ++k) chr[k].setZero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double s = 0.0;
                for (int l = 0; l < 3; ++l)
                    s += Ginv(k, l) * (d(i, j, l) + d(j, i, l) - d(l, i, j));
                chr[k](i, j) = 0.5 * s;
            }
    return chr;
}

Eigen::Matrix3d EktChart::frame(const Eigen::Vector3d& p) const {
    require_in_domain(p(0), p(1));
    const double x = p(0), y = p(1);
    const double l = lambda(x, y), tau = spec_.tau;
    Eigen::Matrix3d E;
    E << 1.0 / l, 0, 0,
         0, 1.0 / l, 0,
         -tau * y, tau * x, 1;
    return E;
}

Eigen::Matrix3d EktChart::coframe(const Eigen::Vector3d& p) const {
    require_in_domain(p(0), p(1));
    const double x = p(0), y = p(1);
    const double l = lambda(x, y), tau = spec_.tau;
    Eigen::Matrix3d Th;
    Th << l, 0, 0,
          0, l, 0,
          tau * l * y, -tau * l * x, 1;
    return Th;
}

Eigen::Vector3cd EktChart::aux_form(const Eigen::Vector3d& p) const {
    LambdaJet lj = lambda_jet(spec_.kappa, p(0), p(1));
    const double w1 = -lj.ly / (lj.l * lj.l);  // base rotation form on f1
    const double w2 = lj.lx / (lj.l * lj.l);   // base rotation form on f2
    Eigen::Matrix3d Th = coframe(p);
    const std::complex<double> I(0.0, 1.0);
    Eigen::Vector3cd a = I * (w1 * Th.row(0).transpose() + w2 * Th.row(1).transpose());
    a -= 2.0 * I * spec_.tau * Th.row(2).transpose();
    return a;
}

std::array<Eigen::Matrix3d, 3> EktChart::frame_rotation(const Eigen::Vector3d& p) const {
    const double x = p(0), y = p(1), tau = spec_.tau;
    LambdaJet lj = lambda_jet(spec_.kappa, x, y);
    const double il2 = 1.0 / (lj.l * lj.l);

    // Jacobians of the frame fields (columns: d/dx, d/dy, d/dz).
    std::array<Eigen::Matrix3d, 3> dE;
    dE[0] << -lj.lx * il2, -lj.ly * il2, 0,
             0, 0, 0,
             0, -tau, 0;
    dE[1] << 0, 0, 0,
             -lj.lx * il2, -lj.ly * il2, 0,
             tau, 0, 0;
    dE[2].setZero();

    Eigen::Matrix3d E = frame(p);
    Eigen::Matrix3d G = metric(p);
    auto chr = christoffels(p);

    std::array<Eigen::Matrix3d, 3> W;
    for (int i = 0; i < 3; ++i) {
        Eigen::Vector3d dir = E.col(i);
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d nab = dE[j] * dir;  // directional derivative of e_j
            for (int k = 0; k < 3; ++k)
                nab(k) += dir.transpose() * chr[k] * E.col(j);
            for (int k = 0; k < 3; ++k) W[i](j, k) = nab.transpose() * G * E.col(k);
        }
    }
    return W;
}

Eigen::Vector3d EktChart::cov_deriv(const Eigen::Vector3d& p, const Eigen::Matrix3d& dV,
                                    const Eigen::Vector3d& V,
                                    const Eigen::Vector3d& w) const {
    auto chr = christoffels(p);
    Eigen::Vector3d out = dV * w;
    for (int k = 0; k < 3; ++k) out(k) += w.transpose() * chr[k] * V;
    return out;
}

double EktChart::killing_residual(const Eigen::Vector3d& p) const {
    const CliffordRep& cl = CliffordRep::get(3);
    Spinor psi(2);
    psi << 1.0, 0.0;  // e3 . psi = -i psi in the n = 3 representation

    auto W = frame_rotation(p);
    Eigen::Matrix3d E = frame(p);
    Eigen::Vector3cd a = aux_form(p);

    double res = 0.0;
    for (int i = 0; i < 3; ++i) {
        std::complex<double> ai = a(0) * E(0, i) + a(1) * E(1, i) + a(2) * E(2, i);
        Spinor d = Spinor::Zero(2);
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k)
                d += 0.5 * W[i](j, k) * (cl.gamma[j] * (cl.gamma[k] * psi));
        d += 0.5 * ai * psi;
        Spinor target = 0.5 * spec_.tau * (cl.gamma[i] * psi);
        res = std::max(res, (d - target).norm());
    }
    return res;
}

std::array<Eigen::Matrix3d, 3> christoffels_fd(const EktChart& chart,
                                               const Eigen::Vector3d& p, double h) {
    auto dnum = [&](int m) -> Eigen::Matrix3d {
        if (m == 2) return Eigen::Matrix3d::Zero();
        Eigen::Vector3d dp = Eigen::Vector3d::Zero();
        dp(m) = h;
        return (chart.metric(p + dp) - chart.metric(p - dp)) / (2.0 * h);
    };
    Eigen::Matrix3d G = chart.metric(p);
    Eigen::Matrix3d Ginv = G.inverse();
    std::array<Eigen::Matrix3d, 3> dG = {dnum(0), dnum(1), dnum(2)};
    std::array<Eigen::Matrix3d, 3> chr;
    for (int k = 0; k < 3; ++k) chr[k].setZero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double s = 0.0;
                for (int l = 0; l < 3; ++l)
                    s += Ginv(k, l) * (dG[i](j, l) + dG[j](i, l) - dG[l](i, j));
                chr[k](i, j) = 0.5 * s;
            }
    return chr;
}

}  // namespace spincgeom
