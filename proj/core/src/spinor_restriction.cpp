#include "spincgeom/spinor_restriction.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spincgeom/util.hpp"

namespace spincgeom {

namespace {

const Eigen::Matrix2cd kI = []() {
    return Eigen::Matrix2cd(Eigen::Matrix2cd::Identity());
}();

Eigen::Matrix2cd bullet_of(int i) {
    const CliffordRep& cl = CliffordRep::get(3);
    if (i == 2) return cl.gamma[2];  // nu acts by plain Clifford multiplication
    return Eigen::Matrix2cd(cl.gamma[i] * cl.gamma[2]);
}

}  // namespace

const Eigen::Matrix2cd& bullet_matrix(int i) {
    static const Eigen::Matrix2cd b[3] = {bullet_of(0), bullet_of(1), bullet_of(2)};
    if (i < 0 || i > 2) throw std::out_of_range("bullet_matrix: index");
    return b[i];
}

Eigen::Vector2cd restricted_conjugate(const Eigen::Vector2cd& phi) {
    return Eigen::Vector2cd(phi(0), -phi(1));
}

double extract_f(const Eigen::Vector2cd& phi) {
    double n2 = phi.squaredNorm();
    return (std::norm(phi(0)) - std::norm(phi(1))) / n2;
}

Eigen::Vector2d extract_T(const Eigen::Vector2cd& phi) {
    double n2 = phi.squaredNorm();
    Complex i(0, 1);
    Eigen::Vector2cd b1 = bullet_matrix(0) * phi;
    Eigen::Vector2cd b2 = bullet_matrix(1) * phi;
    double T1 = herm_product(i * b2, phi).real() / n2;   // Re <i t2 . phi, phi>
    double T2 = -herm_product(i * b1, phi).real() / n2;  // -Re <i t1 . phi, phi>
    return Eigen::Vector2d(T1, T2);
}

EnergyMomentum energy_momentum(const Eigen::Vector2cd& phi,
                               const Eigen::Vector2cd& dphi1,
                               const Eigen::Vector2cd& dphi2, double tau, double H) {
    auto plus = [](const Eigen::Vector2cd& v) { return Eigen::Vector2cd(v(0), 0.0); };
    auto minus = [](const Eigen::Vector2cd& v) { return Eigen::Vector2cd(0.0, v(1)); };
    const Eigen::Vector2cd dphi[2] = {dphi1, dphi2};

    EnergyMomentum em;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Eigen::Vector2cd bb_minus = bullet_matrix(b) * minus(phi);
            Eigen::Vector2cd bb_plus = bullet_matrix(b) * plus(phi);
            em.Tplus(a, b) = herm_product(plus(dphi[a]), bb_minus).real();
            em.Tminus(a, b) = herm_product(minus(dphi[a]), bb_plus).real();
        }

    double np = plus(phi).squaredNorm(), nm = minus(phi).squaredNorm();
    double n2 = phi.squaredNorm();

    em.trace_residual = std::max(std::abs(em.Tplus.trace() + H * nm),
                                 std::abs(em.Tminus.trace() + H * np));
    em.asym_residual =
        std::max(std::abs(em.Tplus(0, 1) - tau * nm - em.Tplus(1, 0)),
                 std::abs(em.Tminus(0, 1) - tau * np - em.Tminus(1, 0)));

    Eigen::Matrix2d F = em.Tplus + em.Tminus;
    em.Tphi = -F / n2;
    em.Tphi(0, 1) += 0.5 * tau;
    em.Tphi(1, 0) -= 0.5 * tau;

    Complex i(0, 1);
    Eigen::Vector2cd conj_phi = restricted_conjugate(phi);
    double rec = 0.0;
    for (int a = 0; a < 2; ++a) {
        Eigen::Vector2cd r = dphi[a];
        for (int b = 0; b < 2; ++b) r += em.Tphi(a, b) * (bullet_matrix(b) * phi);
        r -= i * (0.5 * tau) * (bullet_matrix(a) * conj_phi);
        rec = std::max(rec, r.norm());
    }
    em.reconstruction_residual = rec;
    return em;
}

GaugePoint gauge_at(const SurfaceField& field, double u, double v,
                    const Eigen::Matrix2cd& align) {
    GaugePoint gp;
    gp.sd = field.at(u, v);
    Eigen::Matrix3d Theta = field.chart().coframe(gp.sd.p);
    gp.Q.col(0) = Theta * gp.sd.t1;
    gp.Q.col(1) = Theta * gp.sd.t2;
    gp.Q.col(2) = Theta * gp.sd.nu;
    gp.U = spin_lift3(gp.Q, align);
    gp.phi = gp.U.adjoint() * Eigen::Vector2cd(1.0, 0.0);
    return gp;
}

double RestrictionResidual::max_residual() const {
    double m = eq_killing;
    m = std::max(m, dirac);
    m = std::max(m, dirac_gauss);
    m = std::max(m, norm_drift);
    m = std::max(m, omega_pullback);
    m = std::max(m, f_extract);
    m = std::max(m, T_extract);
    m = std::max(m, algebraic);
    m = std::max(m, em_trace);
    m = std::max(m, em_asym);
    m = std::max(m, em_reconstruction);
    return m;
}

RestrictionResidual check_restriction(const SurfaceField& field,
                                      const SurfaceCheckOptions& opts,
                                      const SpinorScaling& scaling) {
    const Domain dom = field.domain();
    const ModelSpec& spec = field.spec();
    const EktChart& chart = field.chart();
    const double tau = spec.tau;
    const double bq = spec.bundle_quantity();
    const int n = opts.grid;
    if (n < 4) throw std::invalid_argument("check_restriction: grid too small");

    const double spanu = dom.u1 - dom.u0, spanv = dom.v1 - dom.v0;
    const double H = opts.field_step > 0.0 ? opts.field_step : std::max(spanu, spanv) / n;
    const double mu = 1.25 * H, mv = 1.25 * H;
    if (2 * mu >= spanu || 2 * mv >= spanv)
        throw std::invalid_argument("check_restriction: field_step too large for domain");

    const Eigen::Matrix2cd B1 = bullet_matrix(0);
    const Eigen::Matrix2cd B2 = bullet_matrix(1);
    const Eigen::Matrix2cd B1B2 = B1 * B2;
    const Eigen::Matrix2cd gamma3 = CliffordRep::get(3).gamma[2];
    const Complex im(0, 1);

    auto scale = [&](double a, double b) -> Complex {
        return scaling ? scaling(a, b) : Complex(1.0, 0.0);
    };

    std::vector<RestrictionResidual> parts(n);

    parallel_for(n, opts.threads, [&](int i) {
        RestrictionResidual r{};
        double u = dom.u0 + mu + (spanu - 2 * mu) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            double v = dom.v0 + mv + (spanv - 2 * mv) * j / (n - 1);

            GaugePoint c = gauge_at(field, u, v, kI);
            GaugePoint up = gauge_at(field, u + H, v, c.U);
            GaugePoint um = gauge_at(field, u - H, v, c.U);
            GaugePoint vp = gauge_at(field, u, v + H, c.U);
            GaugePoint vm = gauge_at(field, u, v - H, c.U);

            Eigen::Vector2cd phi = scale(u, v) * c.phi;
            Eigen::Vector2cd dphi_du =
                (scale(u + H, v) * up.phi - scale(u - H, v) * um.phi) / (2 * H);
            Eigen::Vector2cd dphi_dv =
                (scale(u, v + H) * vp.phi - scale(u, v - H) * vm.phi) / (2 * H);

            const SurfacePointData& d = c.sd;
            Eigen::Matrix3d G = chart.metric(d.p);
            auto chr = chart.christoffels(d.p);
            Eigen::Vector3cd aux = chart.aux_form(d.p);

            // Chart-coordinate components of the adapted tangent frame.
            double detg = d.g.determinant();
            Eigen::Vector2d X[2];
            X[0] = Eigen::Vector2d(1.0 / std::sqrt(d.g(0, 0)), 0.0);
            X[1] = Eigen::Vector2d(-d.g(0, 1) / d.g(0, 0), 1.0) *
                   std::sqrt(d.g(0, 0) / detg);
            const Eigen::Vector3d tvec[2] = {d.t1, d.t2};

            // Jacobian of the ambient t1 field over the chart.
            Eigen::Matrix<double, 3, 2> Dt1;
            Dt1.col(0) = (up.sd.t1 - um.sd.t1) / (2 * H);
            Dt1.col(1) = (vp.sd.t1 - vm.sd.t1) / (2 * H);

            Eigen::Vector2cd nabla[2];
            double omega12[2];
            Complex Aval[2];
            for (int a = 0; a < 2; ++a) {
                // omega_12(t_a) = <nabla_{t_a} t1, t2> (ambient = intrinsic
                // for tangential arguments).
                Eigen::Vector3d cov = Dt1 * X[a];
                for (int k = 0; k < 3; ++k)
                    cov(k) += tvec[a].transpose() * chr[k] * d.t1;
                omega12[a] = cov.transpose() * G * d.t2;

                Aval[a] = aux(0) * tvec[a](0) + aux(1) * tvec[a](1) + aux(2) * tvec[a](2);

                Eigen::Vector2cd dirich = X[a](0) * dphi_du + X[a](1) * dphi_dv;
                nabla[a] = dirich + 0.5 * omega12[a] * (B1B2 * phi) + 0.5 * Aval[a] * phi;
            }

            // Shape operator in the adapted frame: Ehat(a, b) = II(t_a, t_b).
            Eigen::Matrix2d Ehat;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    Ehat(a, b) = X[a].transpose() * d.II * X[b];

            Eigen::Vector2cd conj_phi = restricted_conjugate(phi);

            // Restricted Killing equation.
            for (int a = 0; a < 2; ++a) {
                Eigen::Vector2cd res = nabla[a] +
                                       0.5 * (Ehat(0, a) * (B1 * phi) + Ehat(1, a) * (B2 * phi)) -
                                       im * (0.5 * tau) * (bullet_matrix(a) * conj_phi);
                r.eq_killing = std::max(r.eq_killing, res.norm());
            }

            // Dirac equation, intrinsic and ambient-assembled forms.
            Eigen::Vector2cd D = B1 * nabla[0] + B2 * nabla[1];
            r.dirac = std::max(r.dirac, (D - d.H * phi + im * tau * conj_phi).norm());
            r.dirac_gauss =
                std::max(r.dirac_gauss, (D - d.H * phi - tau * (gamma3 * phi)).norm());

            // Unit norm (up to the deliberate scaling).
            r.norm_drift =
                std::max(r.norm_drift, std::abs(phi.norm() - std::abs(scale(u, v))));

            // Curvature pullback: Omega(t1, t2) = -bq * (th1 ^ th2)(t1, t2) = -bq f.
            double area12 = c.Q(0, 0) * c.Q(1, 1) - c.Q(0, 1) * c.Q(1, 0);
            r.omega_pullback = std::max(r.omega_pullback, std::abs(-bq * area12 + bq * d.f));

            // f, T recovered from the spinor vs the induced geometric data.
            Eigen::Vector2d That;
            Eigen::Vector3d xi(0, 0, 1);
            That(0) = tvec[0].transpose() * G * xi;
            That(1) = tvec[1].transpose() * G * xi;
            r.f_extract = std::max(r.f_extract, std::abs(extract_f(phi) - d.f));
            r.T_extract = std::max(r.T_extract, (extract_T(phi) - That).norm());

            // Algebraic identities: T . phi = -f phi + conj(phi) and
            // i phi - i f conj(phi) + (J T) . phi = 0.
            Eigen::Vector2cd tphi = That(0) * (B1 * phi) + That(1) * (B2 * phi);
            double alg1 = (tphi + d.f * phi - conj_phi).norm() / phi.norm();
            Eigen::Vector2cd jt = -That(1) * (B1 * phi) + That(0) * (B2 * phi);
            double alg2 = (im * phi - im * d.f * conj_phi + jt).norm() / phi.norm();
            r.algebraic = std::max(r.algebraic, std::max(alg1, alg2));

            // Energy-momentum identities and the reconstruction of nabla phi.
            EnergyMomentum em = energy_momentum(phi, nabla[0], nabla[1], tau, d.H);
            r.em_trace = std::max(r.em_trace, em.trace_residual);
            r.em_asym = std::max(r.em_asym, em.asym_residual);
            r.em_reconstruction = std::max(r.em_reconstruction, em.reconstruction_residual);
        }
        parts[i] = r;
    });

    RestrictionResidual total{};
    for (const RestrictionResidual& p : parts) {
        total.eq_killing = std::max(total.eq_killing, p.eq_killing);
        total.dirac = std::max(total.dirac, p.dirac);
        total.dirac_gauss = std::max(total.dirac_gauss, p.dirac_gauss);
        total.norm_drift = std::max(total.norm_drift, p.norm_drift);
        total.omega_pullback = std::max(total.omega_pullback, p.omega_pullback);
        total.f_extract = std::max(total.f_extract, p.f_extract);
        total.T_extract = std::max(total.T_extract, p.T_extract);
        total.algebraic = std::max(total.algebraic, p.algebraic);
        total.em_trace = std::max(total.em_trace, p.em_trace);
        total.em_asym = std::max(total.em_asym, p.em_asym);
        total.em_reconstruction = std::max(total.em_reconstruction, p.em_reconstruction);
    }
    return total;
}

}  // namespace spincgeom
