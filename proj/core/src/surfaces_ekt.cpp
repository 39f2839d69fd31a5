#include "spincgeom/surfaces_ekt.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "spincgeom/util.hpp"

namespace spincgeom {

Eigen::Matrix2d rotate_J(const Eigen::Matrix2d& g) {
    double det = g.determinant();
    if (det <= 0.0) throw std::invalid_argument("rotate_J: metric must be positive definite");
    Eigen::Matrix2d eps;
    eps << 0, -1, 1, 0;
    return std::sqrt(det) * g.inverse() * eps;
}

SurfaceField::SurfaceField(const CatalogEntry& entry, double jet_step)
    : entry_(entry), spec_(entry.spec()), chart_(spec_), h_(jet_step) {
    if (!(jet_step > 0.0)) throw std::invalid_argument("SurfaceField: jet_step must be positive");
}

SurfacePointData SurfaceField::at(double u, double v) const {
    // The jets are formed in extended precision: the second differences below
    // cancel ~10 digits at the default step, which double-precision chart
    // evaluation would turn into O(1e-6) noise in the shape operator.
    using V3l = Eigen::Matrix<long double, 3, 1>;
    const long double h = h_;
    auto F = [&](long double a, long double b) { return entry_.immersion_ld(a, b); };

    V3l pl = F(u, v);
    Eigen::Vector3d p = pl.cast<double>();
    if (!p.allFinite()) throw std::domain_error("SurfaceField: immersion not finite");
    chart_.require_in_domain(p(0), p(1));

    Eigen::Vector3d Fu = ((F(u + h, v) - F(u - h, v)) / (2 * h)).cast<double>();
    Eigen::Vector3d Fv = ((F(u, v + h) - F(u, v - h)) / (2 * h)).cast<double>();
    Eigen::Vector3d Fuu = ((F(u + h, v) - 2 * pl + F(u - h, v)) / (h * h)).cast<double>();
    Eigen::Vector3d Fvv = ((F(u, v + h) - 2 * pl + F(u, v - h)) / (h * h)).cast<double>();
    Eigen::Vector3d Fuv = ((F(u + h, v + h) - F(u + h, v - h) - F(u - h, v + h) +
                            F(u - h, v - h)) / (4 * h * h)).cast<double>();

    Eigen::Matrix3d G = chart_.metric(p);
    auto chr = chart_.christoffels(p);

    SurfacePointData d;
    d.p = p;
    d.Fu = Fu;
    d.Fv = Fv;
    d.g << Fu.transpose() * G * Fu, Fu.transpose() * G * Fv,
           Fv.transpose() * G * Fu, Fv.transpose() * G * Fv;
    if (d.g.determinant() <= 0.0)
        throw std::domain_error("SurfaceField: chart is not an immersion at a sample point");

    // Unit normal: w = G^{-1} (Fu x Fv) annihilates the tangent plane and is
    // automatically positively oriented (det[Fu, Fv, w] = cross . G^{-1} cross > 0).
    Eigen::Vector3d cross = Fu.cross(Fv);
    Eigen::Vector3d w = G.ldlt().solve(cross);
    d.nu = w / std::sqrt(w.transpose() * G * w);

    auto second = [&](const Eigen::Vector3d& Fab, const Eigen::Vector3d& A,
                      const Eigen::Vector3d& B) {
        Eigen::Vector3d s = Fab;
        for (int k = 0; k < 3; ++k) s(k) += A.transpose() * chr[k] * B;
        return double(s.transpose() * G * d.nu);
    };
    d.II << second(Fuu, Fu, Fu), second(Fuv, Fu, Fv),
            second(Fuv, Fv, Fu), second(Fvv, Fv, Fv);
    d.shape = d.g.inverse() * d.II;
    d.H = 0.5 * d.shape.trace();

    Eigen::Vector3d xi(0, 0, 1);
    d.f = xi.transpose() * G * d.nu;
    Eigen::Vector2d xi_flat(Fu.transpose() * G * xi, Fv.transpose() * G * xi);
    d.T = d.g.inverse() * xi_flat;

    d.t1 = Fu / std::sqrt(d.g(0, 0));
    Eigen::Vector3d raw2 = Fv - (d.g(0, 1) / d.g(0, 0)) * Fu;
    d.t2 = raw2 / std::sqrt(raw2.transpose() * G * raw2);
    return d;
}

SurfacePointFn SurfaceField::fn() const {
    return [*this](double u, double v) { return at(u, v); };
}

double CompatibilityResidual::max_residual() const {
    double m = gauss;
    m = std::max(m, codazzi);
    m = std::max(m, cond1);
    m = std::max(m, cond2);
    m = std::max(m, unit);
    return m;
}

namespace {

struct FieldJet {
    SurfacePointData c;       // center
    SurfacePointData up, um;  // u +- H
    SurfacePointData vp, vm;  // v +- H
    double H;

    Eigen::Matrix2d dg(int dir) const {
        const SurfacePointData& a = dir == 0 ? up : vp;
        const SurfacePointData& b = dir == 0 ? um : vm;
        return (a.g - b.g) / (2 * H);
    }
    Eigen::Matrix2d dshape(int dir) const {
        const SurfacePointData& a = dir == 0 ? up : vp;
        const SurfacePointData& b = dir == 0 ? um : vm;
        return (a.shape - b.shape) / (2 * H);
    }
    Eigen::Vector2d dT(int dir) const {
        const SurfacePointData& a = dir == 0 ? up : vp;
        const SurfacePointData& b = dir == 0 ? um : vm;
        return (a.T - b.T) / (2 * H);
    }
    double df(int dir) const {
        const SurfacePointData& a = dir == 0 ? up : vp;
        const SurfacePointData& b = dir == 0 ? um : vm;
        return (a.f - b.f) / (2 * H);
    }
};

// Induced Christoffels gamma[c](a, b) from the metric jet.
std::array<Eigen::Matrix2d, 2> induced_christoffels(const FieldJet& jet) {
    Eigen::Matrix2d ginv = jet.c.g.inverse();
    std::array<Eigen::Matrix2d, 2> dg = {jet.dg(0), jet.dg(1)};
    std::array<Eigen::Matrix2d, 2> chr;
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double s = 0.0;
                for (int l = 0; l < 2; ++l)
                    s += ginv(c, l) * (dg[a](b, l) + dg[b](a, l) - dg[l](a, b));
                chr[c](a, b) = 0.5 * s;
            }
    return chr;
}

}  // namespace

double gauss_curvature(const SurfacePointFn& fn, double u, double v, double H) {
    auto g = [&](double a, double b) { return fn(a, b).g; };
    Eigen::Matrix2d gc = g(u, v);
    Eigen::Matrix2d gu = (g(u + H, v) - g(u - H, v)) / (2 * H);
    Eigen::Matrix2d gv = (g(u, v + H) - g(u, v - H)) / (2 * H);
    Eigen::Matrix2d guu = (g(u + H, v) - 2 * gc + g(u - H, v)) / (H * H);
    Eigen::Matrix2d gvv = (g(u, v + H) - 2 * gc + g(u, v - H)) / (H * H);
    Eigen::Matrix2d guv = (g(u + H, v + H) - g(u + H, v - H) - g(u - H, v + H) +
                           g(u - H, v - H)) / (4 * H * H);

    const double E = gc(0, 0), F = gc(0, 1), Gm = gc(1, 1);
    const double Eu = gu(0, 0), Ev = gv(0, 0);
    const double Fu = gu(0, 1), Fv = gv(0, 1);
    const double Gu = gu(1, 1), Gv = gv(1, 1);
    const double Evv = gvv(0, 0), Guu = guu(1, 1), Fuv = guv(0, 1);

    Eigen::Matrix3d M1, M2;
    M1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, E, F,
          0.5 * Gv, F, Gm;
    M2 << 0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, E, F,
          0.5 * Gu, F, Gm;
    double det = E * Gm - F * F;
    return (M1.determinant() - M2.determinant()) / (det * det);
}

CompatibilityResidual check_compatibility_ekt(const SurfacePointFn& fn,
                                              const ModelSpec& spec, const Domain& dom,
                                              const SurfaceCheckOptions& opts) {
    const int n = opts.grid;
    if (n < 4) throw std::invalid_argument("check_compatibility_ekt: grid too small");
    const double spanu = dom.u1 - dom.u0, spanv = dom.v1 - dom.v0;
    double H = opts.field_step > 0.0 ? opts.field_step : std::max(spanu, spanv) / n;
    const double tau = spec.tau;
    const double bq = spec.bundle_quantity();

    // Interior sample margin so every stencil point stays inside the domain.
    const double mu = 1.25 * H, mv = 1.25 * H;
    if (2 * mu >= spanu || 2 * mv >= spanv)
        throw std::invalid_argument("check_compatibility_ekt: field_step too large for domain");

    std::vector<CompatibilityResidual> parts(n);
    std::vector<std::vector<double>> Hs(n);

    parallel_for(n, opts.threads, [&](int i) {
        CompatibilityResidual r{};
        auto& hrow = Hs[i];
        double u = dom.u0 + mu + (spanu - 2 * mu) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            double v = dom.v0 + mv + (spanv - 2 * mv) * j / (n - 1);

            FieldJet jet{fn(u, v), fn(u + H, v), fn(u - H, v), fn(u, v + H),
                         fn(u, v - H), H};
            const SurfacePointData& d = jet.c;
            auto chr = induced_christoffels(jet);
            Eigen::Matrix2d J = rotate_J(d.g);

            auto gnorm = [&](const Eigen::Vector2d& x) {
                return std::sqrt(std::max(0.0, double(x.transpose() * d.g * x)));
            };

            // Gauss equation.  The Brioschi formula differentiates the metric
            // twice, so it gets a finer stencil than the first-order jets.
            double K = gauss_curvature(fn, u, v, 0.5 * H);
            r.gauss = std::max(r.gauss,
                               std::abs(K - (d.shape.determinant() + tau * tau +
                                             bq * d.f * d.f)));

            // Covariant derivative of the shape operator (mixed indices):
            // (nabla_a E)^c_b = d_a E^c_b + chr^c_{a l} E^l_b - chr^l_{a b} E^c_l.
            auto covE = [&](int a) {
                Eigen::Matrix2d dE = jet.dshape(a);
                Eigen::Matrix2d out = dE;
                for (int c = 0; c < 2; ++c)
                    for (int b = 0; b < 2; ++b) {
                        double s = 0.0;
                        for (int l = 0; l < 2; ++l)
                            s += chr[c](a, l) * d.shape(l, b) - chr[l](a, b) * d.shape(c, l);
                        out(c, b) += s;
                    }
                return out;
            };
            Eigen::Vector2d codazzi_lhs = covE(0).col(1) - covE(1).col(0);
            Eigen::Vector2d Tflat = d.g * d.T;  // <., T>
            Eigen::Vector2d du(1, 0), dv(0, 1);
            Eigen::Vector2d codazzi_rhs = bq * d.f * (Tflat(1) * du - Tflat(0) * dv);
            r.codazzi = std::max(r.codazzi, gnorm(codazzi_lhs - codazzi_rhs));

            // nabla_X T = f (E X - tau J X), df(X) = -<E X - tau J X, T>.
            for (int a = 0; a < 2; ++a) {
                Eigen::Vector2d X = a == 0 ? du : dv;
                Eigen::Vector2d covT = jet.dT(a) + chr[0].row(a).transpose().dot(d.T) * du +
                                       chr[1].row(a).transpose().dot(d.T) * dv;
                Eigen::Vector2d EX = d.shape * X;
                Eigen::Vector2d W = EX - tau * (J * X);
                r.cond1 = std::max(r.cond1, gnorm(covT - d.f * W));
                double lhs = jet.df(a);
                double rhs = -double(W.transpose() * d.g * d.T);
                r.cond2 = std::max(r.cond2, std::abs(lhs - rhs));
            }

            r.unit = std::max(r.unit,
                              std::abs(d.f * d.f + double(d.T.transpose() * d.g * d.T) - 1.0));
            hrow.push_back(d.H);
        }
        parts[i] = r;
    });

    CompatibilityResidual total{};
    double sum = 0.0, sum2 = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        total.gauss = std::max(total.gauss, parts[i].gauss);
        total.codazzi = std::max(total.codazzi, parts[i].codazzi);
        total.cond1 = std::max(total.cond1, parts[i].cond1);
        total.cond2 = std::max(total.cond2, parts[i].cond2);
        total.unit = std::max(total.unit, parts[i].unit);
        for (double h : Hs[i]) {
            sum += h;
            sum2 += h * h;
            ++count;
        }
    }
    total.mean_H = sum / count;
    total.stddev_H = std::sqrt(std::max(0.0, sum2 / count - total.mean_H * total.mean_H));
    return total;
}

CompatibilityResidual check_compatibility_ekt(const CatalogEntry& entry,
                                              const SurfaceCheckOptions& opts) {
    SurfaceField field(entry, opts.jet_step);
    return check_compatibility_ekt(field.fn(), field.spec(), field.domain(), opts);
}

}  // namespace spincgeom
