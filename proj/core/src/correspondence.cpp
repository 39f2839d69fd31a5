#include "spincgeom/correspondence.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace spincgeom {

SisterData solve_sister(const SisterParams& params) {
    if (params.sign != 1 && params.sign != -1)
        throw std::invalid_argument("solve_sister: sign must be +1 or -1");
    double disc = params.H1 * params.H1 + params.tau1 * params.tau1 -
                  params.tau2 * params.tau2;
    if (disc < 0.0) {
        std::ostringstream os;
        os << "solve_sister: no sister with tau2 = " << params.tau2
           << " (H1^2 + tau1^2 - tau2^2 = " << disc << " < 0)";
        throw std::domain_error(os.str());
    }
    if (params.tau1 == 0.0 && params.H1 == 0.0)
        throw std::domain_error("solve_sister: phase undefined for tau1 = H1 = 0");

    SisterData d;
    d.H2 = params.sign * std::sqrt(disc);
    d.kappa2 = params.kappa1 - 4.0 * params.tau1 * params.tau1 +
               4.0 * params.tau2 * params.tau2;
    std::complex<double> num(params.tau2, d.H2), den(params.tau1, params.H1);
    d.theta = std::arg(num / den);  // principal branch (-pi, pi]
    return d;
}

Eigen::Matrix2d rotation_theta(const Eigen::Matrix2d& g, double theta) {
    return std::cos(theta) * Eigen::Matrix2d::Identity() + std::sin(theta) * rotate_J(g);
}

Eigen::Matrix2d rotate_shape(const Eigen::Matrix2d& g, const Eigen::Matrix2d& shape1,
                             double H1, double H2, double theta) {
    Eigen::Matrix2d R = rotation_theta(g, theta);
    return H2 * Eigen::Matrix2d::Identity() +
           R * (shape1 - H1 * Eigen::Matrix2d::Identity());
}

Eigen::Vector2cd rotate_spinor(const Eigen::Vector2cd& phi, double theta) {
    return Eigen::Vector2cd(phi(0), std::exp(std::complex<double>(0, theta)) * phi(1));
}

SurfacePointFn sister_point_fn(const SurfacePointFn& fn, const SisterParams& params,
                               const SisterData& data) {
    double theta = data.theta + params.theta_offset;
    double H1 = params.H1, H2 = data.H2;
    return [fn, theta, H1, H2](double u, double v) {
        SurfacePointData d = fn(u, v);
        Eigen::Matrix2d R = rotation_theta(d.g, theta);
        d.shape = H2 * Eigen::Matrix2d::Identity() +
                  R * (d.shape - H1 * Eigen::Matrix2d::Identity());
        d.II = d.g * d.shape;
        d.T = R * d.T;
        d.H = 0.5 * d.shape.trace();
        // g, f, and the chart jets are unchanged by the correspondence.
        return d;
    };
}

SisterReport verify_sister(const SurfacePointFn& fn, const Domain& dom,
                           const SisterParams& params, const SurfaceCheckOptions& opts,
                           double cmc_tol) {
    SisterReport rep;
    rep.data = solve_sister(params);

    ModelSpec spec1 = ModelSpec::ekt(params.kappa1, params.tau1);
    rep.original = check_compatibility_ekt(fn, spec1, dom, opts);

    if (rep.original.stddev_H > cmc_tol) {
        std::ostringstream os;
        os << "verify_sister: surface is not CMC (stddev of H = "
           << rep.original.stddev_H << " > " << cmc_tol << ")";
        throw std::domain_error(os.str());
    }
    if (std::abs(rep.original.mean_H - params.H1) > cmc_tol) {
        std::ostringstream os;
        os << "verify_sister: measured mean curvature " << rep.original.mean_H
           << " does not match H1 = " << params.H1;
        throw std::domain_error(os.str());
    }

    ModelSpec spec2 = ModelSpec::ekt(rep.data.kappa2, params.tau2);
    rep.sister = check_compatibility_ekt(sister_point_fn(fn, params, rep.data),
                                         spec2, dom, opts);
    return rep;
}

SisterReport verify_sister(const CatalogEntry& entry, const SisterParams& params,
                           const SurfaceCheckOptions& opts, double cmc_tol) {
    SurfaceField field(entry, opts.jet_step);
    return verify_sister(field.fn(), field.domain(), params, opts, cmc_tol);
}

}  // namespace spincgeom
