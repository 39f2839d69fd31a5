#pragma once

// Induction of surface data from parametric charts immersed in the
// coordinate model of E(kappa, tau), and the verification of the
// compatibility equations for the quadruple (g, E, T, f):
//
//   (G)  K = det E + tau^2 + (kappa - 4 tau^2) f^2
//   (C)  d^nabla E (X, Y) = (kappa - 4 tau^2) f (<Y, T> X - <X, T> Y)
//   (1)  nabla_X T = f (E X - tau J X)
//   (2)  df(X) = -<E X - tau J X, T>
//
// together with f^2 + |T|^2 = 1.  First and second fundamental forms are
// obtained by central differences of the immersion with step `jet_step`;
// derivatives of the induced fields (E, T, f, g) use central differences
// with the coarser step `field_step` (the discretization scale of the
// residuals, O(field_step^2) truncation).

#include <functional>

#include <Eigen/Dense>

#include "spincgeom/catalog.hpp"
#include "spincgeom/models.hpp"

namespace spincgeom {

struct SurfacePointData {
    Eigen::Vector3d p;       // ambient coordinates of the immersion point
    Eigen::Matrix2d g;       // induced metric in chart coordinates
    Eigen::Matrix2d II;      // second fundamental form (both indices down)
    Eigen::Matrix2d shape;   // shape operator E = g^{-1} II (mixed indices)
    Eigen::Vector2d T;       // tangential part of xi, contravariant components
    double f = 0.0;          // normal part of xi
    double H = 0.0;          // mean curvature, tr(shape) / 2
    Eigen::Vector3d t1, t2, nu;  // adapted orthonormal frame, ambient coords
    Eigen::Vector3d Fu, Fv;      // chart tangent vectors, ambient coords
};

using SurfacePointFn = std::function<SurfacePointData(double, double)>;

struct Domain {
    double u0, u1, v0, v1;
};

// Positively oriented rotation by pi/2 of the metric g (mixed-index matrix).
Eigen::Matrix2d rotate_J(const Eigen::Matrix2d& g);

class SurfaceField {
  public:
    SurfaceField(const CatalogEntry& entry, double jet_step);

    const ModelSpec& spec() const { return spec_; }
    const EktChart& chart() const { return chart_; }
    Domain domain() const { return {entry_.u0, entry_.u1, entry_.v0, entry_.v1}; }
    double jet_step() const { return h_; }
    const CatalogEntry& entry() const { return entry_; }

    Eigen::Vector3d immersion(double u, double v) const { return entry_.immersion(u, v); }
    SurfacePointData at(double u, double v) const;
    SurfacePointFn fn() const;

  private:
    CatalogEntry entry_;
    ModelSpec spec_;
    EktChart chart_;
    double h_;
};

struct SurfaceCheckOptions {
    int grid = 64;           // sample grid per axis
    double jet_step = 1e-5;  // immersion jet step (SurfaceField construction)
    double field_step = 0.0; // 0 -> (domain span) / grid
    int threads = 0;         // 0 -> SPINC_GEOM_THREADS or hardware default
};

struct CompatibilityResidual {
    double gauss = 0.0;    // (G)
    double codazzi = 0.0;  // (C), g-norm of the residual vector
    double cond1 = 0.0;    // (1), max over X in {du, dv}
    double cond2 = 0.0;    // (2), max over X in {du, dv}
    double unit = 0.0;     // |f^2 + |T|^2 - 1|
    double mean_H = 0.0;
    double stddev_H = 0.0;
    double max_residual() const;
};

// Verify the compatibility equations for point data produced by `fn` against
// the ambient parameters (kappa, tau), sampling an interior grid of `dom`.
CompatibilityResidual check_compatibility_ekt(const SurfacePointFn& fn,
                                              const ModelSpec& spec, const Domain& dom,
                                              const SurfaceCheckOptions& opts);

// Convenience overload inducing the data from a catalog entry.
CompatibilityResidual check_compatibility_ekt(const CatalogEntry& entry,
                                              const SurfaceCheckOptions& opts);

// Gauss curvature of the induced metric at (u, v) by central differences of
// the metric field with step `field_step` (Brioschi formula).
double gauss_curvature(const SurfacePointFn& fn, double u, double v, double field_step);

}  // namespace spincgeom
