#pragma once

// Catalog of parametric surface charts in the coordinate model of
// E(kappa, tau).  Entries can be loaded from JSON files of the shape
//
//   [{"name": "...",
//     "ambient": {"kappa": k, "tau": t},
//     "chart":  {"x": "expr(u,v)", "y": "...", "z": "..."},
//     "domain": {"u": [a, b], "v": [a, b]},
//     "expected": {"max_residual": r}   // optional
//   }, ...]
//
// plus a set of built-in charts used by the test-suites.

#include <optional>
#include <string>
#include <vector>

#include "spincgeom/expr.hpp"
#include "spincgeom/models.hpp"

namespace spincgeom {

struct CatalogEntry {
    std::string name;
    double kappa = 0.0;
    double tau = 0.0;
    ExprPtr x, y, z;  // immersion components as functions of (u, v)
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
    std::optional<double> expected_max_residual;

    ModelSpec spec() const { return ModelSpec::ekt(kappa, tau); }
    Eigen::Vector3d immersion(double u, double v) const;
    // Extended precision; keeps finite-difference jets of the chart accurate.
    Eigen::Matrix<long double, 3, 1> immersion_ld(long double u, long double v) const;
};

// Built-in charts: slice-h2xr, nil3-vertical-cylinder,
// nil3-vertical-geodesic-cylinder, berger-chart-disk.
const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& builtin_entry(const std::string& name);

// Parse and validate catalog JSON text.  Throws std::invalid_argument naming
// the offending field for schema problems, std::domain_error for entries with
// kappa = 4 tau^2 or charts leaving the model domain (reporting a sample
// (u, v) at fault).
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

}  // namespace spincgeom
