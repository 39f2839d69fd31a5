#pragma once

// Verification suites shared by the CLI and the acceptance tests.  Each
// suite assembles a Report; preconditions surface as std::domain_error /
// std::invalid_argument from the underlying modules.

#include <optional>
#include <string>

#include "spincgeom/catalog.hpp"
#include "spincgeom/correspondence.hpp"
#include "spincgeom/report.hpp"
#include "spincgeom/spin_connection.hpp"
#include "spincgeom/surfaces_ekt.hpp"

namespace spincgeom {

extern const char* const kVersion;

// Killing spinor suite on E(kappa, tau) in the homogeneous frame.
Report run_model_suite(double kappa, double tau, Chirality ch,
                       double tol = 1e-12);

// Surface compatibility + restricted spinor suite for a catalog entry.
Report run_surface_suite(const CatalogEntry& entry, const SurfaceCheckOptions& opts,
                         double tol);

// Sister correspondence: parameters always reported; when `entry` is given
// the transformed data is verified in the sister model.
Report run_sister_suite(const SisterParams& params,
                        const std::optional<CatalogEntry>& entry,
                        const SurfaceCheckOptions& opts, double tol);

enum class Mc2Case { Sasaki, Umbilic, Commutator, GaussIffCodazzi };
Mc2Case parse_mc2_case(const std::string& name);  // throws invalid_argument

Report run_mc2_suite(double c, Mc2Case which);

}  // namespace spincgeom
