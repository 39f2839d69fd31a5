#include "spincgeom/runner.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "spincgeom/hypersurfaces_mc2.hpp"
#include "spincgeom/spinor_restriction.hpp"

namespace spincgeom {

const char* const kVersion = "0.1.0";

namespace {

Metadata base_metadata() {
    Metadata m;
    m.version = kVersion;
    return m;
}

}  // namespace

Report run_model_suite(double kappa, double tau, Chirality ch, double tol) {
    ModelSpec spec = ModelSpec::ekt(kappa, tau);
    KillingVerdict v = verify_killing(spec, ch);

    Report rep;
    rep.suite = "model";
    rep.metadata = base_metadata();
    rep.metadata.values = {{"kappa", kappa}, {"tau", tau}};
    rep.cases.push_back(Case::make("vertical_eigenvalue", v.eigen_residual, tol));
    rep.cases.push_back(Case::make("killing_equation", v.killing_residual, tol));
    rep.cases.push_back(Case::make("dirac_eigenvalue", v.dirac_residual, tol));
    rep.cases.push_back(Case::make("aux_curvature_action", v.eq_curvature_residual, tol));
    rep.cases.push_back(Case::make("lichnerowicz", v.lichnerowicz_residual, tol));
    rep.cases.push_back(Case::make("ricci_identity", v.ricci_identity_residual, tol));
    rep.cases.push_back(Case::make("curvature_trace_identity", v.eq5_residual, tol));
    return rep;
}

Report run_surface_suite(const CatalogEntry& entry, const SurfaceCheckOptions& opts,
                         double tol) {
    SurfaceField field(entry, opts.jet_step);
    CompatibilityResidual comp =
        check_compatibility_ekt(field.fn(), field.spec(), field.domain(), opts);
    RestrictionResidual res = check_restriction(field, opts);

    Report rep;
    rep.suite = "surface";
    rep.metadata = base_metadata();
    rep.metadata.grid = opts.grid;
    rep.metadata.jet_step = opts.jet_step;
    const Domain& dom = field.domain();
    rep.metadata.field_step =
        opts.field_step > 0.0
            ? opts.field_step
            : std::max(dom.u1 - dom.u0, dom.v1 - dom.v0) / opts.grid;
    rep.metadata.values = {{"kappa", entry.kappa},
                           {"tau", entry.tau},
                           {"mean_H", comp.mean_H},
                           {"stddev_H", comp.stddev_H}};
    rep.cases.push_back(Case::make("gauss", comp.gauss, tol));
    rep.cases.push_back(Case::make("codazzi", comp.codazzi, tol));
    rep.cases.push_back(Case::make("vertical_field", comp.cond1, tol));
    rep.cases.push_back(Case::make("normal_component", comp.cond2, tol));
    rep.cases.push_back(Case::make("unit_decomposition", comp.unit, tol));
    rep.cases.push_back(Case::make("restricted_killing", res.eq_killing, tol));
    rep.cases.push_back(Case::make("dirac", res.dirac, tol));
    rep.cases.push_back(Case::make("dirac_ambient", res.dirac_gauss, tol));
    rep.cases.push_back(Case::make("norm_drift", res.norm_drift, tol));
    rep.cases.push_back(Case::make("aux_pullback", res.omega_pullback, tol));
    rep.cases.push_back(Case::make("normal_part_spinor", res.f_extract, tol));
    rep.cases.push_back(Case::make("tangent_part_spinor", res.T_extract, tol));
    rep.cases.push_back(Case::make("spinor_algebraic", res.algebraic, tol));
    rep.cases.push_back(Case::make("energy_momentum_trace", res.em_trace, tol));
    rep.cases.push_back(Case::make("energy_momentum_asym", res.em_asym, tol));
    rep.cases.push_back(Case::make("energy_momentum_reconstruction",
                                   res.em_reconstruction, tol));
    return rep;
}

Report run_sister_suite(const SisterParams& params,
                        const std::optional<CatalogEntry>& entry,
                        const SurfaceCheckOptions& opts, double tol) {
    Report rep;
    rep.suite = "sister";
    rep.metadata = base_metadata();

    if (entry) {
        SisterReport sr = verify_sister(*entry, params, opts);
        rep.metadata.grid = opts.grid;
        rep.metadata.jet_step = opts.jet_step;
        rep.metadata.values = {{"kappa1", params.kappa1}, {"tau1", params.tau1},
                               {"H1", params.H1},         {"tau2", params.tau2},
                               {"kappa2", sr.data.kappa2}, {"H2", sr.data.H2},
                               {"theta", sr.data.theta}};
        rep.cases.push_back(
            Case::make("original_compatibility", sr.original.max_residual(), tol));
        rep.cases.push_back(Case::make("original_cmc", sr.original.stddev_H, 1e-3));
        rep.cases.push_back(
            Case::make("sister_compatibility", sr.sister.max_residual(), tol));
    } else {
        SisterData d = solve_sister(params);
        rep.metadata.values = {{"kappa1", params.kappa1}, {"tau1", params.tau1},
                               {"H1", params.H1},         {"tau2", params.tau2},
                               {"kappa2", d.kappa2},      {"H2", d.H2},
                               {"theta", d.theta}};
        rep.cases.push_back(Case::make(
            "bundle_quantity_invariant",
            std::abs((d.kappa2 - 4 * params.tau2 * params.tau2) -
                     (params.kappa1 - 4 * params.tau1 * params.tau1)),
            1e-12));
        rep.cases.push_back(Case::make(
            "curvature_norm_invariant",
            std::abs((d.H2 * d.H2 + params.tau2 * params.tau2) -
                     (params.H1 * params.H1 + params.tau1 * params.tau1)),
            1e-12));
    }
    return rep;
}

Mc2Case parse_mc2_case(const std::string& name) {
    if (name == "sasaki") return Mc2Case::Sasaki;
    if (name == "umbilic") return Mc2Case::Umbilic;
    if (name == "commutator") return Mc2Case::Commutator;
    if (name == "gauss-iff-codazzi") return Mc2Case::GaussIffCodazzi;
    throw std::invalid_argument("unknown mc2 case: " + name);
}

Report run_mc2_suite(double c, Mc2Case which) {
    Report rep;
    rep.suite = "mc2";
    rep.metadata = base_metadata();
    rep.metadata.values = {{"c", c}};

    switch (which) {
        case Mc2Case::Sasaki: {
            ContactInstance inst = ContactInstance::sasaki(c);
            Eigen::Matrix3d E = sasaki_shape(c);
            rep.cases.push_back(
                Case::make("contact_structure", structure_residual(inst), 1e-12));
            rep.cases.push_back(
                Case::make("aux_curvature", aux_curvature_residual(inst), 1e-12));
            ParallelRestrictionResidual pr = restrict_parallel_residual(inst, E);
            rep.cases.push_back(Case::make("generalized_killing", pr.killing, 1e-12));
            rep.cases.push_back(Case::make("reeb_eigenspinor", pr.eigen, 1e-12));
            rep.cases.push_back(Case::make("curvature_action", pr.curvature, 1e-12));
            CsfCompatibilityResidual comp = check_compatibility_csf(inst, E);
            rep.cases.push_back(Case::make("gauss", comp.gauss, 1e-10));
            rep.cases.push_back(Case::make("codazzi", comp.codazzi, 1e-10));
            rep.cases.push_back(Case::make("contact_derivative", comp.cond3, 1e-10));
            rep.cases.push_back(Case::make("reeb_derivative", comp.cond4, 1e-10));
            rep.cases.push_back(Case::make(
                "mean_curvature",
                std::abs(E.trace() / 3.0 - sasaki_mean_curvature(c)), 1e-15));
            break;
        }
        case Mc2Case::Umbilic: {
            // The homogeneous model carrying a Killing spinor satisfies every
            // spinor hypothesis for c = (kappa - 4 tau^2) / 6 with E = -tau Id,
            // yet the Codazzi equation fails by exactly 2|c|: no umbilic
            // hypersurface of the complex space form exists.
            double kappa = 6.0 * c + 4.0, tau = -1.0;
            ContactInstance inst = ContactInstance::canonical(kappa, tau);
            ParallelRestrictionResidual pr = restrict_parallel_residual(inst, inst.shape);
            rep.cases.push_back(
                Case::make("spinor_hypotheses", pr.max_residual(), 1e-12));
            CsfCompatibilityResidual comp = check_compatibility_csf(inst, inst.shape);
            rep.cases.push_back(
                Case::make_expected_failure("codazzi_violation", comp.codazzi,
                                            std::abs(c)));
            rep.cases.push_back(Case::make("codazzi_violation_is_2c",
                                           std::abs(comp.codazzi - 2.0 * std::abs(c)),
                                           1e-12));
            // Umbilic family scan: every E = lambda Id fails the Codazzi
            // equation for c != 0.
            double worst = std::numeric_limits<double>::infinity();
            for (int k = -8; k <= 8; ++k) {
                Eigen::Matrix3d E = 0.5 * k * Eigen::Matrix3d::Identity();
                ContactInstance sas = ContactInstance::sasaki(c);
                CsfCompatibilityResidual r = check_compatibility_csf(sas, E);
                worst = std::min(worst, r.codazzi);
            }
            rep.cases.push_back(
                Case::make_expected_failure("umbilic_codazzi_floor", worst,
                                            std::abs(c)));
            break;
        }
        case Mc2Case::Commutator: {
            std::mt19937 rng(20240817u);
            std::uniform_real_distribution<double> dist(-2.0, 2.0);
            double worst = 0.0;
            for (int s = 0; s < 1000; ++s) {
                Eigen::Matrix3d A;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) A(i, j) = dist(rng);
                Eigen::Matrix3d E = 0.5 * (A + A.transpose());
                worst = std::max(worst, commutator_lemma_residual(E, rng, 2));
            }
            rep.cases.push_back(Case::make("clifford_commutator", worst, 1e-13));
            break;
        }
        case Mc2Case::GaussIffCodazzi: {
            ContactInstance inst = ContactInstance::sasaki(c);
            Eigen::Matrix3d E = sasaki_shape(c);
            ProbeReport pr = gauss_iff_codazzi_probe(inst, E);
            rep.cases.push_back(
                Case::make("twelve_identities", pr.max_residual(), 1e-10));

            // Inject a synthetic Codazzi bump delta * xi into d^nabla E(e_2, e_1)
            // and check it reappears on the Gauss side of the (e_1, e_1 .)
            // pairing with coefficient delta / 2.
            const double delta = 1e-3;
            DnablaOverride bump = [&](int k, int m) {
                Eigen::Vector3d base = dnabla_shape(inst, E, k, m);
                if (k == 1 && m == 0) base += delta * Eigen::Vector3d::Unit(2);
                return base;
            };
            ProbeReport pb = gauss_iff_codazzi_probe(inst, E, bump);
            double propagation = std::abs(pb.residual(0, 1) + 0.5 * delta);
            for (int m = 0; m < 3; ++m)
                for (int b = 0; b < 4; ++b)
                    if (!(m == 0 && b == 1))
                        propagation = std::max(propagation,
                                               std::abs(pb.residual(m, b) -
                                                        pr.residual(m, b)));
            rep.cases.push_back(Case::make("codazzi_bump_propagation", propagation, 1e-8));
            break;
        }
    }
    return rep;
}

}  // namespace spincgeom
