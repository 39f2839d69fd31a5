// Command-line verification runner.  Exit codes: 0 all cases pass, 1 a
// verification case failed, 2 usage error, 3 precondition violated.

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincgeom/catalog.hpp"
#include "spincgeom/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

int emit(const spincgeom::Report& rep, const std::string& out) {
    std::string text = rep.to_json();
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return kExitUsage;
        }
        f << text << "\n";
    }
    return rep.all_pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace spincgeom;

    CLI::App app{"Numerical verification of spin^c spinor geometry on "
                 "E(kappa, tau) and complex space forms"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("--out", out, "write the JSON report to FILE instead of stdout");

    // --- verify ---------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();  // allow --out after the suite name

    double kappa = 0.0, tau = 0.0;
    bool anti = false;
    CLI::App* model = verify->add_subcommand(
        "model", "Killing spinor identities in the homogeneous frame");
    model->fallthrough();
    model->add_option("--kappa", kappa, "base curvature")->required();
    model->add_option("--tau", tau, "bundle curvature")->required();
    model->add_flag("--anti", anti, "use the anti-canonical structure");

    std::string surf_name, catalog_file;
    SurfaceCheckOptions opts;
    double surf_tol = 5e-4;
    CLI::App* surface = verify->add_subcommand(
        "surface", "compatibility equations and restricted spinor on a chart");
    surface->fallthrough();
    surface->add_option("--name", surf_name, "built-in catalog entry");
    surface->add_option("--catalog", catalog_file, "JSON catalog file");
    surface->add_option("--grid", opts.grid, "samples per axis")
        ->default_val(64);
    surface->add_option("--fd-step", opts.jet_step, "immersion jet step")
        ->default_val(1e-5);
    surface->add_option("--field-step", opts.field_step,
                        "field derivative step (default: span / grid)");
    surface->add_option("--tol", surf_tol, "residual tolerance")
        ->default_val(5e-4);

    double mc2_c = 0.0;
    std::string mc2_case;
    CLI::App* mc2 = verify->add_subcommand(
        "mc2", "hypersurface identities for the complex space form");
    mc2->fallthrough();
    mc2->add_option("--c", mc2_c, "holomorphic sectional curvature / 4")
        ->required();
    mc2->add_option("--case", mc2_case,
                    "sasaki | umbilic | commutator | gauss-iff-codazzi")
        ->required();

    // --- sister ----------------------------------------------------------
    SisterParams sp;
    std::string sign = "+", sister_surface;
    SurfaceCheckOptions sister_opts;
    double sister_tol = 5e-4;
    CLI::App* sister = app.add_subcommand(
        "sister", "sister correspondence parameters and verification");
    sister->fallthrough();
    sister->add_option("--kappa1", sp.kappa1)->required();
    sister->add_option("--tau1", sp.tau1)->required();
    sister->add_option("--h1", sp.H1)->required();
    sister->add_option("--tau2", sp.tau2)->required();
    sister->add_option("--sign", sign, "branch of H2: + or -")->default_val("+");
    sister->add_option("--surface", sister_surface,
                       "verify the transform of this built-in entry");
    sister->add_option("--grid", sister_opts.grid)->default_val(64);
    sister->add_option("--fd-step", sister_opts.jet_step)->default_val(1e-5);
    sister->add_option("--tol", sister_tol)->default_val(5e-4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (model->parsed())
            return emit(run_model_suite(kappa, tau,
                                        anti ? Chirality::AntiCanonical
                                             : Chirality::Canonical),
                        out);

        if (surface->parsed()) {
            if (surf_name.empty() == catalog_file.empty()) {
                std::cerr << "error: give exactly one of --name or --catalog\n";
                return kExitUsage;
            }
            std::vector<CatalogEntry> entries;
            if (!surf_name.empty())
                entries.push_back(builtin_entry(surf_name));
            else
                entries = load_catalog(catalog_file);

            Report merged;
            merged.suite = "surface";
            bool first = true;
            for (const CatalogEntry& e : entries) {
                Report r = run_surface_suite(e, opts, surf_tol);
                if (first) {
                    merged.metadata = r.metadata;
                    first = false;
                }
                for (Case c : r.cases) {
                    c.name = e.name + "/" + c.name;
                    merged.cases.push_back(c);
                }
            }
            return emit(merged, out);
        }

        if (mc2->parsed())
            return emit(run_mc2_suite(mc2_c, parse_mc2_case(mc2_case)), out);

        if (sister->parsed()) {
            if (sign != "+" && sign != "-") {
                std::cerr << "error: --sign must be + or -\n";
                return kExitUsage;
            }
            sp.sign = sign == "+" ? +1 : -1;
            std::optional<CatalogEntry> entry;
            if (!sister_surface.empty()) entry = builtin_entry(sister_surface);
            return emit(run_sister_suite(sp, entry, sister_opts, sister_tol), out);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
