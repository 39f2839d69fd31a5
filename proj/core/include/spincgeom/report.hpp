#pragma once

// Machine-readable verification reports.  A case records the largest residual
// of one verified identity against its tolerance; expected-failure cases
// (impossibility statements) pass when the residual is LARGE.

#include <string>
#include <vector>

namespace spincgeom {

struct Case {
    std::string name;
    double residual_max = 0.0;
    double tolerance = 0.0;
    bool expect_large = false;  // pass iff residual_max >= tolerance
    bool pass = false;

    static Case make(const std::string& name, double residual, double tol);
    static Case make_expected_failure(const std::string& name, double residual,
                                      double floor);
};

struct Metadata {
    std::string version;
    int grid = 0;
    double jet_step = 0.0;
    double field_step = 0.0;
    std::vector<std::pair<std::string, double>> values;  // suite-specific numbers
};

struct Report {
    std::string suite;
    Metadata metadata;
    std::vector<Case> cases;

    bool all_pass() const;
    int passed() const;
    int failed() const;

    // Deterministic JSON serialization (insertion order preserved).
    std::string to_json(int indent = 2) const;
};

}  // namespace spincgeom
