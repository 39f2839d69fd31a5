#include "spincgeom/report.hpp"

#include <json.hpp>

namespace spincgeom {

Case Case::make(const std::string& name, double residual, double tol) {
    Case c;
    c.name = name;
    c.residual_max = residual;
    c.tolerance = tol;
    c.expect_large = false;
    c.pass = residual <= tol;
    return c;
}

Case Case::make_expected_failure(const std::string& name, double residual,
                                 double floor) {
    Case c;
    c.name = name;
    c.residual_max = residual;
    c.tolerance = floor;
    c.expect_large = true;
    c.pass = residual >= floor;
    return c;
}

bool Report::all_pass() const {
    for (const Case& c : cases)
        if (!c.pass) return false;
    return true;
}

int Report::passed() const {
    int n = 0;
    for (const Case& c : cases) n += c.pass ? 1 : 0;
    return n;
}

int Report::failed() const { return int(cases.size()) - passed(); }

std::string Report::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json meta;
    meta["version"] = metadata.version;
    if (metadata.grid > 0) meta["grid"] = metadata.grid;
    if (metadata.jet_step > 0) meta["jet_step"] = metadata.jet_step;
    if (metadata.field_step > 0) meta["field_step"] = metadata.field_step;
    for (const auto& kv : metadata.values) meta[kv.first] = kv.second;
    j["metadata"] = meta;
    j["cases"] = nlohmann::ordered_json::array();
    for (const Case& c : cases) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["residual_max"] = c.residual_max;
        jc["tolerance"] = c.tolerance;
        if (c.expect_large) jc["expect_large"] = true;
        jc["pass"] = c.pass;
        j["cases"].push_back(jc);
    }
    j["summary"] = {{"passed", passed()}, {"failed", failed()},
                    {"total", int(cases.size())}};
    return j.dump(indent);
}

}  // namespace spincgeom
