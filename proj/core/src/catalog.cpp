#include "spincgeom/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spincgeom {

using nlohmann::json;

Eigen::Vector3d CatalogEntry::immersion(double u, double v) const {
    return Eigen::Vector3d(x->eval(u, v), y->eval(u, v), z->eval(u, v));
}

Eigen::Matrix<long double, 3, 1> CatalogEntry::immersion_ld(long double u,
                                                            long double v) const {
    Eigen::Matrix<long double, 3, 1> p;
    p << x->eval_ld(u, v), y->eval_ld(u, v), z->eval_ld(u, v);
    return p;
}

namespace {

CatalogEntry make_entry(const std::string& name, double kappa, double tau,
                        const std::string& ex, const std::string& ey,
                        const std::string& ez, double u0, double u1, double v0,
                        double v1, double expected) {
    CatalogEntry e;
    e.name = name;
    e.kappa = kappa;
    e.tau = tau;
    e.x = parse_expr(ex);
    e.y = parse_expr(ey);
    e.z = parse_expr(ez);
    e.u0 = u0;
    e.u1 = u1;
    e.v0 = v0;
    e.v1 = v1;
    e.expected_max_residual = expected;
    return e;
}

void validate_entry(const CatalogEntry& e) {
    if (std::abs(e.kappa - 4.0 * e.tau * e.tau) < 1e-12)
        throw std::domain_error("catalog entry '" + e.name +
                                "': kappa - 4 tau^2 must be nonzero");
    if (!(e.u1 > e.u0) || !(e.v1 > e.v0))
        throw std::invalid_argument("catalog entry '" + e.name +
                                    "': empty parameter domain");
    EktChart chart(ModelSpec::ekt(e.kappa, e.tau));
    const int n = 33;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double u = e.u0 + (e.u1 - e.u0) * i / (n - 1);
            double v = e.v0 + (e.v1 - e.v0) * j / (n - 1);
            Eigen::Vector3d p = e.immersion(u, v);
            if (!p.allFinite())
                throw std::domain_error("catalog entry '" + e.name +
                                        "': chart not finite at (u, v) = (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
            if (!chart.in_domain(p(0), p(1)))
                throw std::domain_error("catalog entry '" + e.name +
                                        "': chart leaves the model domain at (u, v) = (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        }
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> cat = [] {
        std::vector<CatalogEntry> v;
        // Totally geodesic slice H^2 x {0}.
        v.push_back(make_entry("slice-h2xr", -1.0, 0.0, "u", "v", "0", -0.6, 0.6,
                               -0.6, 0.6, 5e-4));
        // Flat minimal vertical plane over a base geodesic in Nil_3.
        v.push_back(make_entry("nil3-vertical-geodesic-cylinder", 0.0, 0.5, "u",
                               "0", "v", -0.8, 0.8, -0.8, 0.8, 5e-4));
        // CMC vertical cylinder over a unit base circle in Nil_3.
        v.push_back(make_entry("nil3-vertical-cylinder", 0.0, 0.5, "cos(u)",
                               "sin(u)", "v", 0.2, 1.4, -0.6, 0.6, 5e-4));
        // Generic curved graph inside a Berger-sphere chart disk.
        v.push_back(make_entry("berger-chart-disk", 1.0, 1.0, "0.4*u", "0.4*v",
                               "0.2*sin(u+v)", -0.5, 0.5, -0.5, 0.5, 5e-4));
        for (const auto& e : v) validate_entry(e);
        return v;
    }();
    return cat;
}

const CatalogEntry& builtin_entry(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown built-in surface '" + name + "'");
}

namespace {

double need_number(const json& j, const std::string& ctx, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument("catalog: missing or non-numeric field '" + ctx + "." +
                                    key + "'");
    return j[key].get<double>();
}

std::string need_string(const json& j, const std::string& ctx, const std::string& key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument("catalog: missing or non-string field '" + ctx + "." +
                                    key + "'");
    return j[key].get<std::string>();
}

const json& need_object(const json& j, const std::string& ctx, const std::string& key) {
    if (!j.contains(key) || !j[key].is_object())
        throw std::invalid_argument("catalog: missing or non-object field '" + ctx + "." +
                                    key + "'");
    return j[key];
}

std::pair<double, double> need_interval(const json& j, const std::string& ctx,
                                        const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number())
        throw std::invalid_argument("catalog: field '" + ctx + "." + key +
                                    "' must be a numeric pair [a, b]");
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("catalog: invalid JSON: ") + err.what());
    }
    if (!root.is_array()) throw std::invalid_argument("catalog: top level must be an array");

    std::vector<CatalogEntry> out;
    for (std::size_t idx = 0; idx < root.size(); ++idx) {
        const json& j = root[idx];
        std::string ctx = "[" + std::to_string(idx) + "]";
        if (!j.is_object()) throw std::invalid_argument("catalog: entry " + ctx + " must be an object");
        CatalogEntry e;
        e.name = need_string(j, ctx, "name");
        const json& amb = need_object(j, ctx, "ambient");
        e.kappa = need_number(amb, ctx + ".ambient", "kappa");
        e.tau = need_number(amb, ctx + ".ambient", "tau");
        const json& chart = need_object(j, ctx, "chart");
        try {
            e.x = parse_expr(need_string(chart, ctx + ".chart", "x"));
            e.y = parse_expr(need_string(chart, ctx + ".chart", "y"));
            e.z = parse_expr(need_string(chart, ctx + ".chart", "z"));
        } catch (const ParseError& pe) {
            throw std::invalid_argument("catalog entry '" + e.name +
                                        "': chart expression error: " + pe.what());
        }
        const json& dom = need_object(j, ctx, "domain");
        std::tie(e.u0, e.u1) = need_interval(dom, ctx + ".domain", "u");
        std::tie(e.v0, e.v1) = need_interval(dom, ctx + ".domain", "v");
        if (j.contains("expected")) {
            const json& exp = j["expected"];
            if (!exp.is_object())
                throw std::invalid_argument("catalog: field '" + ctx + ".expected' must be an object");
            if (exp.contains("max_residual"))
                e.expected_max_residual = need_number(exp, ctx + ".expected", "max_residual");
        }
        validate_entry(e);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("catalog: cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

}  // namespace spincgeom
