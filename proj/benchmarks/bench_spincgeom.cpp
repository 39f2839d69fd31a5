#include <benchmark/benchmark.h>

#include <random>

#include "spincgeom/expr.hpp"
#include "spincgeom/spin_connection.hpp"
#include "spincgeom/spinor_restriction.hpp"
#include "spincgeom/surfaces_ekt.hpp"

using namespace spincgeom;

static void BM_CliffordMul(benchmark::State& state) {
    const CliffordRep& rep = CliffordRep::get(3);
    Eigen::Vector3d v(0.3, -1.2, 0.7);
    Spinor psi(2);
    psi << Complex(0.6, 0.8), Complex(-0.1, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(rep.mul(v, psi));
}
BENCHMARK(BM_CliffordMul);

static void BM_TwoFormAction(benchmark::State& state) {
    const CliffordRep& rep = CliffordRep::get(4);
    Eigen::Matrix4d O = Eigen::Matrix4d::Zero();
    O(0, 1) = 1.5;
    O(1, 0) = -1.5;
    Spinor psi = Spinor::Ones(4).normalized();
    for (auto _ : state) benchmark::DoNotOptimize(rep.two_form_action(O, psi));
}
BENCHMARK(BM_TwoFormAction);

static void BM_VerifyKilling(benchmark::State& state) {
    ModelSpec spec = ModelSpec::ekt(-1.0, 0.75);
    for (auto _ : state) benchmark::DoNotOptimize(verify_killing(spec));
}
BENCHMARK(BM_VerifyKilling);

static void BM_SurfacePoint(benchmark::State& state) {
    SurfaceField field(builtin_entry("berger-chart-disk"), 1e-5);
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(field.at(u, -0.2));
        u = (u < 0.3) ? u + 1e-4 : 0.1;  // defeat memoization of the chart point
    }
}
BENCHMARK(BM_SurfacePoint);

static void BM_GaugePoint(benchmark::State& state) {
    SurfaceField field(builtin_entry("berger-chart-disk"), 1e-5);
    Eigen::Matrix2cd align = Eigen::Matrix2cd::Identity();
    for (auto _ : state) benchmark::DoNotOptimize(gauge_at(field, 0.1, -0.2, align));
}
BENCHMARK(BM_GaugePoint);

static void BM_CompatibilityGrid(benchmark::State& state) {
    const CatalogEntry& e = builtin_entry("berger-chart-disk");
    SurfaceCheckOptions opts;
    opts.grid = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_compatibility_ekt(e, opts));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompatibilityGrid)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oNSquared);

static void BM_ParseEval(benchmark::State& state) {
    ExprPtr e = parse_expr("0.4*sin(u+v) + cos(u)*tanh(v) - u/(1+v^2)");
    for (auto _ : state) benchmark::DoNotOptimize(e->eval(0.3, -0.7));
}
BENCHMARK(BM_ParseEval);

static void BM_Parse(benchmark::State& state) {
    const std::string src = "0.4*sin(u+v) + cos(u)*tanh(v) - u/(1+v^2)";
    for (auto _ : state) benchmark::DoNotOptimize(parse_expr(src));
}
BENCHMARK(BM_Parse);

BENCHMARK_MAIN();
