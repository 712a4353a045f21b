#include <benchmark/benchmark.h>

#include "hkspread/length.hpp"
#include "hkspread/script.hpp"
#include "hkspread/spread.hpp"

using namespace hkspread;

namespace {

SessionScript load(const char* source) { return parse_script(source); }

}  // namespace

static void BM_BuchbergerBinomial(benchmark::State& state) {
    auto script = load("char 3\nvars x y z\nideal I = x^5, y^4, z^4, x^2*y - z^3, x*y*z + y^3\n");
    const auto& gens = script.find("I")->generators;
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, script.ring));
}
BENCHMARK(BM_BuchbergerBinomial);

// λ(R/m^[q]) on the A1 hypersurface; the argument is log_3 q.
static void BM_HypersurfaceColength(benchmark::State& state) {
    auto script = load("char 3\nvars x y z\nquotient x^2 + y*z\n");
    auto m = Ideal::maximal(script.ring);
    std::uint64_t q = 1;
    for (int k = 0; k < state.range(0); ++k) q *= 3;
    for (auto _ : state) benchmark::DoNotOptimize(length_quotient(bracket_power(m, q)));
}
BENCHMARK(BM_HypersurfaceColength)->DenseRange(1, 3);

static void BM_SpreadEstimate(benchmark::State& state) {
    auto script = load("char 2\nvars x y\nideal K = x^2, y^3\n");
    Ideal k(script.ring, script.find("K")->generators);
    auto m = Ideal::maximal(script.ring);
    for (auto _ : state) benchmark::DoNotOptimize(star_spread_estimate(k, m));
}
BENCHMARK(BM_SpreadEstimate);

BENCHMARK_MAIN();
