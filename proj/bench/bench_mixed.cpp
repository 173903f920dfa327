#include "milnum/mixed.hpp"
#include "milnum/parser.hpp"

#include <benchmark/benchmark.h>

using namespace milnum;

namespace {

const char* const germs[] = {
    "x^7 + y^6 + z^5 + x*y*z + x^2*y^3 + y^2*z^3",
    "x^5 + y^4 + z^4 + w^3 + x*y*z*w; x^2*y + y^3 + z^4 + w^5 + x^6",
    "x^4 + y^5 + z^3 + w^4 + x*y^2*z; x^3 + y^3 + z^4 + w^2*x + w^5; x^6 + y^7 + y^2*z + z^5 + w^4",
};

Execution mode(const benchmark::State& state)
{
    return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void mixed_table(benchmark::State& state)
{
    const auto polyhedra = newton_polyhedra(parse_map(germs[state.range(0)]));
    const MixedOptions options{.execution = mode(state)};
    for (auto _ : state) benchmark::DoNotOptimize(mixed_covolumes(polyhedra, options));
}

void newton(benchmark::State& state)
{
    const auto germ = parse_map(germs[state.range(0)]);
    const auto polyhedra = newton_polyhedra(germ);
    const MixedOptions options{.execution = mode(state)};
    for (auto _ : state) benchmark::DoNotOptimize(newton_number(polyhedra, germ.dimension(), options));
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(mixed_table)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(newton)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
