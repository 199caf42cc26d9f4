#include <benchmark/benchmark.h>

#include "qpc/collapse.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/geometry.hpp"
#include "qpc/markov.hpp"
#include "qpc/mutation.hpp"

namespace {

using namespace qpc;

FanoPolygon p2() {
    return FanoPolygon::validate(Polygon::create(
        {Point2{Rat(1), Rat(0)}, Point2{Rat(0), Rat(1)}, Point2{Rat(-1), Rat(-1)}}));
}

FanoPolygon big_markov() { return markov_triangle(MarkovTriple::make(Int(2), Int(5), Int(29))); }

void BM_CountPoints(benchmark::State& state) {
    const Polygon d = dual(big_markov());
    const PointCounter counter(d);
    const Int k(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(counter.count(k));
    }
}
BENCHMARK(BM_CountPoints)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_QuasiPolynomialFit(benchmark::State& state) {
    // denominator 10: a 40-sample exact fit
    const Polygon d = dual(markov_triangle(MarkovTriple::make(Int(1), Int(2), Int(5))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quasi_polynomial(d));
    }
}
BENCHMARK(BM_QuasiPolynomialFit);

void BM_NormalForm(benchmark::State& state) {
    const FanoPolygon q = big_markov();
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(q));
    }
}
BENCHMARK(BM_NormalForm);

void BM_MutationGraph(benchmark::State& state) {
    const FanoPolygon start = p2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mutation_graph(start, state.range(0)));
    }
}
BENCHMARK(BM_MutationGraph)->Arg(2)->Arg(3);

void BM_Predict(benchmark::State& state) {
    const FanoPolygon q = FanoPolygon::validate(Polygon::create(
        {Point2{Rat(1), Rat(0)}, Point2{Rat(0), Rat(1)}, Point2{Rat(-1), Rat(-4)}}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(predict(q));
    }
}
BENCHMARK(BM_Predict);

}  // namespace

BENCHMARK_MAIN();
