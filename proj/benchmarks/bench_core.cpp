#include <benchmark/benchmark.h>

#include "knights/board.hpp"
#include "knights/construct.hpp"
#include "knights/lift.hpp"
#include "knights/search.hpp"
#include "knights/serialize.hpp"
#include "knights/theorems.hpp"

using namespace knights;

namespace {

void BM_Neighbors(benchmark::State &state) {
    BoardSpec spec{Topology::Torus, 8, 8};
    std::vector<Square> squares = all_squares(spec);
    for (auto _ : state) {
        std::size_t total = 0;
        for (Square sq : squares) total += neighbors(spec, sq).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_Neighbors);

void BM_EdgeCount(benchmark::State &state) {
    BoardSpec spec{Topology::Torus, 8, 8};
    for (auto _ : state) benchmark::DoNotOptimize(edge_count(spec));
}
BENCHMARK(BM_EdgeCount);

void BM_FindTourRect8x8(benchmark::State &state) {
    SearchProblem problem;
    problem.spec = {Topology::Regular, 8, 8};
    for (auto _ : state) {
        SearchOutcome outcome = find_tour(problem);
        benchmark::DoNotOptimize(outcome.status);
    }
}
BENCHMARK(BM_FindTourRect8x8);

void BM_FindGenerator5x5(benchmark::State &state) {
    SearchProblem problem;
    problem.spec = {Topology::Cylinder, 5, 5};
    problem.target = ClassTarget::generator();
    for (auto _ : state) {
        SearchOutcome outcome = find_tour(problem);
        benchmark::DoNotOptimize(outcome.status);
    }
}
BENCHMARK(BM_FindGenerator5x5);

void BM_RefuteCylinder4x4(benchmark::State &state) {
    SearchProblem problem;
    problem.spec = {Topology::Cylinder, 4, 4};
    for (auto _ : state) {
        SearchOutcome outcome = prove_nonexistence(problem);
        benchmark::DoNotOptimize(outcome.status);
    }
}
BENCHMARK(BM_RefuteCylinder4x4);

void BM_ClassifyTour(benchmark::State &state) {
    Tour tour = construct({Topology::Cylinder, 10, 6}, ClassTarget::identity());
    for (auto _ : state) {
        HomotopyClass c = classify(tour);
        benchmark::DoNotOptimize(c.k);
    }
}
BENCHMARK(BM_ClassifyTour);

void BM_ConstructChainColdCache(benchmark::State &state) {
    for (auto _ : state) {
        clear_fixture_cache();
        Fixture fixture = get_fixture(Family::GenCyl_3xN, 3, 24);
        benchmark::DoNotOptimize(fixture.checksum.data());
    }
}
BENCHMARK(BM_ConstructChainColdCache);

void BM_SerializeRoundTrip(benchmark::State &state) {
    Tour tour = construct({Topology::Torus, 4, 6}, ClassTarget::longitude());
    for (auto _ : state) {
        Tour back = deserialize_tour(serialize_tour(tour));
        benchmark::DoNotOptimize(back.jumps.size());
    }
}
BENCHMARK(BM_SerializeRoundTrip);

void BM_VerifySweepCylNull(benchmark::State &state) {
    for (auto _ : state) {
        auto rows = verify_range(ClaimSource::CylNull, {1, 2, 3, 4}, {1, 2, 3, 4},
                                 VerifyMethod::ConstructThenSearch);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_VerifySweepCylNull);

} // namespace

BENCHMARK_MAIN();
