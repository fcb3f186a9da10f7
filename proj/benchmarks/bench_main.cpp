#include "vblocks/catalog.hpp"
#include "vblocks/factorization.hpp"
#include "vblocks/fock.hpp"
#include "vblocks/genus_zero.hpp"
#include "vblocks/linalg.hpp"
#include "vblocks/sewing.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace vblocks;

static void BM_RankRecursion(benchmark::State& state) {
    const long k = state.range(0);
    const long g = state.range(1);
    const CatalogEntry cat = lattice_catalog(k);
    for (auto _ : state) {
        RankEngine engine(cat.ring); // fresh engine: no memo reuse across iterations
        benchmark::DoNotOptimize(engine.rank(g, {}));
    }
}
BENCHMARK(BM_RankRecursion)->Args({1, 4})->Args({3, 4})->Args({3, 6});

static void BM_GraphRank(benchmark::State& state) {
    const long g = state.range(0);
    const CatalogEntry cat = lattice_catalog(2);
    const RankEngine engine(cat.ring);
    const StableGraph graph = trivalent_graph(g, cat.ring.vacuum());
    for (auto _ : state) benchmark::DoNotOptimize(engine.rank_via_graph(graph));
}
BENCHMARK(BM_GraphRank)->Arg(3)->Arg(4);

static void BM_BareissRank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(5);
    std::vector<QVector> m(n, QVector(n));
    for (auto& row : m)
        for (auto& x : row)
            x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank_of_span(m));
}
BENCHMARK(BM_BareissRank)->Arg(10)->Arg(20)->Arg(30);

static void BM_LatticeMode(benchmark::State& state) {
    const FockModel model = FockModel::lattice(1);
    const FockState emu{Rational(1), {2, 1}};
    const FockState u{Rational(1, 2), {3, 1, 1}};
    for (auto _ : state)
        for (long i = -4; i <= 4; ++i) benchmark::DoNotOptimize(model.vertex_mode(emu, i, u));
}
BENCHMARK(BM_LatticeMode);

static void BM_SewingIdentity(benchmark::State& state) {
    const FockVOA latt = FockVOA::lattice(1, 8);
    const FockModule m1 = FockModule::lattice(latt, 1, 6);
    const auto h = *latt.id_of(FockState{Rational(0), {1}});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sewing_identity_check(LinComb{{h, Rational(1)}}, 1, 0, m1.module(), 6));
}
BENCHMARK(BM_SewingIdentity);

static void BM_CoinvariantOracle(benchmark::State& state) {
    const long cutoff = state.range(0);
    const FockVOA voa = FockVOA::lattice(1, std::max(cutoff, 2L));
    const FockModule m0 = FockModule::lattice(voa, 0, cutoff);
    const FockModule m1 = FockModule::lattice(voa, 1, cutoff);
    const std::vector<const FockModule*> mods{&m0, &m1, &m1};
    const std::vector<P1Point> pts{P1Point::at(Rational(0)), P1Point::at(Rational(1)),
                                   P1Point::at(Rational(-1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(truncated_coinvariant_dim(voa, mods, pts, cutoff));
}
BENCHMARK(BM_CoinvariantOracle)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
