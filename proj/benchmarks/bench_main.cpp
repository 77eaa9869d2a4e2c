#include <benchmark/benchmark.h>

#include "contact_atlas/chow.hpp"
#include "contact_atlas/contact.hpp"
#include "contact_atlas/fan.hpp"
#include "contact_atlas/lattice.hpp"
#include "contact_atlas/nilpotent.hpp"
#include "contact_atlas/pipelines.hpp"

using namespace contact_atlas;

namespace {

// The character sublattice map of the n-fold sign-flip action.
IntegerMatrix flip_character_matrix(int n) {
    const int rank = 2 * n + 1;
    IntegerMatrix a(rank, rank);
    for (int r = 0; r < n; ++r) {
        a.at(r, r) = 1;
        a.at(r, r + n + 1) = 1;
        a.at(r + n + 1, r) = 1;
        a.at(r + n + 1, r + n + 1) = -1;
    }
    a.at(n, n) = 1;
    return a;
}

void bm_smith_normal_form(benchmark::State& state) {
    IntegerMatrix a = flip_character_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(bm_smith_normal_form)->Arg(1)->Arg(3)->Arg(6);

void bm_quotient_fan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LatticeMap iota = make_lattice_map(flip_character_matrix(n));
    Fan pspace = projective_space_fan(2 * n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(image_fan(pspace, iota));
}
BENCHMARK(bm_quotient_fan)->Arg(1)->Arg(2)->Arg(3);

void bm_singular_cones(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LatticeMap iota = make_lattice_map(flip_character_matrix(n));
    Fan quotient = image_fan(projective_space_fan(2 * n + 1), iota);
    for (auto _ : state) benchmark::DoNotOptimize(singular_cones(quotient));
}
BENCHMARK(bm_singular_cones)->Arg(1)->Arg(2)->Arg(3);

void bm_bundle_cube(benchmark::State& state) {
    RuledSurfaceParams p{2, 3};
    BundleClass d = bundle_add(bundle_xi(), bundle_pullback(surface_l(7)));
    for (auto _ : state) {
        BundleClass cube = bundle_mul(bundle_mul(d, d, p), d, p);
        benchmark::DoNotOptimize(degree3(cube));
    }
}
BENCHMARK(bm_bundle_cube);

void bm_group_closure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<RationalMatrix> gens;
    for (int i = 1; i <= n; ++i) {
        RationalMatrix g = RationalMatrix::identity(2 * n + 2);
        g.at(i, i) = -1;
        g.at(i + n + 1, i + n + 1) = -1;
        gens.push_back(std::move(g));
    }
    for (auto _ : state) benchmark::DoNotOptimize(make_action(n, gens));
}
BENCHMARK(bm_group_closure)->Arg(2)->Arg(3)->Arg(4);

void bm_kk_pullback(benchmark::State& state) {
    SamplePlan plan;
    plan.sample_count = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(kk_pullback_check(1, plan));
}
BENCHMARK(bm_kk_pullback)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
