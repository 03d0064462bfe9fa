#include <benchmark/benchmark.h>

#include <array>

#include "pmass/group_verify.hpp"
#include "pmass/mass.hpp"
#include "pmass/oracle.hpp"

using namespace pmass;

namespace {

void BM_TotalMassGrid(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int f : {1, 2}) {
            for (int e : {1, 2, 3}) benchmark::DoNotOptimize(total_mass(LocalField::mixed(p, f, e)));
            benchmark::DoNotOptimize(total_mass(LocalField::equal_char(p, f)));
        }
    }
}
BENCHMARK(BM_TotalMassGrid)->Arg(2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
    const LocalField field = LocalField::mixed(7, 2, static_cast<int>(state.range(0)));
    const CharClass chi = CharClass::generic(field, 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_contribution_closed(field, chi));
}
BENCHMARK(BM_ClosedForm)->Arg(3)->Arg(30)->Arg(300);

void BM_DirectSum(benchmark::State& state) {
    const LocalField field = LocalField::mixed(7, 2, static_cast<int>(state.range(0)));
    const CharClass chi = CharClass::generic(field, 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_contribution(field, chi));
}
BENCHMARK(BM_DirectSum)->Arg(3)->Arg(30)->Arg(300);

void BM_OracleEnumeration(benchmark::State& state) {
    const LocalField field = LocalField::mixed(3, static_cast<int>(state.range(0)), 2);
    const CharClass chi = CharClass::trivial_char(field);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_mass(field, chi, 6));
}
BENCHMARK(BM_OracleEnumeration)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SymmetricClosure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::array<perm::Perm, 2> gens{perm::Perm::cycle(n), perm::Perm::transposition(n, 0, 1)};
    for (auto _ : state) benchmark::DoNotOptimize(perm::Subgroup::generate(n, gens));
}
BENCHMARK(BM_SymmetricClosure)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_GaloisCriterion(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(perm::verify_galois_criterion(p));
}
BENCHMARK(BM_GaloisCriterion)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
