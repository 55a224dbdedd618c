#include <benchmark/benchmark.h>

#include "xring/crossed_product.hpp"
#include "xring/cyclotomic.hpp"
#include "xring/factor_system.hpp"
#include "xring/group_ring.hpp"
#include "xring/oracles.hpp"

#include <random>

using namespace xring;

namespace {

CycScalar random_gaussian(std::mt19937_64& rng) {
    auto num = [&]() { return Int(static_cast<long>(rng() % 7) - 3); };
    return CycScalar::gaussian(make_rational(num(), Int(1 + rng() % 2)),
                               make_rational(num(), Int(1 + rng() % 2)));
}

GroupRingElement random_element(const Group& g, const std::vector<GroupElement>& window,
                                size_t terms, std::mt19937_64& rng) {
    GroupRingElement::TermMap map;
    for (size_t t = 0; t < terms; ++t) {
        map[window[rng() % window.size()]] = random_gaussian(rng);
    }
    return GroupRingElement(g, 4, std::move(map));
}

void BM_CyclotomicMul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    CycScalar a = random_gaussian(rng);
    CycScalar b = random_gaussian(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CyclotomicMul);

void BM_Convolution(benchmark::State& state) {
    std::mt19937_64 rng(8);
    Group h3 = heisenberg_semidirect();
    auto window = ball(h3, 2);
    GroupRingElement f = random_element(h3, window, state.range(0), rng);
    GroupRingElement g = random_element(h3, window, state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_Convolution)->Arg(4)->Arg(16);

void BM_CrossedProductMul(benchmark::State& state) {
    std::mt19937_64 rng(9);
    CrossedSystem cs = lift_to_crossed_system(FactorSystem::heisenberg_semidirect());
    auto n_window = ball(cs.coefficient_group(), 1);
    auto h_window = ball(cs.quotient_group(), 1);
    CrossedProductElement::TermMap terms;
    for (const auto& h : h_window) {
        terms.emplace(h, random_element(cs.coefficient_group(), n_window, 3, rng));
    }
    CrossedProductElement x(cs, terms);
    CrossedProductElement y(cs, std::move(terms));
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_CrossedProductMul);

void BM_ValidateFactorSystem(benchmark::State& state) {
    FactorSystem fs = FactorSystem::heisenberg_semidirect();
    ValidationWindow window = ValidationWindow::from_radius(fs, state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_factor_system(fs, window));
    }
}
BENCHMARK(BM_ValidateFactorSystem)->Arg(2)->Arg(3);

void BM_ZeroDivisorSearchLaurent(benchmark::State& state) {
    Group z = Group::free_abelian(1);
    SearchSpace space = SearchSpace::for_group(
        z, ball(z, 2),
        {CycScalar::from_int(-1), CycScalar::zero(4), CycScalar::from_int(1)}, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zero_divisor_search(space));
    }
}
BENCHMARK(BM_ZeroDivisorSearchLaurent);

void BM_MatrixOracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_oracle_check(1000, kDefaultSeed));
    }
}
BENCHMARK(BM_MatrixOracle);

}  // namespace

BENCHMARK_MAIN();
