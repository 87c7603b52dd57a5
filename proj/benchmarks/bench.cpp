#include <benchmark/benchmark.h>

#include <memory>

#include "gns/criteria.hpp"

using namespace gns;

namespace {

Order zz() { return Order::make({-1, 1}); }
Order zi() { return Order::make({1, 0, 1}); }

DomainPtr box1() { return std::make_shared<BoxDomain>(QVec{0}); }

OPoly ip(const Order& o, std::initializer_list<long> cs) {
    std::vector<ZVec> v;
    for (long c : cs) v.push_back(o.from_int(c));
    return op_normalize(o, std::move(v));
}

void bm_digit_set_build(benchmark::State& state) {
    Order o = zi();
    BoxDomain f(QVec{mpq_class(-1, 2), mpq_class(-1, 2)});
    ZVec theta = {(long)state.range(0), 3};
    for (auto _ : state) {
        DigitSet d = DigitSet::build(o, f, theta);
        benchmark::DoNotOptimize(d.size());
    }
}
BENCHMARK(bm_digit_set_build)->Arg(3)->Arg(7)->Arg(12);

void bm_decide_quadratic(benchmark::State& state) {
    Order o = zz();
    DomainPtr f = box1();
    long c = state.range(0);
    GnsInstance g = GnsInstance::make(o, f, ip(o, {c, 1, 1}));
    for (auto _ : state) {
        DecisionReport r = g.decide();
        benchmark::DoNotOptimize(r.states_checked);
    }
}
BENCHMARK(bm_decide_quadratic)->Arg(4)->Arg(8)->Arg(16);

void bm_dominant_check(benchmark::State& state) {
    Order o = zi();
    auto f = std::make_shared<BoxDomain>(QVec{mpq_class(-1, 2), mpq_class(-1, 2)});
    GnsInstance g = GnsInstance::make(o, f, op_normalize(o, {ZVec{5, 1}, ZVec{3, 0}, o.one()}));
    for (auto _ : state) {
        DominantReport r = check_dominant(g);
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(bm_dominant_check);

void bm_expand(benchmark::State& state) {
    Order o = zz();
    GnsInstance g = GnsInstance::make(o, box1(), ip(o, {2, 1}));
    OPoly a = ip(o, {(long)state.range(0)});
    for (auto _ : state) {
        auto r = g.expand(a, 1000000);
        benchmark::DoNotOptimize(std::get<Expansion>(r).length());
    }
}
BENCHMARK(bm_expand)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void bm_is_expansive(benchmark::State& state) {
    IntPoly f = {7, 0, -2, 0, 0, 3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(is_expansive(f));
}
BENCHMARK(bm_is_expansive);

}  // namespace

BENCHMARK_MAIN();
