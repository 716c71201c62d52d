#include <benchmark/benchmark.h>

#include "prime_scope/closure/closure.hpp"
#include "prime_scope/dense/dense.hpp"
#include "prime_scope/formula/emit.hpp"
#include "prime_scope/squares/squares.hpp"

using namespace prime_scope;

static void BM_PrimesAbove(benchmark::State& state)
{
    FieldPtr K = nf_create("X^4 - 10*X^2 + 1");
    for (auto _ : state)
        benchmark::DoNotOptimize(primes_above(K, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_PrimesAbove)->Arg(7)->Arg(23)->Arg(47);

static void BM_Valuation(benchmark::State& state)
{
    FieldPtr K = nf_create("X^3 - 2");
    PValuation P = primes_above(K, 5)[0];
    FieldElement x = FieldElement::parse(K, "[1/125, 7, -3/2]").pow(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(valuation(P, x));
}
BENCHMARK(BM_Valuation)->Arg(1)->Arg(8)->Arg(32);

static void BM_HasRootPadic(benchmark::State& state)
{
    FieldPtr Q = rationals();
    Prime P = primes_above(Q, 7)[0];
    KPoly g = KPoly::parse(Q, "X^3 - 3*X + 5");
    for (auto _ : state)
        benchmark::DoNotOptimize(has_root_in_closure(P, g));
}
BENCHMARK(BM_HasRootPadic);

static void BM_PadicRoot(benchmark::State& state)
{
    FieldPtr Q = rationals();
    PValuation P = primes_above(Q, 7)[0];
    KPoly g = KPoly::parse(Q, "X^2 - 2");
    for (auto _ : state)
        benchmark::DoNotOptimize(padic_root(P, g, state.range(0)));
}
BENCHMARK(BM_PadicRoot)->Arg(10)->Arg(100)->Arg(500);

static void BM_DWitnessOrdering(benchmark::State& state)
{
    FieldPtr K = nf_create("X^2 - 2");
    Ordering O = real_embeddings(K)[1];
    KPoly g = KPoly::parse(K, "X^3 - [0, 1]");
    FieldElement a(K, Rational(1, 1000000));
    for (auto _ : state)
        benchmark::DoNotOptimize(d_witness(O, g, a));
}
BENCHMARK(BM_DWitnessOrdering);

static void BM_UDWitness(benchmark::State& state)
{
    FieldPtr K = nf_create("X^2 + 1");
    std::vector<Prime> S;
    for (const PValuation& P : primes_above(K, 13))
        S.push_back(P);
    KPoly g = KPoly::parse(K, "X^2 - 3");
    FieldElement a(K, Rational(169));
    for (auto _ : state)
        benchmark::DoNotOptimize(ud_witness(K, S, g, a));
}
BENCHMARK(BM_UDWitness);

static void BM_ProveNu(benchmark::State& state)
{
    FieldPtr Q = rationals();
    for (auto _ : state)
        benchmark::DoNotOptimize(prove_nu(Q, 5, {1, 1}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ProveNu)->Arg(2)->Arg(4);

static void BM_FourSquares(benchmark::State& state)
{
    Integer n = pow_int(Integer(10), static_cast<unsigned long>(state.range(0))) + 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(four_squares_integer(n, 1));
}
BENCHMARK(BM_FourSquares)->Arg(6)->Arg(11)->Arg(30);

static void BM_ShortRepresentation(benchmark::State& state)
{
    FieldPtr Q = rationals();
    PValuation P = primes_above(Q, 3)[0];
    KPoly g = KPoly::parse(Q, "X^2 + 1");
    FieldElement eps(Q, Rational(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(no_short_representation_check(P, g, eps, 2, state.range(0)));
}
BENCHMARK(BM_ShortRepresentation)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
