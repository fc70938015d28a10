#include <benchmark/benchmark.h>

#include "htrig/htrig.hpp"

namespace {

using htrig::Complex;
using htrig::Evaluator;
using htrig::HParam;

const HParam& param() {
    static const HParam p(0.25);
    return p;
}

const htrig::KnotVector& knots() {
    static const htrig::KnotVector kv({0.0, 0.5, 1.2, 1.8, 2.6, 3.1}, param());
    return kv;
}

const htrig::NodeSet& nodes() {
    static const htrig::NodeSet ns({0.0, 0.6, 1.3, 1.9, 2.7, 3.3}, param());
    return ns;
}

Evaluator test_function() {
    const HParam& p = param();
    return [p](double x) {
        return Complex{0.6 * htrig::cos_h(p, 1.7 * x) - 0.3 * htrig::sin_h(p, 0.8 * x) + 0.5, 0.0};
    };
}

void BM_eval_T(benchmark::State& state, htrig::EvalMethod method) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(htrig::eval_T(knots(), {0, m}, 1.0, method));
    }
}

void BM_eval_E_recurrence(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(htrig::eval_E(knots(), {0, m}, 1.0));
    }
}

void BM_dd_exp(benchmark::State& state, htrig::DDMethod method) {
    const Evaluator f = test_function();
    for (auto _ : state) {
        benchmark::DoNotOptimize(htrig::dd_exp(nodes(), f, method));
    }
}

void BM_dd_trig(benchmark::State& state, htrig::TrigDDMethod method) {
    const Evaluator f = test_function();
    for (auto _ : state) {
        benchmark::DoNotOptimize(htrig::dd_trig(nodes(), f, method));
    }
}

void BM_op_chain(benchmark::State& state, bool stencil) {
    const int m = static_cast<int>(state.range(0));
    const htrig::OpChain c{htrig::Flavor::trig, m};
    const Evaluator g = stencil ? htrig::apply_op_stencil(c, param(), test_function())
                                : htrig::apply_op(c, param(), test_function());
    for (auto _ : state) {
        benchmark::DoNotOptimize(g(0.4));
    }
}

void BM_marsden_residual(benchmark::State& state) {
    const HParam& p = param();
    const htrig::KnotVector kv({0.0, 0.4, 0.9, 1.3, 1.9, 2.4, 2.8, 3.3}, p);
    const htrig::MarsdenWindow w(kv, 3, 2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(htrig::marsden_residual(w, 1.7, 0.8, htrig::Flavor::trig));
    }
}

BENCHMARK_CAPTURE(BM_eval_T, recurrence, htrig::EvalMethod::recurrence)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_eval_T, definition, htrig::EvalMethod::definition)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_eval_T, from_e, htrig::EvalMethod::from_e)->Arg(3)->Arg(5);
BENCHMARK(BM_eval_E_recurrence)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_dd_exp, recursive, htrig::DDMethod::recursive);
BENCHMARK_CAPTURE(BM_dd_exp, lagrange, htrig::DDMethod::lagrange);
BENCHMARK_CAPTURE(BM_dd_trig, lagrange, htrig::TrigDDMethod::lagrange);
BENCHMARK_CAPTURE(BM_dd_trig, via_exp, htrig::TrigDDMethod::via_exp);
BENCHMARK_CAPTURE(BM_dd_trig, threeterm, htrig::TrigDDMethod::threeterm);
BENCHMARK_CAPTURE(BM_op_chain, factored, false)->Arg(3)->Arg(6);
BENCHMARK_CAPTURE(BM_op_chain, stencil, true)->Arg(3)->Arg(6);
BENCHMARK(BM_marsden_residual);

}  // namespace

BENCHMARK_MAIN();
