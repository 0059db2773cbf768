#include <benchmark/benchmark.h>

#include "fbeta/double_alg.hpp"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"
#include "fbeta/twist.hpp"

using namespace fbeta;

namespace {

void BM_ScalarArithmetic(benchmark::State& state) {
  auto inst = canon::multi_parameter_b2();
  auto a = parse_scalar("(v^3 - 2*v + v^-3)/(v - v^-1)", inst.params);
  auto b = inst.beta.at(0, 1) * inst.v_pow(-2);
  for (auto _ : state) {
    auto r = a * b + a.inverse();
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_PairWordsHeight4(benchmark::State& state) {
  auto inst = canon::two_parameter_b2();
  for (auto _ : state) {
    FormEngine fe(inst);  // fresh memo: measures the full recursion
    auto r = fe.pair_words({0, 1, 0, 1}, {1, 0, 1, 0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PairWordsHeight4)->Unit(benchmark::kMillisecond);

void BM_GramBlock22(benchmark::State& state) {
  auto inst = canon::super_b2(false);
  for (auto _ : state) {
    FormEngine fe(inst);
    benchmark::DoNotOptimize(fe.gram({2, 2}).rank());
  }
}
BENCHMARK(BM_GramBlock22)->Unit(benchmark::kMillisecond);

void BM_DoubleStraighten(benchmark::State& state) {
  auto inst = canon::multi_super_i_a2();
  auto pt = inst.params;
  auto f = iota_minus(2, FreeElem::word({0, 1}, FieldElem::one(pt)));
  auto e = iota_plus(2, FreeElem::word({1, 0}, FieldElem::one(pt)));
  for (auto _ : state) {
    DoubleEngine eng(inst);  // fresh straightening memo
    auto r = eng.mul(eng.from_halves(HalfElem::one(2, pt), f),
                     eng.from_halves(e, HalfElem::one(2, pt)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DoubleStraighten)->Unit(benchmark::kMillisecond);

void BM_TwistIsoHeight3(benchmark::State& state) {
  auto inst = canon::super_a2(false);
  for (auto _ : state) {
    auto rep = verify_twist_iso(inst, {3, ""});
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_TwistIsoHeight3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
