#include <benchmark/benchmark.h>

#include <string>

#include "alphafix/bottom_up.hpp"
#include "alphafix/engine.hpp"
#include "alphafix/ground.hpp"
#include "alphafix/syntax.hpp"

namespace {

using namespace alphafix;

// Win/move game on a path of n positions with a back edge every third step,
// so the ground program has both stratified and looping parts.
std::string game_text(int n) {
  std::string text = "win(X) <- exists Y: move(X,Y) & ~win(Y).\n";
  for (int i = 0; i + 1 < n; ++i) {
    text += "move(n" + std::to_string(i) + ",n" + std::to_string(i + 1) + ").\n";
    if (i % 3 == 2) text += "move(n" + std::to_string(i) + ",n" + std::to_string(i - 1) + ").\n";
  }
  return text;
}

// Propositional chain mixing every connective.
std::string chain_text(int n) {
  std::string text = "p0 <- #t.\n";
  for (int i = 1; i < n; ++i) {
    const std::string prev = "p" + std::to_string(i - 1);
    const std::string self = "p" + std::to_string(i);
    switch (i % 4) {
      case 0: text += self + " <- " + prev + " & ~" + self + ".\n"; break;
      case 1: text += self + " <- " + prev + " | ~" + prev + ".\n"; break;
      case 2: text += self + " <- " + prev + " * ~p0.\n"; break;
      default: text += self + " <- " + prev + " + #u.\n"; break;
    }
  }
  return text;
}

void BM_ParseAndGround(benchmark::State& state) {
  const std::string text = game_text(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ground(parse_program(text)));
}
BENCHMARK(BM_ParseAndGround)->RangeMultiplier(2)->Range(8, 128);

void BM_FixUPessimistic(benchmark::State& state) {
  const GroundProgram gp = ground(parse_program(game_text(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(fix_u(gp, TruthValue::False));
  state.counters["atoms"] = static_cast<double>(gp.base().size());
}
BENCHMARK(BM_FixUPessimistic)->RangeMultiplier(2)->Range(8, 128);

void BM_SolveAllAlphas(benchmark::State& state) {
  const GroundProgram gp = ground(parse_program(chain_text(static_cast<int>(state.range(0)))));
  for (auto _ : state)
    for (TruthValue alpha : kAllTruthValues) benchmark::DoNotOptimize(solve(gp, alpha));
}
BENCHMARK(BM_SolveAllAlphas)->RangeMultiplier(4)->Range(4, 256);

void BM_BottomUp(benchmark::State& state) {
  const GroundProgram gp = ground(parse_program(game_text(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(bottom_up_alpha_fixed(gp, TruthValue::False));
}
BENCHMARK(BM_BottomUp)->RangeMultiplier(2)->Range(8, 128);

void BM_CompareSemantics(benchmark::State& state) {
  const GroundProgram gp = ground(parse_program(chain_text(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(compare_semantics(gp));
}
BENCHMARK(BM_CompareSemantics)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
