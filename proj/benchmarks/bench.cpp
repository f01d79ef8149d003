#include <benchmark/benchmark.h>

#include "henkin/evaluator.hpp"
#include "henkin/fixtures.hpp"
#include "henkin/oracle.hpp"
#include "henkin/reducer.hpp"
#include "henkin/text.hpp"

using namespace henkin;

namespace {

  void finiteness(benchmark::State& state) {
    auto          f = fixtures::ehrenfeucht_finiteness();
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
      auto r = eval::evaluate(f, m);
      nodes  = r.nodes;
      benchmark::DoNotOptimize(r.value);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
  }
  BENCHMARK(finiteness)->DenseRange(1, 6);

  void finiteness_naive(benchmark::State& state) {
    auto             f = fixtures::ehrenfeucht_finiteness();
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(eval::evaluate_naive(f, m).value);
    }
  }
  BENCHMARK(finiteness_naive)->DenseRange(1, 3);

  void ceitin_h12(benchmark::State& state) {
    auto             f = fixtures::ceitin_h12();
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(eval::evaluate(f, m).value);
    }
  }
  BENCHMARK(ceitin_h12)->DenseRange(1, 4);

  void ceitin_e10(benchmark::State& state) {
    auto             f = fixtures::ceitin_e10();
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(eval::evaluate(f, m).value);
    }
  }
  BENCHMARK(ceitin_e10)->DenseRange(1, 4);

  // An entailed query: every size is refuted exhaustively.
  void compiled_entailed(benchmark::State& state) {
    auto f = reduce::compile(fixtures::ceitin_presentation(),
                             {Word("cca"), Word("ccae")});
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(eval::evaluate(f, m).value);
    }
  }
  BENCHMARK(compiled_entailed)->DenseRange(1, 3);

  void compiled_separable(benchmark::State& state) {
    Presentation E({{Word("aa"), Word("a")}, {Word("bb"), Word("b")}});
    auto f = reduce::compile(E, {Word("ab"), Word("ba")});
    eval::DomainSize m(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(eval::evaluate(f, m).value);
    }
  }
  BENCHMARK(compiled_separable)->DenseRange(1, 4);

  void oracle_search(benchmark::State& state) {
    auto C = fixtures::ceitin_presentation();
    auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          oracle::find_witness(C, {Word("cca"), Word("ccae")}, m).has_value());
    }
  }
  BENCHMARK(oracle_search)->DenseRange(1, 3);

  void print_parse(benchmark::State& state) {
    auto f    = fixtures::ceitin_e10();
    auto text = text::print_formula(f);
    for (auto _ : state) {
      benchmark::DoNotOptimize(text::parse_formula(text));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
  }
  BENCHMARK(print_parse);

}  // namespace

BENCHMARK_MAIN();
