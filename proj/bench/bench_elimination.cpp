// Serial vs OpenMP sparse elimination vs the dense reference, on consequence
// matrices of the right-Novikov ideal over a prime field.

#include <benchmark/benchmark.h>

#include <map>

#include "quadop/exactla.hpp"
#include "quadop/idealgen.hpp"
#include "quadop/presets.hpp"
#include "quadop/reference.hpp"

using namespace quadop;

namespace {

const exactla::ModMat& consequence_matrix(unsigned arity) {
  static std::map<unsigned, exactla::ModMat> cache;
  auto it = cache.find(arity);
  if (it == cache.end()) {
    const auto r = presets::relation_space(presets::preset("novikov-right"));
    const auto rows = idealgen::consequences(r, arity, idealgen::Method::direct);
    const exactla::PrimeField f(exactla::kPrimeA);
    exactla::ModMat m{rows.ncols, {}};
    for (const auto& v : rows.rows) m.rows.push_back(exactla::to_mod_p(v, f));
    it = cache.emplace(arity, std::move(m)).first;
  }
  return it->second;
}

void run_sparse(benchmark::State& state, exactla::Exec exec) {
  const auto& m = consequence_matrix(static_cast<unsigned>(state.range(0)));
  const exactla::PrimeField f(exactla::kPrimeA);
  for (auto _ : state) {
    exactla::Echelon<exactla::PrimeField> ech(f, m.ncols, exec);
    ech.add_rows(m.rows);
    benchmark::DoNotOptimize(ech.rank());
  }
  state.counters["rows"] = static_cast<double>(m.rows.size());
  state.counters["cols"] = static_cast<double>(m.ncols);
}

void BM_SparseSerial(benchmark::State& state) { run_sparse(state, exactla::Exec::serial); }
void BM_SparseParallel(benchmark::State& state) { run_sparse(state, exactla::Exec::parallel); }

void BM_DenseReference(benchmark::State& state) {
  const auto& m = consequence_matrix(static_cast<unsigned>(state.range(0)));
  const exactla::PrimeField f(exactla::kPrimeA);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exactla::reference::rref_dense(f, m).rank());
  }
}

void BM_Dims(benchmark::State& state) {
  const auto r = presets::relation_space(presets::preset("novikov-right"));
  idealgen::Options o;
  o.exec = state.range(0) ? exactla::Exec::parallel : exactla::Exec::serial;
  o.field = idealgen::FieldStrategy::modp(exactla::kPrimeA);
  for (auto _ : state) benchmark::DoNotOptimize(idealgen::dims(r, 5, o));
}

}  // namespace

BENCHMARK(BM_SparseSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseReference)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dims)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
