// Microbenchmarks for the hot paths: per-qubit ops, bitstring decoding,
// rank metrics and one SGD epoch. Run with --benchmark_filter=... to pick.
#include <benchmark/benchmark.h>

#include <vector>

#include "qibonn/data.hpp"
#include "qibonn/encoding.hpp"
#include "qibonn/metrics.hpp"
#include "qibonn/nn.hpp"
#include "qibonn/qsim.hpp"
#include "qibonn/rng.hpp"

using namespace qibonn;

static void BM_rotate(benchmark::State& state) {
  QubitState q = prepare_qubit(0.5);
  for (auto _ : state) {
    q = rotate(q, 0.01);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_rotate);

static void BM_measure(benchmark::State& state) {
  Rng rng(1);
  QubitState q = prepare_qubit(0.37);
  for (auto _ : state) benchmark::DoNotOptimize(measure(q, rng));
}
BENCHMARK(BM_measure);

static void BM_apply_noise(benchmark::State& state) {
  static const NoiseSpec specs[] = {
      NoiseSpec::parse("bit_flip", 0.01),
      NoiseSpec::parse("depolarizing", 0.01),
      NoiseSpec::parse("amplitude_damping", 0.01)};
  const NoiseSpec& spec = specs[state.range(0)];
  Rng rng(2);
  QubitState q = prepare_qubit(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_noise(q, spec, rng));
}
BENCHMARK(BM_apply_noise)->DenseRange(0, 2);

static void BM_decode(benchmark::State& state) {
  SpaceSpec space = default_space(20);
  Rng rng(3);
  std::vector<BitString> pool(64, BitString(space.total_bits()));
  for (auto& bits : pool)
    for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(pool[i], space));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(BM_decode);

static void BM_roc_auc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<double> scores(n);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    scores[i] = rng.uniform();
    labels[i] = i % 2;  // both classes always present
  }
  for (auto _ : state) benchmark::DoNotOptimize(roc_auc(scores, labels));
}
BENCHMARK(BM_roc_auc)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_train_epoch(benchmark::State& state) {
  Dataset ds = synthesize(200, 5, 5, 2, 5);
  TrainConfig cfg;
  cfg.learning_rate = 0.05;
  cfg.batch_size = 32;
  cfg.epochs = 1;
  cfg.seed = 6;
  for (auto _ : state) {
    state.PauseTiming();
    Rng rng(7);
    Architecture arch{ArchKind::Shallow, 10, 32, 1, 1, 0.1};
    MlpModel m = build(arch, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(train(m, ds, nullptr, cfg));
  }
}
BENCHMARK(BM_train_epoch);

BENCHMARK_MAIN();
