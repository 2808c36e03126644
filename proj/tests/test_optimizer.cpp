#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qibonn/encoding.hpp"
#include "qibonn/errors.hpp"
#include "qibonn/optimizer.hpp"
#include "qibonn/rng.hpp"

using namespace qibonn;

namespace {

// Smallest legal space: 8 feature flags plus every architecture knob at one
// bit each. The toy objectives below only look at the mask, so the arch
// bits are dead weight — exactly what we want for optimizer-only tests.
SpaceSpec toy_space() {
  std::vector<DimensionSpec> dims;
  for (int i = 0; i < 8; ++i)
    dims.push_back(DimensionSpec::binary_flag("feat_" + std::to_string(i)));
  dims.push_back(DimensionSpec::continuous("dropout", 0.0, 0.5, 1));
  dims.push_back(DimensionSpec::integer_range("hidden_width", 8, 9, 1));
  dims.push_back(DimensionSpec::log_continuous("learning_rate", 1e-3, 1e-1, 1));
  dims.push_back(DimensionSpec::categorical("batch_size", {32, 64}, 1));
  dims.push_back(DimensionSpec::log_continuous("weight_decay", 1e-5, 1e-3, 1));
  dims.push_back(DimensionSpec::integer_range("n_hidden_layers", 1, 2, 1));
  return SpaceSpec::make(8, std::move(dims));
}

ObjectiveResult toy_result(double j) {
  ObjectiveResult r;
  r.j = j;
  r.roc_auc = -j;
  r.pr_auc = -j;
  r.val_loss = 0.0;
  return r;
}

// Hamming distance from the mask to a fixed target pattern.
Objective hamming_objective(const std::vector<int>& target) {
  return [target](const HyperparamVector& h) {
    double j = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
      j += h.feature_mask[i] != target[i];
    return toy_result(j);
  };
}

Objective popcount_objective() {
  return [](const HyperparamVector& h) {
    double j = 0.0;
    for (int b : h.feature_mask) j += b;
    return toy_result(j);
  };
}

}  // namespace

TEST_CASE("config validation rejects out-of-range knobs") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.pop_size = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_iter = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.alpha_step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.p_mut = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.theta_clip = 2.0;  // above pi/2
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.n_threads = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

// ------------------------------------------------------------ displacement

TEST_CASE("agreeing bests give zero displacement and burn no randomness") {
  Rng rng(99);
  CHECK(qpso_displacement(0, 0, 0.7, rng) == 0.0);
  CHECK(qpso_displacement(1, 1, 0.7, rng) == 0.0);
  // The stream must be untouched: next draw matches a fresh twin.
  Rng twin(99);
  CHECK(rng.uniform() == twin.uniform());
}

TEST_CASE("displacement draws follow the exponential law") {
  const double alpha = 0.7;
  const int n = 100000;
  Rng rng(7);
  std::vector<double> xs(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    xs[i] = qpso_displacement(0, 1, alpha, rng);
    CHECK(xs[i] >= 0.0);
    sum += xs[i];
  }
  double mean = sum / n;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= n - 1;

  // Exponential with rate 1/alpha: mean alpha, sd alpha, Var(s^2) ~ 8a^4/n.
  double se_mean = alpha / std::sqrt(static_cast<double>(n));
  double se_var = alpha * alpha * std::sqrt(8.0 / n);
  CHECK(std::abs(mean - alpha) < 3.0 * se_mean);
  CHECK(std::abs(var - alpha * alpha) < 3.0 * se_var);

  // Kolmogorov-Smirnov against the exponential CDF, 1% critical value.
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    double f = 1.0 - std::exp(-xs[i] / alpha);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

// ---------------------------------------------------------- rotation angle

TEST_CASE("rotation is silent at the attractor when the bests agree") {
  OptimizerConfig cfg;
  Rng rng(11);
  QubitState one{0.0, 1.0};
  CHECK(rotation_angle(one, 1.0, 1, 1, cfg, rng) == 0.0);
  QubitState zero{1.0, 0.0};
  CHECK(rotation_angle(zero, 0.0, 0, 0, cfg, rng) == 0.0);
}

TEST_CASE("rotation magnitude never exceeds theta_clip") {
  OptimizerConfig cfg;
  Rng rng(12);
  for (int i = 0; i < 100000; ++i) {
    double t = (rng.uniform() * 2.0 - 1.0) * 3.14159265358979;
    QubitState q{std::cos(t), std::sin(t)};
    double m = rng.uniform();
    int g = rng.uniform() < 0.5 ? 0 : 1;
    int pb = rng.uniform() < 0.5 ? 0 : 1;
    double dt = rotation_angle(q, m, g, pb, cfg, rng);
    CHECK(std::abs(dt) <= cfg.theta_clip + 1e-15);
  }
}

TEST_CASE("pull toward g_best moves P(1) the right way") {
  // Monotone movement is only promised while the step cannot overshoot the
  // target pole. Sampling t in (-3pi/8, 3pi/8) keeps every state at least
  // theta_clip away from the P(1)=1 poles at +-pi/2, so the g=1 direction
  // is unconditional; the P(1)=0 pole at t=0 lies inside the range, so the
  // g=0 direction is asserted only when |dtheta| <= |t|.
  OptimizerConfig cfg;
  Rng rng(13);
  int moved_up = 0, checked_down = 0;
  for (int i = 0; i < 20000; ++i) {
    double t = (rng.uniform() * 2.0 - 1.0) * (3.0 * 3.14159265358979 / 8.0);
    QubitState q{std::cos(t), std::sin(t)};
    double m = rng.uniform();
    int pb = rng.uniform() < 0.5 ? 0 : 1;

    double up = rotation_angle(q, m, 1, pb, cfg, rng);
    QubitState q_up = rotate(q, up);
    CHECK(q_up.p1() >= q.p1() - 1e-12);
    moved_up += q_up.p1() > q.p1() + 1e-12;

    double down = rotation_angle(q, m, 0, pb, cfg, rng);
    if (std::abs(down) <= std::abs(t)) {
      QubitState q_down = rotate(q, down);
      CHECK(q_down.p1() <= q.p1() + 1e-12);
      ++checked_down;
    }
  }
  CHECK(moved_up > 10000);     // the pull is usually nonzero
  CHECK(checked_down > 10000);  // and the guard rarely bites
}

TEST_CASE("rotation angles are seed-deterministic") {
  OptimizerConfig cfg;
  QubitState q{0.6, 0.8};
  Rng r1(14), r2(14);
  for (int i = 0; i < 100; ++i)
    CHECK(rotation_angle(q, 0.3, 1, 0, cfg, r1) ==
          rotation_angle(q, 0.3, 1, 0, cfg, r2));
}

// --------------------------------------------------------------- attractor

TEST_CASE("attractor is the per-dimension mean of personal bests") {
  SwarmState s;
  s.particles.resize(3);
  s.particles[0].p_best_bits = {1, 1};
  s.particles[1].p_best_bits = {1, 0};
  s.particles[2].p_best_bits = {0, 0};
  AttractorPoint m = compute_attractor(s);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == 2.0 / 3.0);
  CHECK(m[1] == 1.0 / 3.0);

  // Identical bests collapse the attractor onto them exactly.
  s.particles[1].p_best_bits = {1, 1};
  s.particles[2].p_best_bits = {1, 1};
  m = compute_attractor(s);
  CHECK(m[0] == 1.0);
  CHECK(m[1] == 1.0);
}

// -------------------------------------------------------------- init_swarm

TEST_CASE("init prepares uniform superpositions and seeds the bests") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 6;
  cfg.seed = 21;
  std::vector<EvalRecord> trace;
  SwarmState s = init_swarm(space, popcount_objective(), cfg, &trace);

  REQUIRE(s.particles.size() == 6);
  for (const Particle& p : s.particles) {
    REQUIRE(p.reg.size() == space.total_bits());
    for (const QubitState& q : p.reg) {
      CHECK(q.p1() == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(q.norm2() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(p.p_best_fitness < std::numeric_limits<double>::infinity());
    CHECK(p.p_best_bits == p.last_bits);
  }

  REQUIRE(trace.size() == 6);
  double min_j = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 6; ++i) {
    CHECK(trace[i].iteration == 0);
    CHECK(trace[i].particle == i);
    CHECK(trace[i].result.j == s.particles[i].p_best_fitness);
    min_j = std::min(min_j, trace[i].result.j);
  }
  CHECK(s.g_best_fitness == min_j);
  CHECK(s.iteration == 0);
}

TEST_CASE("global-best ties resolve to the lowest particle index") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 5;
  cfg.seed = 22;
  Objective constant = [](const HyperparamVector&) { return toy_result(3.0); };
  std::vector<EvalRecord> trace;
  SwarmState s = init_swarm(space, constant, cfg, &trace);
  CHECK(s.g_best_fitness == 3.0);
  CHECK(s.g_best_bits == trace[0].bits);
}

// -------------------------------------------------------------------- step

TEST_CASE("g_best never worsens and the attractor stays in the unit box") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 5;
  cfg.seed = 23;
  Objective obj = hamming_objective({1, 0, 1, 1, 0, 0, 1, 0});
  SwarmState s = init_swarm(space, obj, cfg);
  double prev = s.g_best_fitness;
  for (int t = 1; t <= 15; ++t) {
    s = step(s, space, obj, cfg);
    CHECK(s.g_best_fitness <= prev);
    prev = s.g_best_fitness;
    CHECK(s.iteration == t);
    AttractorPoint m = compute_attractor(s);
    for (double coord : m) {
      CHECK(coord >= 0.0);
      CHECK(coord <= 1.0);
    }
    // The global best is the population minimum of the personal bests.
    for (const Particle& p : s.particles)
      CHECK(p.p_best_fitness >= s.g_best_fitness);
  }
}

TEST_CASE("a constant objective freezes the incumbent global best") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 4;
  cfg.seed = 24;
  Objective constant = [](const HyperparamVector&) { return toy_result(1.0); };
  SwarmState s = init_swarm(space, constant, cfg);
  BitString incumbent = s.g_best_bits;
  for (int t = 0; t < 5; ++t) s = step(s, space, constant, cfg);
  CHECK(s.g_best_bits == incumbent);  // strict-< elitism keeps the first
  CHECK(s.g_best_fitness == 1.0);
}

TEST_CASE("a converged swarm at a pole is a fixed point of step") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 3;
  cfg.seed = 25;
  cfg.p_mut = 0.0;  // no mutation, no noise: nothing may move
  Objective constant = [](const HyperparamVector&) { return toy_result(-1.0); };
  SwarmState s = init_swarm(space, constant, cfg);

  BitString ones(space.total_bits(), 1);
  HyperparamVector h = decode(ones, space);
  for (Particle& p : s.particles) {
    p.reg.assign(space.total_bits(), QubitState{0.0, 1.0});
    p.p_best_bits = ones;
    p.p_best_h = h;
    p.p_best_fitness = -1.0;
  }
  s.g_best_bits = ones;
  s.g_best_h = h;
  s.g_best_fitness = -1.0;

  SwarmState after = step(s, space, constant, cfg);
  CHECK(after.g_best_bits == ones);
  CHECK(after.g_best_fitness == -1.0);
  for (const Particle& p : after.particles) {
    CHECK(p.last_bits == ones);
    CHECK(p.p_best_fitness == -1.0);
    for (const QubitState& q : p.reg) {
      CHECK(q.a == 0.0);
      CHECK(q.b == 1.0);
    }
  }
}

TEST_CASE("objective exceptions fold into +inf and the run survives") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 4;
  cfg.max_iter = 3;
  cfg.seed = 26;
  Objective flaky = [](const HyperparamVector& h) {
    if (h.feature_mask[0] == 1) throw std::runtime_error("boom");
    double j = 0.0;
    for (int b : h.feature_mask) j += b;
    return toy_result(j);
  };
  RunResult r = run(space, flaky, cfg);
  REQUIRE(r.trace.size() == 16);
  int infs = 0, finite = 0;
  for (const EvalRecord& rec : r.trace) {
    if (std::isinf(rec.result.j)) {
      ++infs;
      CHECK(rec.result.diverged);
      CHECK(rec.bits[0] == 1);
    } else {
      ++finite;
      CHECK(rec.bits[0] == 0);
    }
  }
  CHECK(infs > 0);
  CHECK(finite > 0);
  CHECK(std::isfinite(r.best_fitness));
}

// --------------------------------------------------------------------- run

TEST_CASE("run spends exactly the documented budget, in order") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 5;
  cfg.max_iter = 7;
  cfg.seed = 27;
  Objective obj = hamming_objective({0, 1, 0, 1, 1, 0, 0, 1});
  RunResult r = run(space, obj, cfg);

  REQUIRE(r.trace.size() == 5 * (7 + 1));
  double min_j = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    CHECK(r.trace[k].iteration == static_cast<int>(k) / 5);
    CHECK(r.trace[k].particle == static_cast<int>(k) % 5);
    min_j = std::min(min_j, r.trace[k].result.j);
  }
  CHECK(r.best_fitness == min_j);

  // best_bits must be an actual achiever of the best fitness.
  bool seen = false;
  for (const EvalRecord& rec : r.trace)
    seen = seen || (rec.result.j == r.best_fitness && rec.bits == r.best_bits);
  CHECK(seen);
  CHECK(r.final_state.g_best_fitness == r.best_fitness);
}

TEST_CASE("a one-particle one-step run evaluates twice and keeps the better") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 1;
  cfg.max_iter = 1;
  cfg.seed = 28;
  Objective obj = popcount_objective();
  RunResult r = run(space, obj, cfg);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.best_fitness ==
        std::min(r.trace[0].result.j, r.trace[1].result.j));
}

TEST_CASE("traces are bit-for-bit reproducible") {
  SpaceSpec space = toy_space();
  OptimizerConfig cfg;
  cfg.pop_size = 4;
  cfg.max_iter = 6;
  cfg.seed = 29;
  Objective obj = hamming_objective({1, 1, 0, 0, 1, 0, 1, 0});
  RunResult a = run(space, obj, cfg);
  RunResult b = run(space, obj, cfg);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    CHECK(a.trace[k].bits == b.trace[k].bits);
    CHECK(a.trace[k].result.j == b.trace[k].result.j);
  }
  CHECK(a.best_bits == b.best_bits);
}

TEST_CASE("thread count does not change the result") {
  SpaceSpec space = toy_space();
  OptimizerConfig one;
  one.pop_size = 6;
  one.max_iter = 5;
  one.seed = 30;
  OptimizerConfig two = one;
  two.n_threads = 2;
  Objective obj = hamming_objective({0, 0, 1, 1, 0, 1, 0, 1});
  RunResult a = run(space, obj, one);
  RunResult b = run(space, obj, two);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    CHECK(a.trace[k].iteration == b.trace[k].iteration);
    CHECK(a.trace[k].particle == b.trace[k].particle);
    CHECK(a.trace[k].bits == b.trace[k].bits);
    CHECK(a.trace[k].result.j == b.trace[k].result.j);
  }
}

TEST_CASE("the swarm beats uniform random search on a toy landscape") {
  // Hamming distance to a fixed 8-bit pattern; the swarm gets
  // pop*(iters+1) evaluations, the oracle 50*pop uniform samples drawn
  // through the same decoder. The swarm should win or tie nearly always.
  SpaceSpec space = toy_space();
  const std::vector<int> target{1, 0, 1, 1, 0, 0, 1, 0};
  Objective obj = hamming_objective(target);

  int wins = 0;
  for (int trial = 0; trial < 20; ++trial) {
    OptimizerConfig cfg;
    cfg.pop_size = 6;
    cfg.max_iter = 50;
    cfg.seed = 1000 + trial;
    RunResult r = run(space, obj, cfg);

    Rng rng(2000 + trial);
    double random_best = std::numeric_limits<double>::infinity();
    for (int e = 0; e < 50 * cfg.pop_size; ++e) {
      BitString bits(space.total_bits());
      for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
      HyperparamVector h = decode(bits, space);
      random_best = std::min(random_best, obj(h).j);
    }
    wins += r.best_fitness <= random_best;
  }
  CHECK(wins >= 18);
}
