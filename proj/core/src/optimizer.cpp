#include "qibonn/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qibonn/errors.hpp"

namespace qibonn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void OptimizerConfig::validate() const {
  // The documented floor is 2 (an attractor of one particle is just its own
  // personal best), but a single-particle swarm is still well defined and
  // useful as a degenerate sanity case, so only zero is rejected.
  if (pop_size < 1) throw ConfigError("pop_size must be >= 1");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (!(alpha_step > 0.0)) throw ConfigError("alpha_step must be > 0");
  if (!(p_mut >= 0.0 && p_mut <= 1.0))
    throw ConfigError("p_mut must lie in [0,1]");
  if (!(theta_max >= 0.0)) throw ConfigError("theta_max must be >= 0");
  if (!(theta_clip > 0.0 && theta_clip <= kPi / 2.0))
    throw ConfigError("theta_clip must lie in (0, pi/2]");
  if (n_threads < 1) throw ConfigError("n_threads must be >= 1");
  noise.validate();
}

namespace {

// Substream for one particle at one round; round 0 is initialization.
Rng particle_rng(const OptimizerConfig& cfg, int particle, int round) {
  return Rng::child(Rng::child_seed(cfg.seed, particle),
                    static_cast<std::uint64_t>(round));
}

// P(1) of the feature-mask qubits, used as the all-zero-mask repair hint.
std::vector<double> mask_hint(const QubitRegister& reg,
                              const SpaceSpec& space) {
  std::vector<double> hint(space.n_feat);
  for (int d = 0; d < space.n_feat; ++d) hint[d] = reg[d].p1();
  return hint;
}

ObjectiveResult safe_eval(const Objective& obj, const HyperparamVector& h) {
  try {
    return obj(h);
  } catch (const std::exception&) {
    ObjectiveResult res;
    res.j = kInf;
    res.roc_auc = std::numeric_limits<double>::quiet_NaN();
    res.pr_auc = std::numeric_limits<double>::quiet_NaN();
    res.val_loss = kInf;
    res.diverged = true;
    return res;
  }
}

// Slot filled per particle during the (possibly threaded) evaluation phase.
struct EvalSlot {
  BitString bits;
  HyperparamVector h;
  ObjectiveResult result;
};

void run_evals(int pop, int n_threads,
               const std::function<void(int)>& eval_one) {
  if (n_threads <= 1 || pop <= 1) {
    for (int i = 0; i < pop; ++i) eval_one(i);
    return;
  }
  int workers = std::min(n_threads, pop);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < pop; i += workers) eval_one(i);
    });
  }
  for (auto& t : pool) t.join();
}

void refresh_g_best(SwarmState& s) {
  for (std::size_t i = 0; i < s.particles.size(); ++i) {
    const Particle& p = s.particles[i];
    if (p.p_best_fitness < s.g_best_fitness) {
      s.g_best_fitness = p.p_best_fitness;
      s.g_best_bits = p.p_best_bits;
      s.g_best_h = p.p_best_h;
    }
  }
}

}  // namespace

SwarmState init_swarm(const SpaceSpec& space, const Objective& obj,
                      const OptimizerConfig& cfg,
                      std::vector<EvalRecord>* trace) {
  cfg.validate();
  space.validate();

  SwarmState s;
  s.iteration = 0;
  s.particles.resize(cfg.pop_size);
  std::size_t n_bits = space.total_bits();
  for (auto& p : s.particles)
    p.reg.assign(n_bits, prepare_qubit(0.5));

  std::vector<EvalSlot> slots(cfg.pop_size);
  run_evals(cfg.pop_size, cfg.n_threads, [&](int i) {
    Rng rng = particle_rng(cfg, i, 0);
    Particle& p = s.particles[i];
    EvalSlot& slot = slots[i];
    slot.bits.resize(n_bits);
    for (std::size_t d = 0; d < n_bits; ++d)
      slot.bits[d] = measure(p.reg[d], rng);
    slot.h = decode(slot.bits, space, mask_hint(p.reg, space));
    slot.result = safe_eval(obj, slot.h);
  });

  for (int i = 0; i < cfg.pop_size; ++i) {
    Particle& p = s.particles[i];
    p.last_bits = slots[i].bits;
    p.p_best_bits = slots[i].bits;
    p.p_best_h = slots[i].h;
    p.p_best_fitness = slots[i].result.j;
    if (trace)
      trace->push_back({0, i, slots[i].bits, slots[i].h, slots[i].result});
  }
  refresh_g_best(s);
  return s;
}

AttractorPoint compute_attractor(const SwarmState& swarm) {
  if (swarm.particles.empty())
    throw std::invalid_argument("attractor of an empty swarm");
  std::size_t n_bits = swarm.particles[0].p_best_bits.size();
  AttractorPoint m(n_bits, 0.0);
  for (const Particle& p : swarm.particles)
    for (std::size_t d = 0; d < n_bits; ++d)
      m[d] += static_cast<double>(p.p_best_bits[d]);
  for (double& v : m) v /= static_cast<double>(swarm.particles.size());
  return m;
}

double qpso_displacement(int pb_d, int g_d, double alpha_step, Rng& rng) {
  if (pb_d == g_d) return 0.0;
  double u = rng.uniform_open0();
  return alpha_step * std::abs(static_cast<double>(pb_d - g_d)) *
         std::log(1.0 / u);
}

double rotation_angle(const QubitState& q, double m_d, int g_d, int pb_d,
                      const OptimizerConfig& cfg, Rng& rng) {
  double attractor_gap = std::abs(q.p1() - m_d);
  double u = rng.uniform_open0();
  double magnitude = cfg.alpha_step * attractor_gap * std::log(1.0 / u);
  magnitude +=
      cfg.theta_clip * qpso_displacement(pb_d, g_d, cfg.alpha_step, rng);
  magnitude = std::min(cfg.theta_clip, magnitude);
  double sign = g_d == 1 ? 1.0 : -1.0;
  if (q.b < 0.0) sign = -sign;
  return sign * magnitude;
}

SwarmState step(const SwarmState& swarm, const SpaceSpec& space,
                const Objective& obj, const OptimizerConfig& cfg,
                std::vector<EvalRecord>* trace) {
  cfg.validate();
  if (static_cast<int>(swarm.particles.size()) != cfg.pop_size)
    throw std::invalid_argument("swarm size does not match pop_size");

  SwarmState s = swarm;
  int round = s.iteration + 1;
  std::size_t n_bits = space.total_bits();

  // Phase 1 (parallelizable): noise -> measure -> decode -> evaluate.
  // Each particle owns substream (seed, particle, round); the same stream
  // continues into its rotation/mutation draws below.
  std::vector<Rng> rngs;
  rngs.reserve(cfg.pop_size);
  for (int i = 0; i < cfg.pop_size; ++i)
    rngs.push_back(particle_rng(cfg, i, round));

  std::vector<EvalSlot> slots(cfg.pop_size);
  run_evals(cfg.pop_size, cfg.n_threads, [&](int i) {
    Particle& p = s.particles[i];
    Rng& rng = rngs[i];
    if (cfg.noise.enabled())
      for (auto& q : p.reg) q = apply_noise(q, cfg.noise, rng);
    EvalSlot& slot = slots[i];
    slot.bits.resize(n_bits);
    for (std::size_t d = 0; d < n_bits; ++d)
      slot.bits[d] = measure(p.reg[d], rng);
    slot.h = decode(slot.bits, space, mask_hint(p.reg, space));
    slot.result = safe_eval(obj, slot.h);
  });

  // Phase 2 (sequential): best updates on strict improvement.
  for (int i = 0; i < cfg.pop_size; ++i) {
    Particle& p = s.particles[i];
    p.last_bits = slots[i].bits;
    if (slots[i].result.j < p.p_best_fitness) {
      p.p_best_fitness = slots[i].result.j;
      p.p_best_bits = slots[i].bits;
      p.p_best_h = slots[i].h;
    }
    if (trace)
      trace->push_back({round, i, slots[i].bits, slots[i].h, slots[i].result});
  }
  refresh_g_best(s);

  // Phase 3: rotate every qubit toward the bests, then mutate.
  AttractorPoint m = compute_attractor(s);
  for (int i = 0; i < cfg.pop_size; ++i) {
    Particle& p = s.particles[i];
    Rng& rng = rngs[i];
    for (std::size_t d = 0; d < n_bits; ++d) {
      double dtheta = rotation_angle(p.reg[d], m[d], s.g_best_bits[d],
                                     p.p_best_bits[d], cfg, rng);
      p.reg[d] = rotate(p.reg[d], dtheta);
      p.reg[d] = mutate(p.reg[d], cfg.theta_max, cfg.p_mut, rng);
    }
  }

  s.iteration = round;
  return s;
}

RunResult run(const SpaceSpec& space, const Objective& obj,
              const OptimizerConfig& cfg) {
  RunResult out;
  SwarmState s = init_swarm(space, obj, cfg, &out.trace);
  for (int t = 0; t < cfg.max_iter; ++t)
    s = step(s, space, obj, cfg, &out.trace);
  out.best_h = s.g_best_h;
  out.best_bits = s.g_best_bits;
  out.best_fitness = s.g_best_fitness;
  out.final_state = std::move(s);
  return out;
}

}  // namespace qibonn
