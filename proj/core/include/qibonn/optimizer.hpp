#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qibonn/encoding.hpp"
#include "qibonn/nn.hpp"
#include "qibonn/qsim.hpp"
#include "qibonn/rng.hpp"

namespace qibonn {

struct OptimizerConfig {
  int pop_size = 10;
  int max_iter = 50;
  double alpha_step = 0.75;  // QPSO contraction-expansion coefficient
  double p_mut = 0.05;
  double theta_max = 0.3141592653589793;   // pi/10, mutation angle bound
  double theta_clip = 0.39269908169872414; // pi/8, per-step rotation cap
  NoiseSpec noise;
  std::uint64_t seed = 0;
  int n_threads = 1;

  void validate() const;
};

struct Particle {
  QubitRegister reg;
  BitString last_bits;
  BitString p_best_bits;
  HyperparamVector p_best_h;
  double p_best_fitness = std::numeric_limits<double>::infinity();
};

struct SwarmState {
  std::vector<Particle> particles;
  BitString g_best_bits;
  HyperparamVector g_best_h;
  double g_best_fitness = std::numeric_limits<double>::infinity();
  int iteration = 0;
};

/// Per-dimension mean of personal-best bits; every coordinate in [0,1].
using AttractorPoint = std::vector<double>;

struct EvalRecord {
  int iteration = 0;  // 0 = initialization round
  int particle = 0;
  BitString bits;
  HyperparamVector h;
  ObjectiveResult result;
};

struct RunResult {
  HyperparamVector best_h;
  BitString best_bits;
  double best_fitness = std::numeric_limits<double>::infinity();
  std::vector<EvalRecord> trace;
  SwarmState final_state;
};

/// Uniform-superposition swarm: every qubit prepared at P(1)=0.5, each
/// particle measured, decoded and evaluated once (iteration 0 of the
/// trace); personal bests take that first sample, the global best is the
/// population minimum with ties going to the lowest particle index.
SwarmState init_swarm(const SpaceSpec& space, const Objective& obj,
                      const OptimizerConfig& cfg,
                      std::vector<EvalRecord>* trace = nullptr);

AttractorPoint compute_attractor(const SwarmState& swarm);

/// alpha * |pb - g| * ln(1/u), the QPSO jump length. Exponentially
/// distributed with mean and standard deviation alpha*|pb-g|; exactly 0
/// (no draw consumed) when the bits agree.
double qpso_displacement(int pb_d, int g_d, double alpha_step, Rng& rng);

/// Rotation toward g_best's bit:
///   |dtheta| = min(theta_clip, alpha_step*|P1(q)-m_d|*ln(1/u)
///                              + alpha_step*theta_clip*|pb_d-g_d|*ln(1/u'))
/// signed +1 when g_d=1 (toward |1>) else -1, flipped while b<0 so the
/// pull still moves P(1) the intended way from either orientation.
double rotation_angle(const QubitState& q, double m_d, int g_d, int pb_d,
                      const OptimizerConfig& cfg, Rng& rng);

/// One generation: per particle, apply the configured noise channel to
/// each qubit, measure, decode, evaluate and update bests on strict
/// improvement; then compute the attractor and give every qubit its update
/// rotation followed by the mutation operator. Objective exceptions score
/// +inf; g_best never worsens. Randomness is drawn from substreams keyed
/// on (seed, particle, iteration), so results do not depend on evaluation
/// order or thread count.
SwarmState step(const SwarmState& swarm, const SpaceSpec& space,
                const Objective& obj, const OptimizerConfig& cfg,
                std::vector<EvalRecord>* trace = nullptr);

/// init_swarm + max_iter steps. Exactly pop_size*(max_iter+1) objective
/// evaluations, all recorded in the trace in (iteration, particle) order.
RunResult run(const SpaceSpec& space, const Objective& obj,
              const OptimizerConfig& cfg);

}  // namespace qibonn
