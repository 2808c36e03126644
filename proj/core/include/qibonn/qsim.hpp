#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qibonn/rng.hpp"

namespace qibonn {

/// One simulated qubit as a normalized real amplitude pair (a, b).
///
/// Every operator used here (Ry rotations, the three error channels) maps
/// real states to real states up to an unobservable global phase, so
/// amplitudes carry a sign but no imaginary part. P(measure 1) = b^2.
struct QubitState {
  double a = 1.0;  // amplitude of |0>
  double b = 0.0;  // amplitude of |1>

  double p1() const { return b * b; }
  double norm2() const { return a * a + b * b; }
};

/// One qubit per search dimension.
using QubitRegister = std::vector<QubitState>;

enum class NoiseKind { None, BitFlip, Depolarizing, AmplitudeDamping };

/// A single-qubit error channel and its strength (probability p, or damping
/// rate gamma). Strength must lie in [0, 1]; validated at construction so
/// the per-qubit hot path never re-checks.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::None;
  double strength = 0.0;

  static NoiseSpec none() { return NoiseSpec{}; }
  static NoiseSpec make(NoiseKind kind, double strength);
  static NoiseSpec parse(const std::string& kind_name, double strength);

  /// ConfigError unless strength lies in [0, 1]. For specs assembled by
  /// hand or from config files; make()/parse() have already called it.
  void validate() const;

  bool enabled() const { return kind != NoiseKind::None && strength > 0.0; }
};

std::string to_string(NoiseKind kind);

/// Rotate the amplitude vector by dtheta:
///   (a, b) -> (a cos - b sin, a sin + b cos).
/// Norm is preserved to 1e-12.
QubitState rotate(const QubitState& q, double dtheta);

/// With probability p_mut, rotate by an angle drawn uniformly from
/// [-theta_max, theta_max]; otherwise return q unchanged.
QubitState mutate(const QubitState& q, double theta_max, double p_mut,
                  Rng& rng);

/// Born-rule sample: 1 with probability b^2, else 0. Non-destructive; the
/// stored register keeps its amplitudes and is re-sampled every iteration.
int measure(const QubitState& q, Rng& rng);

/// Stochastic-trajectory application of a single-qubit channel.
///
///  - bit_flip: with probability p swap amplitudes (Pauli-X).
///  - depolarizing: with probability p apply X, Y or Z, chosen uniformly.
///    On real states Y acts as (a,b) -> (b,-a) and Z as (a,b) -> (a,-b)
///    (global phase dropped).
///  - amplitude_damping: two-branch Kraus unraveling; with probability
///    gamma*b^2 jump to (1,0), otherwise apply diag(1, sqrt(1-gamma)) and
///    renormalize.
///
/// The result is renormalized to unit norm.
QubitState apply_noise(const QubitState& q, const NoiseSpec& spec, Rng& rng);

/// State with P(measure 1) = p1: (sqrt(1-p1), sqrt(p1)).
/// Throws std::domain_error if p1 is outside [0, 1].
QubitState prepare_qubit(double p1);

}  // namespace qibonn
