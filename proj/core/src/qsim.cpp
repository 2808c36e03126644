#include "qibonn/qsim.hpp"

#include <cmath>
#include <stdexcept>

#include "qibonn/errors.hpp"

namespace qibonn {

NoiseSpec NoiseSpec::make(NoiseKind kind, double strength) {
  if (kind != NoiseKind::None &&
      !(strength >= 0.0 && strength <= 1.0)) {
    throw ConfigError("noise strength must lie in [0,1], got " +
                      std::to_string(strength));
  }
  NoiseSpec spec;
  spec.kind = kind;
  spec.strength = kind == NoiseKind::None ? 0.0 : strength;
  return spec;
}

void NoiseSpec::validate() const {
  if (kind != NoiseKind::None && !(strength >= 0.0 && strength <= 1.0)) {
    throw ConfigError("noise strength must lie in [0,1], got " +
                      std::to_string(strength));
  }
}

NoiseSpec NoiseSpec::parse(const std::string& kind_name, double strength) {
  NoiseKind kind;
  if (kind_name == "none") {
    kind = NoiseKind::None;
  } else if (kind_name == "bit_flip") {
    kind = NoiseKind::BitFlip;
  } else if (kind_name == "depolarizing") {
    kind = NoiseKind::Depolarizing;
  } else if (kind_name == "amplitude_damping") {
    kind = NoiseKind::AmplitudeDamping;
  } else {
    throw ConfigError("unknown noise kind: " + kind_name);
  }
  return make(kind, strength);
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::None: return "none";
    case NoiseKind::BitFlip: return "bit_flip";
    case NoiseKind::Depolarizing: return "depolarizing";
    case NoiseKind::AmplitudeDamping: return "amplitude_damping";
  }
  return "none";
}

namespace {

QubitState renormalized(QubitState q) {
  const double n = std::sqrt(q.norm2());
  q.a /= n;
  q.b /= n;
  return q;
}

}  // namespace

QubitState rotate(const QubitState& q, double dtheta) {
  const double c = std::cos(dtheta);
  const double s = std::sin(dtheta);
  return QubitState{q.a * c - q.b * s, q.a * s + q.b * c};
}

QubitState mutate(const QubitState& q, double theta_max, double p_mut,
                  Rng& rng) {
  if (!rng.bernoulli(p_mut)) return q;
  const double theta = rng.uniform(-theta_max, theta_max);
  return rotate(q, theta);
}

int measure(const QubitState& q, Rng& rng) {
  return rng.uniform() < q.p1() ? 1 : 0;
}

QubitState apply_noise(const QubitState& q, const NoiseSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case NoiseKind::None:
      return q;
    case NoiseKind::BitFlip: {
      if (!rng.bernoulli(spec.strength)) return q;
      return renormalized(QubitState{q.b, q.a});
    }
    case NoiseKind::Depolarizing: {
      if (!rng.bernoulli(spec.strength)) return q;
      switch (rng.uniform_int(3)) {
        case 0: return renormalized(QubitState{q.b, q.a});    // X
        case 1: return renormalized(QubitState{q.b, -q.a});   // Y
        default: return renormalized(QubitState{q.a, -q.b});  // Z
      }
    }
    case NoiseKind::AmplitudeDamping: {
      const double gamma = spec.strength;
      // Jump operator fires with probability gamma * P(1); otherwise the
      // no-jump Kraus term diag(1, sqrt(1-gamma)) applies, renormalized.
      if (rng.uniform() < gamma * q.p1()) {
        return QubitState{1.0, 0.0};
      }
      return renormalized(QubitState{q.a, q.b * std::sqrt(1.0 - gamma)});
    }
  }
  return q;
}

QubitState prepare_qubit(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw std::domain_error("prepare_qubit: p1 must lie in [0,1], got " +
                            std::to_string(p1));
  }
  return QubitState{std::sqrt(1.0 - p1), std::sqrt(p1)};
}

}  // namespace qibonn
