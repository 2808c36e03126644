#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qibonn/errors.hpp"
#include "qibonn/qsim.hpp"

using namespace qibonn;

namespace {
constexpr double kTight = 1e-12;

QubitState random_state(Rng& rng) {
  // Any angle, both signs of b, exercised uniformly.
  double phi = (rng.uniform() * 2.0 - 1.0) * 3.14159265358979323846;
  return {std::cos(phi), std::sin(phi)};
}
}  // namespace

// ------------------------------------------------------------------ rotate

TEST_CASE("rotation by zero is the identity") {
  QubitState q{1.0, 0.0};
  QubitState r = rotate(q, 0.0);
  CHECK(r.a == doctest::Approx(1.0).epsilon(kTight));
  CHECK(r.b == doctest::Approx(0.0).epsilon(kTight));
}

TEST_CASE("quarter turn maps |0> to |1>") {
  QubitState r = rotate({1.0, 0.0}, 3.14159265358979323846 / 2.0);
  CHECK(std::abs(r.a) < kTight);
  CHECK(r.b == doctest::Approx(1.0).epsilon(kTight));
}

TEST_CASE("pi/4 from |0> gives the balanced state") {
  // (cos pi/4, sin pi/4) = (sqrt2/2, sqrt2/2), P(1) = 1/2.
  QubitState r = rotate({1.0, 0.0}, 3.14159265358979323846 / 4.0);
  const double s = std::sqrt(0.5);
  CHECK(r.a == doctest::Approx(s).epsilon(kTight));
  CHECK(r.b == doctest::Approx(s).epsilon(kTight));
  CHECK(r.p1() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("rotation preserves the norm") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    QubitState q = random_state(rng);
    double theta = (rng.uniform() * 2.0 - 1.0) * 6.0;
    CHECK(rotate(q, theta).norm2() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rotations compose additively") {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    QubitState q = random_state(rng);
    double t1 = rng.uniform() * 2.0 - 1.0;
    double t2 = rng.uniform() * 2.0 - 1.0;
    QubitState two = rotate(rotate(q, t1), t2);
    QubitState one = rotate(q, t1 + t2);
    CHECK(two.a == doctest::Approx(one.a).epsilon(1e-12));
    CHECK(two.b == doctest::Approx(one.b).epsilon(1e-12));
  }
}

// ------------------------------------------------------------------ mutate

TEST_CASE("mutation disabled leaves the state untouched") {
  Rng rng(3);
  QubitState q{0.6, 0.8};
  for (int i = 0; i < 100; ++i) {
    QubitState r = mutate(q, 0.3, 0.0, rng);
    CHECK(r.a == q.a);
    CHECK(r.b == q.b);
  }
}

TEST_CASE("zero theta_max mutates by a zero angle") {
  Rng rng(4);
  QubitState q{0.6, 0.8};
  for (int i = 0; i < 100; ++i) {
    QubitState r = mutate(q, 0.0, 1.0, rng);
    CHECK(r.a == doctest::Approx(q.a).epsilon(kTight));
    CHECK(r.b == doctest::Approx(q.b).epsilon(kTight));
  }
}

TEST_CASE("forced mutation draws angles uniform on [-theta_max, theta_max]") {
  // Start at |0>, so the post-state encodes the applied angle exactly:
  // (cos t, sin t) -> t = atan2(b, a). KS test against the uniform CDF;
  // the 1% critical value is 1.628/sqrt(n).
  const double theta_max = 0.3;
  const int n = 100000;
  Rng rng(5);
  std::vector<double> angles;
  angles.reserve(n);
  for (int i = 0; i < n; ++i) {
    QubitState r = mutate({1.0, 0.0}, theta_max, 1.0, rng);
    double t = std::atan2(r.b, r.a);
    CHECK(std::abs(t) <= theta_max + 1e-12);
    angles.push_back(t);
  }
  std::sort(angles.begin(), angles.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    double cdf = (angles[i] + theta_max) / (2.0 * theta_max);
    d = std::max(d, std::abs(cdf - (i + 1.0) / n));
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
  }
  CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

// ----------------------------------------------------------------- measure

TEST_CASE("pure states measure deterministically") {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    CHECK(measure({1.0, 0.0}, rng) == 0);
    CHECK(measure({0.0, 1.0}, rng) == 1);
  }
}

TEST_CASE("balanced state measures 1 half the time") {
  Rng rng(7);
  const double s = std::sqrt(0.5);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure({s, s}, rng);
  CHECK(std::abs(ones / static_cast<double>(n) - 0.5) < 0.01);
}

TEST_CASE("measurement frequency tracks b^2 for a skewed state") {
  Rng rng(8);
  QubitState q = prepare_qubit(0.3);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure(q, rng);
  double freq = ones / static_cast<double>(n);
  CHECK(std::abs(freq - 0.3) < 3.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("measurement is non-destructive") {
  Rng rng(9);
  QubitState q = prepare_qubit(0.7);
  double a = q.a, b = q.b;
  for (int i = 0; i < 10; ++i) measure(q, rng);
  CHECK(q.a == a);
  CHECK(q.b == b);
}

// ----------------------------------------------------------- prepare_qubit

TEST_CASE("prepare_qubit endpoint and closed-form values") {
  QubitState z = prepare_qubit(0.0);
  CHECK(z.a == 1.0);
  CHECK(z.b == 0.0);
  QubitState o = prepare_qubit(1.0);
  CHECK(o.a == 0.0);
  CHECK(o.b == 1.0);
  QubitState q = prepare_qubit(0.25);  // (sqrt 0.75, 0.5)
  CHECK(q.a == doctest::Approx(std::sqrt(0.75)).epsilon(kTight));
  CHECK(q.b == doctest::Approx(0.5).epsilon(kTight));
  CHECK_THROWS_AS(prepare_qubit(-0.01), std::domain_error);
  CHECK_THROWS_AS(prepare_qubit(1.01), std::domain_error);
}

// ------------------------------------------------------------------- noise

TEST_CASE("strength zero is the identity for every channel") {
  Rng rng(10);
  QubitState q{0.6, 0.8};
  for (NoiseKind kind : {NoiseKind::BitFlip, NoiseKind::Depolarizing,
                         NoiseKind::AmplitudeDamping}) {
    QubitState r = apply_noise(q, NoiseSpec::make(kind, 0.0), rng);
    CHECK(r.a == q.a);
    CHECK(r.b == q.b);
  }
}

TEST_CASE("bit flip at p=1 swaps the amplitudes deterministically") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    QubitState r =
        apply_noise({0.6, 0.8}, NoiseSpec::make(NoiseKind::BitFlip, 1.0), rng);
    CHECK(r.a == doctest::Approx(0.8).epsilon(kTight));
    CHECK(r.b == doctest::Approx(0.6).epsilon(kTight));
  }
}

TEST_CASE("bit flip moves P(1) to its mixture value") {
  // P(1 after) = (1-p) b^2 + p a^2. With b^2=0.3, p=0.2: 0.38.
  Rng rng(12);
  QubitState q = prepare_qubit(0.3);
  NoiseSpec spec = NoiseSpec::make(NoiseKind::BitFlip, 0.2);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure(apply_noise(q, spec, rng), rng);
  double freq = ones / static_cast<double>(n);
  CHECK(std::abs(freq - 0.38) < 3.0 * std::sqrt(0.38 * 0.62 / n));
}

TEST_CASE("depolarizing at p=1 averages the three Pauli branches") {
  // X: (b,a) and Y: (b,-a) both measure 1 with a^2; Z: (a,-b) keeps b^2.
  // Expected P(1) = (2a^2 + b^2)/3. With b^2 = 0.3: (1.4 + 0.3)/3 = 17/30.
  Rng rng(13);
  QubitState q = prepare_qubit(0.3);
  NoiseSpec spec = NoiseSpec::make(NoiseKind::Depolarizing, 1.0);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure(apply_noise(q, spec, rng), rng);
  double expect = 17.0 / 30.0;
  double freq = ones / static_cast<double>(n);
  CHECK(std::abs(freq - expect) <
        3.0 * std::sqrt(expect * (1.0 - expect) / n));
}

TEST_CASE("depolarizing at intermediate p mixes with the identity") {
  // P(1 after) = (1-p) b^2 + p (2a^2+b^2)/3. b^2=0.3, p=0.3: 0.38.
  Rng rng(14);
  QubitState q = prepare_qubit(0.3);
  NoiseSpec spec = NoiseSpec::make(NoiseKind::Depolarizing, 0.3);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure(apply_noise(q, spec, rng), rng);
  double freq = ones / static_cast<double>(n);
  CHECK(std::abs(freq - 0.38) < 3.0 * std::sqrt(0.38 * 0.62 / n));
}

TEST_CASE("amplitude damping jumps with probability gamma b^2") {
  // gamma=1 on (0.6, 0.8): jump probability 1*0.64; the jump lands on
  // (1,0) and the no-jump branch also collapses to (a,0)/|a| at gamma=1,
  // so distinguish branches by the pre-normalization sign of a: start
  // with a<0 so the surviving branch keeps a=-1.
  Rng rng(15);
  QubitState q{-0.6, 0.8};
  NoiseSpec spec = NoiseSpec::make(NoiseKind::AmplitudeDamping, 1.0);
  const int n = 100000;
  int jumps = 0;
  for (int i = 0; i < n; ++i) {
    QubitState r = apply_noise(q, spec, rng);
    CHECK(std::abs(r.b) < kTight);  // gamma=1 always ends in |0>
    if (r.a > 0.0) ++jumps;         // jump branch resets to (1, 0)
  }
  double freq = jumps / static_cast<double>(n);
  CHECK(std::abs(freq - 0.64) < 0.01);
}

TEST_CASE("amplitude damping shifts the measured mean to (1-gamma) b^2") {
  Rng rng(16);
  QubitState q = prepare_qubit(0.4);
  NoiseSpec spec = NoiseSpec::make(NoiseKind::AmplitudeDamping, 0.25);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += measure(apply_noise(q, spec, rng), rng);
  double expect = 0.75 * 0.4;  // 0.3
  double freq = ones / static_cast<double>(n);
  CHECK(std::abs(freq - expect) <
        3.0 * std::sqrt(expect * (1.0 - expect) / n));
}

TEST_CASE("every channel returns a unit-norm state") {
  Rng rng(17);
  for (NoiseKind kind : {NoiseKind::BitFlip, NoiseKind::Depolarizing,
                         NoiseKind::AmplitudeDamping}) {
    for (int i = 0; i < 2000; ++i) {
      QubitState q = random_state(rng);
      double strength = rng.uniform();
      QubitState r = apply_noise(q, NoiseSpec::make(kind, strength), rng);
      CHECK(r.norm2() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("noise spec validation and parsing") {
  CHECK_THROWS_AS(NoiseSpec::make(NoiseKind::BitFlip, -0.1), ConfigError);
  CHECK_THROWS_AS(NoiseSpec::make(NoiseKind::BitFlip, 1.1), ConfigError);
  CHECK_THROWS_AS(NoiseSpec::parse("gaussian", 0.1), ConfigError);
  NoiseSpec s = NoiseSpec::parse("amplitude_damping", 0.05);
  CHECK(s.kind == NoiseKind::AmplitudeDamping);
  CHECK(s.strength == 0.05);
  CHECK(to_string(s.kind) == "amplitude_damping");
  CHECK_FALSE(NoiseSpec::none().enabled());
  CHECK_FALSE(NoiseSpec::make(NoiseKind::BitFlip, 0.0).enabled());
  CHECK(s.enabled());
}

TEST_CASE("at the symmetric point channels keep the mean and inflate spread") {
  // At P(1)=0.5 the bit-flip and depolarizing channels leave the outcome
  // distribution exactly Bernoulli(1/2); amplitude damping biases it by
  // gamma/2. Small strengths keep every mean within the 3-sigma band while
  // the trajectory randomness can only widen, never shrink, the spread.
  QubitState q = prepare_qubit(0.5);
  const int n = 100000;
  const double sigma3 = 3.0 * 0.5 / std::sqrt(static_cast<double>(n));

  for (auto spec : {NoiseSpec::make(NoiseKind::BitFlip, 0.05),
                    NoiseSpec::make(NoiseKind::Depolarizing, 0.05),
                    NoiseSpec::make(NoiseKind::AmplitudeDamping, 0.003)}) {
    Rng rng(18);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      sum += measure(apply_noise(q, spec, rng), rng);
    double mean = sum / n;
    double allowed = sigma3 + (spec.kind == NoiseKind::AmplitudeDamping
                                   ? spec.strength / 2.0
                                   : 0.0);
    CHECK(std::abs(mean - 0.5) < allowed);
    // Bernoulli variance p(1-p) stays within sampling error of 1/4.
    double var = mean * (1.0 - mean);
    CHECK(var > 0.25 - 2e-4);
  }
}
