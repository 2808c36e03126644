#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "qibonn/rng.hpp"

using qibonn::Rng;

TEST_CASE("same seed reproduces the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds give different streams") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i) same += (a.next_u64() == b.next_u64());
  CHECK(same == 0);
}

TEST_CASE("child_seed is deterministic and spreads") {
  CHECK(Rng::child_seed(7, 0) == Rng::child_seed(7, 0));
  // No collisions across a decent block of (seed, stream) pairs.
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 64; ++s)
    for (std::uint64_t i = 0; i < 64; ++i)
      seen.insert(Rng::child_seed(s, i));
  CHECK(seen.size() == 64u * 64u);
}

TEST_CASE("child streams are unrelated to the parent and to each other") {
  Rng parent(9);
  Rng c0 = Rng::child(9, 0);
  Rng c1 = Rng::child(9, 1);
  int same01 = 0, sameP = 0;
  for (int i = 0; i < 64; ++i) {
    std::uint64_t u0 = c0.next_u64(), u1 = c1.next_u64();
    same01 += (u0 == u1);
    sameP += (u0 == parent.next_u64());
  }
  CHECK(same01 == 0);
  CHECK(sameP == 0);
}

TEST_CASE("uniform lies in [0,1) and has the right first moments") {
  Rng rng(123);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0, lo = 1.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sumsq += u * u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  // U(0,1): mean 1/2 (sd of the mean = 1/sqrt(12n)), variance 1/12.
  CHECK(std::abs(mean - 0.5) < 3.0 / std::sqrt(12.0 * n));
  CHECK(std::abs(var - 1.0 / 12.0) < 0.002);
  CHECK(lo < 0.001);  // both tails actually visited
  CHECK(hi > 0.999);
}

TEST_CASE("uniform_open0 never returns zero") {
  Rng rng(5);
  for (int i = 0; i < 200000; ++i) {
    double u = rng.uniform_open0();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("uniform_int covers [0,n) uniformly") {
  Rng rng(11);
  const std::uint64_t n = 7;
  std::vector<int> counts(n, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    std::uint64_t v = rng.uniform_int(n);
    REQUIRE(v < n);
    ++counts[v];
  }
  // Each bin expects 10000 with sd ~ sqrt(10000 * 6/7) ~ 93.
  for (int c : counts) CHECK(std::abs(c - draws / 7.0) < 5 * 93.0);
}

TEST_CASE("normal has mean 0 and variance 1") {
  Rng rng(77);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
  // Var of the sample variance of a normal is ~2/n.
  CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("bernoulli matches its probability") {
  Rng rng(3);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += rng.bernoulli(0.3) ? 1 : 0;
  double p = static_cast<double>(ones) / n;
  CHECK(std::abs(p - 0.3) < 3.0 * std::sqrt(0.3 * 0.7 / n));
}

TEST_CASE("shuffle permutes without losing elements") {
  Rng rng(21);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  std::vector<int> orig = v;
  rng.shuffle(v);
  CHECK(v != orig);  // 50! makes identity astronomically unlikely
  std::sort(v.begin(), v.end());
  CHECK(v == orig);

  // Determinism: same seed, same permutation.
  std::vector<int> w1 = orig, w2 = orig;
  Rng r1(4), r2(4);
  r1.shuffle(w1);
  r2.shuffle(w2);
  CHECK(w1 == w2);
}
