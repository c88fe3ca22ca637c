#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "orlicz/embeddings.hpp"
#include "orlicz/error.hpp"
#include "orlicz/lorentz.hpp"
#include "orlicz/random.hpp"

using namespace orlicz;

namespace {

// classical l^{tau,q} quasi-norm written out directly
double classical_lorentz(std::vector<double> s, double tau, double q) {
  for (double& x : s) x = std::fabs(x);
  std::sort(s.begin(), s.end());
  std::reverse(s.begin(), s.end());
  if (std::isinf(q)) {
    double m = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) m = std::max(m, std::pow(i + 1.0, 1.0 / tau) * s[i]);
    return m;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    total += std::pow(i + 1.0, q / tau - 1.0) * std::pow(s[i], q);
  return std::pow(total, 1.0 / q);
}

std::vector<double> random_seq(Rng& rng, std::size_t n) {
  std::vector<double> s(n);
  for (double& x : s) x = std::pow(rng.uniform(), 3.0);
  return s;
}

WaveletExpansion on_level(int J, int L, const std::vector<double>& c) {
  WaveletExpansion e(1, J, 0);
  for (std::size_t i = 0; i < c.size(); ++i) e[e.slot(L, i, 1)] = c[i];
  return e;
}

}  // namespace

TEST_CASE("Lorentz norm examples") {
  CHECK(lorentz_norm(CoefSequence({1.0, 1.0}), EtaWeight::power(1.0), 1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  const EtaWeight eta = EtaWeight::power(0.7);
  std::vector<double> s;
  for (std::size_t k = 1; k <= 50; ++k) s.push_back(1.0 / eta(k));
  CHECK(lorentz_norm(CoefSequence(s), eta, q_infinity) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(lorentz_norm(CoefSequence(s), eta, 0.0), InvalidArgument);
  CHECK(lorentz_norm(CoefSequence({}), eta, 2.0) == 0.0);
}

TEST_CASE("power eta reproduces the classical Lorentz spaces") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_seq(rng, 1 + rng.below(200));
    const double tau = rng.uniform(0.3, 4.0);
    for (double q : {0.5, 1.0, 2.5, q_infinity})
      CHECK(lorentz_norm(CoefSequence(s), EtaWeight::power(1.0 / tau), q) ==
            doctest::Approx(classical_lorentz(s, tau, q)).epsilon(1e-11));
  }
}

TEST_CASE("Lorentz norm is rearrangement invariant and nested in q") {
  Rng rng(22);
  const auto prof = FundamentalProfile::make(YoungFunction::zygmund(2, 1));
  const std::vector<EtaWeight> etas = {EtaWeight::power(1.0), EtaWeight::power(0.5),
                                       EtaWeight::alpha_h_plus(0.5, prof)};
  for (int t = 0; t < 30; ++t) {
    auto s = random_seq(rng, 64);
    for (const EtaWeight& eta : etas) {
      const double base = lorentz_norm(CoefSequence(s), eta, 1.0);
      std::vector<double> shuffled = s;
      for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
      CHECK(lorentz_norm(CoefSequence(shuffled), eta, 1.0) == base);
      // q = 1 dominates larger q once eta(k)/k is non-increasing
      if (eta.kind() == EtaWeight::Kind::power && eta(2) <= 2.0) {
        CHECK(lorentz_norm(CoefSequence(s), eta, 2.0) <= base * (1 + 1e-12));
        CHECK(lorentz_norm(CoefSequence(s), eta, q_infinity) <= base * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("eta weights are increasing and doubling") {
  for (const auto& F : {YoungFunction::power(2), YoungFunction::zygmund(2, 1),
                        YoungFunction::zygmund(1.5, 3)}) {
    const auto prof = FundamentalProfile::make(F);
    for (double a : {0.25, 0.5, 1.0}) {
      const auto plus = EtaWeight::alpha_h_plus(a, prof);
      const auto minus = EtaWeight::alpha_h_minus(a, prof);
      CHECK(plus.increasing(512));
      CHECK(minus.increasing(512));
      const double cp = plus.doubling_constant(512), cm = minus.doubling_constant(512);
      CHECK(std::isfinite(cp));
      CHECK(std::isfinite(cm));
      CHECK(cp <= std::pow(2.0, a + 1.0) * (1 + 1e-9));
      CHECK(cm <= std::pow(2.0, a + 1.0) * (1 + 1e-9));
      CHECK(plus(1) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(EtaWeight::power(1.0)(0), InvalidArgument);
}

TEST_CASE("quasi-triangle ratio") {
  // l^1 is a norm
  CHECK(quasi_triangle_ratio(EtaWeight::power(1.0), 1.0, 1.0, 32, 200, 3) <= 1.0 + 1e-12);
  const auto prof = FundamentalProfile::make(YoungFunction::zygmund(2, 1));
  const double r = quasi_triangle_ratio(EtaWeight::alpha_h_minus(0.5, prof), 0.5, 0.5, 32, 100, 4);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  CHECK_THROWS_AS(quasi_triangle_ratio(EtaWeight::power(1.0), 1.0, 1.5, 8, 1, 1), InvalidArgument);
}

TEST_CASE("embedding chain of a single atom is flat") {
  const Ambient X(make_weight("power:gamma=0.5", 1, 8, 0), YoungFunction::zygmund(2, 1));
  const RankedExpansion r(on_level(8, 4, {1.3}), X.atoms());
  const EmbeddingReport e = embedding_check(r, 0.5, 1.0, X, SigmaMode::support);
  const double v = 1.3 * X.atoms().at(4, 0);
  CHECK(e.left == doctest::Approx(v).epsilon(1e-9));
  CHECK(e.middle == doctest::Approx(v).epsilon(1e-9));
  CHECK(e.right == doctest::Approx(v).epsilon(1e-9));
}

TEST_CASE("embedding chain in Lp collapses to the classical Lorentz norm") {
  const double p = 2.0, alpha = 0.5, q = 1.0;
  const double tau = 1.0 / (alpha + 1.0 / p);
  const Ambient X(make_weight("power:gamma=0.5", 1, 9, 0), YoungFunction::power(p));
  for (double beta : {1.2, 1.6, 2.5}) {
    std::vector<double> c;
    for (int k = 1; k <= 64; ++k) c.push_back(std::pow(k, -beta));
    const RankedExpansion r(on_level(9, 8, c), X.atoms());
    const EmbeddingReport e = embedding_check(r, alpha, q, X, SigmaMode::support);
    const double lt = classical_lorentz(r.sizes(), tau, q);
    CHECK(e.left == doctest::Approx(lt).epsilon(1e-9));
    CHECK(e.right == doctest::Approx(lt).epsilon(1e-9));
    CHECK(e.middle / lt > 0.25);
    CHECK(e.middle / lt < 4.0);
  }
}

TEST_CASE("bricks and optimality witnesses") {
  const Ambient X(make_weight("const", 1, 8, 0), YoungFunction::power(2));
  // a single normalized atom has norm one
  const auto b = brick_expansion({DyadicCube{1, 3, {2, 0}}}, X);
  CHECK(X.norm(b) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(brick_expansion({DyadicCube{1, 8, {0, 0}}}, X), InvalidArgument);
  CHECK_THROWS_AS(brick_expansion({DyadicCube{1, 3, {9, 0}}}, X), InvalidArgument);

  const OptimalityReport one = optimality_witness(X, 0.5, 1.0, 1, SigmaMode::support);
  CHECK(one.implied_upper == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(one.h_plus == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> band;
  for (std::size_t N : {1u, 2u, 4u, 8u, 16u}) {
    const OptimalityReport w = optimality_witness(X, 0.5, 1.0, N, SigmaMode::support);
    const double scale = std::sqrt(static_cast<double>(N));
    band.push_back(w.implied_lower / scale);
    band.push_back(w.implied_upper / scale);
    CHECK(w.implied_upper == doctest::Approx(scale).epsilon(1e-9));
    CHECK(w.h_plus == doctest::Approx(scale).epsilon(1e-6));
  }
  const auto [lo, hi] = std::minmax_element(band.begin(), band.end());
  CHECK(*hi / *lo < 4.0);
}
