#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "orlicz/error.hpp"
#include "orlicz/greedy.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/random.hpp"

using namespace orlicz;

namespace {

Ambient unit_space(int J, const YoungFunction& F) {
  return Ambient(make_weight("const", 1, J, 0), F);
}

// coefficient values on distinct cubes of level L (d = 1, M = 0)
WaveletExpansion on_level(int J, int L, const std::vector<double>& c) {
  WaveletExpansion e(1, J, 0);
  for (std::size_t i = 0; i < c.size(); ++i) e[e.slot(L, i, 1)] = c[i];
  return e;
}

WaveletExpansion random_expansion(Rng& rng, int J, std::size_t count) {
  WaveletExpansion e(1, J, 0);
  std::vector<std::size_t> slots(e.slot_count());
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(slots.size() - i);
    std::swap(slots[i], slots[j]);
    e[slots[i]] = rng.sign() * rng.uniform(0.1, 2.0);
  }
  return e;
}

double parseval_tail(std::vector<double> c, std::size_t N) {
  for (double& x : c) x = std::fabs(x);
  std::sort(c.begin(), c.end(), std::greater<>());
  double s = 0.0;
  for (std::size_t k = N; k < c.size(); ++k) s += c[k] * c[k];
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("greedy step keeps the largest terms") {
  const Ambient X = unit_space(3, YoungFunction::power(2));
  const RankedExpansion r(on_level(3, 2, {1.0, 3.0, 2.0}), X.atoms());
  const WaveletExpansion g = greedy_step(r, 2);
  CHECK(g[g.slot(2, 1, 1)] == 3.0);
  CHECK(g[g.slot(2, 2, 1)] == 2.0);
  CHECK(g[g.slot(2, 0, 1)] == 0.0);
  CHECK(greedy_step(r, 0).nonzero_count() == 0);
  CHECK(greedy_step(r, 3).coefficients() == r.expansion().coefficients());
  CHECK(greedy_step(r, 10).coefficients() == r.expansion().coefficients());
}

TEST_CASE("greedy ranking uses atom-weighted sizes") {
  // density 100 on [0,1/2), 1 on [1/2,1): atom norms 10 and 1 under Power(2)
  const DyadicWeight w(1, 2, 0, {25.0, 25.0, 0.25, 0.25});
  const Ambient X(w, YoungFunction::power(2));
  CHECK(X.atoms().at(1, 0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(X.atoms().at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  WaveletExpansion e(1, 2, 0);
  e[e.slot(1, 0, 1)] = 1.0;
  e[e.slot(1, 1, 1)] = 5.0;
  const RankedExpansion r(e, X.atoms());
  CHECK(r.order().front() == e.slot(1, 0, 1));
  CHECK(r.sizes()[0] == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(r.sizes()[1] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(greedy_step(r, 1)[e.slot(1, 0, 1)] == 1.0);
  CHECK(greedy_step(r, 1)[e.slot(1, 1, 1)] == 0.0);
}

TEST_CASE("ranking ties break by slot and the order is a permutation") {
  Rng rng(11);
  const Ambient X = unit_space(6, YoungFunction::zygmund(2, 1));
  for (int t = 0; t < 20; ++t) {
    WaveletExpansion e = random_expansion(rng, 6, 30);
    // force ties
    for (std::size_t s = 0; s < e.slot_count(); s += 3)
      if (e[s] != 0.0) e[s] = 1.0;
    const RankedExpansion r(e, X.atoms());
    CHECK(r.size() == e.nonzero_count());
    std::vector<std::size_t> sorted = r.order();
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t i = 1; i < r.size(); ++i) {
      CHECK(r.sizes()[i - 1] >= r.sizes()[i]);
      if (r.sizes()[i - 1] == r.sizes()[i]) CHECK(r.order()[i - 1] < r.order()[i]);
    }
    // positive scaling leaves the permutation unchanged
    WaveletExpansion scaled = e;
    for (double& c : scaled.coefficients()) c *= 3.7;
    CHECK(RankedExpansion(scaled, X.atoms()).order() == r.order());
  }
}

TEST_CASE("greedy error in unweighted L2 is the Parseval tail") {
  const Ambient X = unit_space(4, YoungFunction::power(2));
  std::vector<double> c;
  for (int k = 1; k <= 8; ++k) c.push_back(1.0 / k);
  const RankedExpansion r(on_level(4, 3, c), X.atoms());
  double tail = 0.0;
  for (int k = 5; k <= 8; ++k) tail += 1.0 / (k * k);
  CHECK(greedy_error(r, 4, X) == doctest::Approx(std::sqrt(tail)).epsilon(1e-10));
  CHECK(greedy_error(r, 0, X) == doctest::Approx(X.norm(r.expansion())).epsilon(1e-12));
  CHECK(greedy_error(r, 8, X) == 0.0);
  const auto prof = greedy_error_profile(r, {8, 0, 4, 2}, X);
  CHECK(prof[0] == 0.0);
  CHECK(prof[2] == doctest::Approx(std::sqrt(tail)).epsilon(1e-10));
  CHECK(prof[1] == doctest::Approx(X.norm(r.expansion())).epsilon(1e-12));
}

TEST_CASE("scaling term is kept out of the greedy ranking") {
  const Ambient X = unit_space(4, YoungFunction::power(2));
  WaveletExpansion e = on_level(4, 2, {1.0, 2.0});
  e.scaling = 5.0;
  const RankedExpansion r(e, X.atoms());
  CHECK(r.size() == 2);
  CHECK(r.scaling_remainder() == 5.0);
  CHECK(r.expansion().scaling == 0.0);
  CHECK(greedy_error(r, 2, X) == 0.0);
  CHECK(scaling_remainder_norm(r, X) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("sigma oracles agree with thresholding in unweighted L2") {
  Rng rng(5);
  const Ambient X = unit_space(5, YoungFunction::power(2));
  for (int t = 0; t < 4; ++t) {
    const WaveletExpansion e = random_expansion(rng, 5, 8);
    const RankedExpansion r(e, X.atoms());
    const auto ex = sigma_profile(r, 8, X, SigmaMode::exhaustive);
    const auto su = sigma_profile(r, 8, X, SigmaMode::support);
    const auto gr = sigma_profile(r, 8, X, SigmaMode::greedy);
    for (std::size_t N = 0; N <= 8; ++N) {
      const double oracle = parseval_tail(e.coefficients(), N);
      CHECK(ex[N] == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(su[N] == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(gr[N] == doctest::Approx(oracle).epsilon(1e-9));
    }
  }
}

TEST_CASE("support sigma dominates exhaustive sigma") {
  Rng rng(6);
  const Ambient X = unit_space(4, YoungFunction::power(3));
  const RankedExpansion r(random_expansion(rng, 4, 10), X.atoms());
  const auto ex = sigma_profile(r, 9, X, SigmaMode::exhaustive);
  const auto su = sigma_profile(r, 9, X, SigmaMode::support);
  const auto gr = sigma_profile(r, 9, X, SigmaMode::greedy);
  for (std::size_t N = 0; N <= 9; ++N) {
    CHECK(su[N] >= ex[N] * (1.0 - 1e-12));
    CHECK(gr[N] >= su[N] * (1.0 - 1e-12));
    if (N > 0) {
      CHECK(ex[N] <= ex[N - 1]);
      CHECK(su[N] <= su[N - 1]);
    }
  }
  CHECK(sigma_N(r, 3, X, SigmaMode::support) == doctest::Approx(su[3]).epsilon(1e-12));
}

TEST_CASE("exhaustive sigma is capped at 20 terms") {
  Rng rng(7);
  const Ambient X = unit_space(5, YoungFunction::power(2));
  const RankedExpansion r(random_expansion(rng, 5, 21), X.atoms());
  CHECK_THROWS_AS(sigma_profile(r, 3, X, SigmaMode::exhaustive), InvalidArgument);
  CHECK(parse_sigma_mode("support") == SigmaMode::support);
  CHECK_THROWS_AS(parse_sigma_mode("best"), InvalidArgument);
}

TEST_CASE("approximation space norms") {
  const Ambient X = unit_space(6, YoungFunction::power(2));
  // a single atom has vanishing seminorm
  const RankedExpansion one(on_level(6, 3, {2.5}), X.atoms());
  CHECK(approx_space_seminorm(one, 0.5, q_infinity, X, SigmaMode::support) == 0.0);
  CHECK(approx_space_norm(one, 0.5, 1.0, X, SigmaMode::support) ==
        doctest::Approx(2.5).epsilon(1e-12));

  // geometric coefficients: sigma_N^2 = (4^{-N} - 4^{-n}) / 3
  const std::size_t n = 10;
  std::vector<double> c;
  for (std::size_t k = 1; k <= n; ++k) c.push_back(std::ldexp(1.0, -static_cast<int>(k)));
  const RankedExpansion geo(on_level(6, 4, c), X.atoms());
  double expect = 0.0;
  for (std::size_t N = 1; N < n; ++N) {
    const double s2 = (std::pow(4.0, -double(N)) - std::pow(4.0, -double(n))) / 3.0;
    expect = std::max(expect, std::sqrt(N * s2));
  }
  CHECK(approx_space_seminorm(geo, 0.5, q_infinity, X, SigmaMode::support) ==
        doctest::Approx(expect).epsilon(1e-10));

  // monotone in alpha
  double prev = 0.0;
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    const double v = approx_space_norm(geo, a, 1.0, X, SigmaMode::greedy);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("greedy is exact in L2 and near-optimal in weighted Lp") {
  Rng rng(8);
  const Ambient L2 = unit_space(7, YoungFunction::power(2));
  const Ambient Lp(make_weight("power:gamma=0.5", 1, 7, 0), YoungFunction::power(3));
  std::vector<double> ratios;
  for (int t = 0; t < 8; ++t) {
    const WaveletExpansion e = random_expansion(rng, 7, 24);
    const RankedExpansion r2(e, L2.atoms());
    const RankedExpansion rp(e, Lp.atoms());
    for (std::size_t N : {1u, 2u, 4u, 8u, 16u}) {
      CHECK(greedy_error(r2, N, L2) ==
            doctest::Approx(sigma_N(r2, N, L2, SigmaMode::support)).epsilon(1e-9));
      const double s = sigma_N(rp, N, Lp, SigmaMode::support);
      const double g = greedy_error(rp, N, Lp);
      CHECK(g >= s * (1.0 - 1e-12));
      ratios.push_back(g / s);
    }
  }
  CHECK(*std::max_element(ratios.begin(), ratios.end()) < 4.0);
}

TEST_CASE("Jackson constants for power-law families") {
  // |s_k| atom = (k^-g - (k+1)^-g)^{1/p}: the error after N-1 terms is
  // (N^-g - (K+1)^-g)^{1/p}
  const double p = 2.0, beta = 1.5, g = beta * p - 1.0;
  const int J = 10, L = 9;
  const std::size_t K = 512;
  const Ambient X = unit_space(J, YoungFunction::power(p));
  const double atom = X.atoms().at(L, 0);
  std::vector<double> c;
  for (std::size_t k = 1; k <= K; ++k)
    c.push_back(std::pow(std::pow(k, -g) - std::pow(k + 1.0, -g), 1.0 / p) / atom);
  const RankedExpansion r(on_level(J, L, c), X.atoms());
  const auto Ns = dyadic_range(32);
  const ConstantReport rep = jackson_check(r, beta - 1.0 / p, X, Ns);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double oracle = std::pow(std::pow(Ns[i], -g) - std::pow(K + 1.0, -g), 1.0 / p);
    CHECK(rep.value[i] == doctest::Approx(oracle).epsilon(1e-9));
    x.push_back(static_cast<double>(Ns[i]));
    y.push_back(rep.value[i]);
  }
  CHECK(loglog_fit(x, y).slope == doctest::Approx(-(beta - 1.0 / p)).epsilon(0.05));
  CHECK(rep.bounded);

  const RankedExpansion one(on_level(J, 3, {1.0}), X.atoms());
  const ConstantReport single = jackson_check(one, 0.5, X, {1, 2, 4});
  CHECK(single.C[0] > 0.0);
  CHECK(single.C[1] == 0.0);
  CHECK(single.C[2] == 0.0);
}

TEST_CASE("Bernstein ratio of a single atom is one") {
  const Ambient X(make_weight("power:gamma=0.5", 1, 8, 0), YoungFunction::zygmund(2, 1));
  std::vector<RankedExpansion> samples;
  samples.emplace_back(on_level(8, 5, {0.7}), X.atoms());
  const ConstantReport rep = bernstein_check(samples, 0.5, X);
  REQUIRE(rep.C.size() == 1);
  CHECK(rep.C[0] == doctest::Approx(1.0).epsilon(1e-9));
}
