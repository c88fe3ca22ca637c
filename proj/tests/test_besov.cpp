#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "orlicz/besov.hpp"
#include "orlicz/error.hpp"
#include "orlicz/random.hpp"

using namespace orlicz;

namespace {

WaveletExpansion random_expansion(Rng& rng, int d, int J, int M, double density) {
  WaveletExpansion e(d, J, M);
  for (double& c : e.coefficients())
    if (rng.uniform() < density) c = rng.uniform(-2.0, 2.0);
  return e;
}

// Level sums accumulated cube by cube through the geometric cube of each slot.
double besov_oracle(const WaveletExpansion& e, double alpha, double p, double q,
                    const DyadicWeight& w) {
  std::map<std::pair<int, int>, double> level_sum;  // (species, level) -> sum
  for (std::size_t s = 0; s < e.slot_count(); ++s) {
    const DyadicCube Q = e.cube(s);
    const int sp = e.info(s).species;
    level_sum[{sp, Q.level}] += std::pow(
        std::pow(Q.volume(), -alpha / e.dim() - 0.5) * std::fabs(e[s]) * std::pow(w.mass(Q), 1.0 / p),
        p);
  }
  std::map<int, double> per_species;
  for (const auto& [key, v] : level_sum) {
    const double level = std::pow(v, 1.0 / p);
    if (std::isinf(q))
      per_species[key.first] = std::max(per_species[key.first], level);
    else
      per_species[key.first] += std::pow(level, q);
  }
  double total = 0.0;
  for (const auto& [sp, v] : per_species) total += std::isinf(q) ? v : std::pow(v, 1.0 / q);
  return total;
}

}  // namespace

TEST_CASE("Besov norm examples") {
  Rng rng(31);
  const DyadicWeight one = make_weight("const", 1, 7, 0);
  const WaveletExpansion e = random_expansion(rng, 1, 7, 0, 0.5);
  double l2 = 0.0;
  for (double c : e.coefficients()) l2 += c * c;
  CHECK(besov_wavelet_norm(e, 0.0, 2.0, 2.0, one) == doctest::Approx(std::sqrt(l2)).epsilon(1e-12));
  GridFunction f = synthesize(e);
  CHECK(luxemburg_norm(f, one, YoungFunction::power(2)) ==
        doctest::Approx(std::sqrt(l2)).epsilon(1e-10));

  // one atom at level j = 3 (d = 1, M = 1 so the internal level is 4)
  const DyadicWeight w = make_weight("power:gamma=0.5", 1, 8, 1);
  WaveletExpansion a(1, 8, 1);
  a[a.slot(4, 5, 1)] = -0.7;
  const double alpha = 0.3, p = 1.7;
  const double expect = std::pow(2.0, 3 * (alpha + 0.5)) * 0.7 * std::pow(w.mass_at(4, 5), 1.0 / p);
  CHECK(besov_wavelet_norm(a, alpha, p, 1.0, w) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(besov_wavelet_norm(a, alpha, p, q_infinity, w) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("Besov norm matches a cube-by-cube oracle") {
  Rng rng(32);
  for (int d : {1, 2}) {
    const int J = d == 1 ? 8 : 4;
    const DyadicWeight w = make_weight("power:gamma=0.5", d, J, 1);
    for (int t = 0; t < 6; ++t) {
      const WaveletExpansion e = random_expansion(rng, d, J, 1, 0.3);
      const double alpha = rng.uniform(0.0, 1.5), p = rng.uniform(1.0, 3.0);
      for (double q : {0.7, 2.0, q_infinity})
        CHECK(besov_wavelet_norm(e, alpha, p, q, w) ==
              doctest::Approx(besov_oracle(e, alpha, p, q, w)).epsilon(1e-11));
    }
  }
}

TEST_CASE("weight power comparison") {
  const WeightPowerReport flat = weight_power_check(make_weight("const", 1, 8, 0), 2.0, 0.5, 8);
  CHECK(flat.min_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.jensen_ok);

  std::vector<double> hi;
  for (int J : {8, 10, 12}) {
    const WeightPowerReport r =
        weight_power_check(make_weight("power:gamma=0.5", 1, J, 0), 2.0, 0.5, J);
    CHECK(r.jensen_ok);
    CHECK(r.min_ratio >= 1.0 - 1e-12);
    CHECK(std::isfinite(r.ap_u));
    hi.push_back(r.max_ratio);
  }
  CHECK(hi[2] / hi[0] < 1.2);
  const WeightPowerReport a1 = weight_power_check(make_weight("power:gamma=0.5", 1, 8, 0), 1.0, 0.5, 8);
  CHECK(std::isfinite(a1.ap_u));
  CHECK(a1.ap_u >= 1.0);
  CHECK_THROWS_AS(weight_power_check(make_weight("const", 1, 4, 0), 2.0, 1.5, 4), InvalidArgument);
}

TEST_CASE("identification collapses for the flat weight") {
  Rng rng(33);
  const Ambient X(make_weight("const", 1, 8, 0), YoungFunction::power(2));
  for (int t = 0; t < 5; ++t) {
    const WaveletExpansion e = random_expansion(rng, 1, 8, 0, 0.2);
    const IdentificationReport r = besov_identification_check(e, 0.5, X);
    CHECK(r.tau == 1.0);
    CHECK(r.a == doctest::Approx(r.b).epsilon(1e-12));
  }
  const auto band = exponent_collapse_band(X.weight(), 0.5, 2.0);
  CHECK(band.first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(band.second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identification norms of a single atom and homogeneity") {
  const Ambient X(make_weight("power:gamma=0.5", 1, 9, 0), YoungFunction::power(2));
  WaveletExpansion one(1, 9, 0);
  one[one.slot(5, 7, 1)] = 1.5;
  const IdentificationReport r = besov_identification_check(one, 0.25, X);
  CHECK(r.a == doctest::Approx(r.c).epsilon(1e-9));
  const auto band = exponent_collapse_band(X.weight(), 0.25, 2.0);
  CHECK(r.ratio_ab >= band.first * (1 - 1e-12));
  CHECK(r.ratio_ab <= band.second * (1 + 1e-12));

  Rng rng(34);
  const WaveletExpansion e = random_expansion(rng, 1, 9, 0, 0.05);
  WaveletExpansion e3 = e;
  for (double& c : e3.coefficients()) c *= -3.0;
  const IdentificationReport base = besov_identification_check(e, 0.25, X);
  const IdentificationReport scaled = besov_identification_check(e3, 0.25, X);
  CHECK(scaled.a == doctest::Approx(3.0 * base.a).epsilon(1e-12));
  CHECK(scaled.b == doctest::Approx(3.0 * base.b).epsilon(1e-12));
  CHECK(scaled.c == doctest::Approx(3.0 * base.c).epsilon(1e-9));
  CHECK_THROWS_AS(besov_identification_check(e, 0.25, Ambient(X.weight(), YoungFunction::zygmund(2, 1))),
                  InvalidArgument);
}
