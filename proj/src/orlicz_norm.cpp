#include "orlicz/orlicz_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

struct Level {
  double value;
  double mass;
};

// Nonzero (|v|, m) pairs, sorted by value with equal values merged.
std::vector<Level> collect(const std::vector<double>& values,
                           const std::vector<double>& masses) {
  if (values.size() != masses.size())
    throw InvalidArgument("values and masses differ in length");
  std::vector<Level> lv;
  lv.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::fabs(values[i]);
    if (!std::isfinite(v)) throw InvalidArgument("non-finite function value");
    if (v > 0.0 && masses[i] > 0.0) lv.push_back({v, masses[i]});
  }
  std::sort(lv.begin(), lv.end(),
            [](const Level& a, const Level& b) { return a.value < b.value; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (out > 0 && lv[out - 1].value == lv[i].value)
      lv[out - 1].mass += lv[i].mass;
    else
      lv[out++] = lv[i];
  }
  lv.resize(out);
  return lv;
}

double modular_of(const std::vector<Level>& lv, const YoungFunction& F, double lambda) {
  NeumaierSum s;
  for (const Level& l : lv) s.add(F(l.value / lambda) * l.mass);
  return s.value();
}

}  // namespace

double modular(const std::vector<double>& values, const std::vector<double>& masses,
               const YoungFunction& F, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("modular needs lambda > 0");
  return modular_of(collect(values, masses), F, lambda);
}

double luxemburg_norm(const std::vector<double>& values,
                      const std::vector<double>& masses, const YoungFunction& F) {
  const std::vector<Level> lv = collect(values, masses);
  if (lv.empty()) return 0.0;

  // log G as a function of u = log lambda. For Power the sum factors out.
  std::function<double(double)> logG;
  double power_sum = 0.0;
  if (F.is_power()) {
    const double p = F.power_exponent();
    NeumaierSum s;
    for (const Level& l : lv) s.add(std::pow(l.value, p) * l.mass);
    power_sum = s.value();
    logG = [p, ls = std::log(power_sum)](double u) { return ls - p * u; };
  } else {
    logG = [&](double u) { return std::log(modular_of(lv, F, std::exp(u))); };
  }

  // G(lo) >= 1 from the single term of each level; G(hi) <= 1 since the
  // function is dominated by max|f| on its support.
  NeumaierSum support;
  double lo = 0.0;
  for (const Level& l : lv) {
    support.add(l.mass);
    lo = std::max(lo, l.value * F.fundamental(l.mass));
  }
  const double hi = lv.back().value * F.fundamental(support.value());
  double a = std::log(lo), b = std::log(std::max(hi, lo));
  double fa = logG(a), fb = logG(b);
  auto done = [](double f) { return std::fabs(std::expm1(f)) <= modular_tolerance; };
  if (done(fa)) return std::exp(a);
  if (done(fb)) return std::exp(b);
  if (fa < 0.0 || fb > 0.0) {
    // round-off at the bracket ends; widen geometrically
    for (int i = 0; fa < 0.0 && i < 200; ++i) fa = logG(a -= 1.0);
    for (int i = 0; fb > 0.0 && i < 200; ++i) fb = logG(b += 1.0);
    if (fa < 0.0 || fb > 0.0) throw NonConvergence("Luxemburg norm: cannot bracket");
  }
  // Illinois regula falsi with a bisection fallback
  int side = 0;
  for (int it = 0; it < 300; ++it) {
    double c = b - fb * (b - a) / (fb - fa);
    if (!(c > std::min(a, b) && c < std::max(a, b)) || !std::isfinite(c))
      c = 0.5 * (a + b);
    const double fc = logG(c);
    if (done(fc)) return std::exp(c);
    if ((fc > 0.0) == (fa > 0.0)) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
    if (std::fabs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                std::max(1.0, std::fabs(c)))
      return std::exp(c);
  }
  throw NonConvergence("Luxemburg norm: iteration cap reached");
}

double luxemburg_norm(const GridFunction& f, const DyadicWeight& w, const YoungFunction& F) {
  if (!f.compatible(w)) throw InvalidArgument("function and weight grids differ");
  return luxemburg_norm(f.values(), w.cell_mass(), F);
}

double indicator_norm(const DyadicWeight& w, const YoungFunction& F,
                      const std::vector<std::size_t>& cells) {
  if (cells.empty()) throw InvalidArgument("indicator of an empty set");
  NeumaierSum s;
  for (std::size_t c : cells) {
    if (c >= w.cell_count()) throw InvalidArgument("cell index out of range");
    s.add(w.cell_mass()[c]);
  }
  if (!(s.value() > 0.0)) throw InvalidArgument("indicator set has zero mass");
  return F.fundamental(s.value());
}

Ambient::Ambient(DyadicWeight w, YoungFunction F, ProfilePtr profile)
    : w_(std::move(w)),
      F_(std::move(F)),
      profile_(profile ? std::move(profile) : FundamentalProfile::make(F_)),
      atoms_(w_, F_) {}

double Ambient::norm(const std::vector<double>& cells) const {
  return luxemburg_norm(cells, w_.cell_mass(), F_);
}

double Ambient::norm(const GridFunction& f) const { return luxemburg_norm(f, w_, F_); }

double Ambient::norm(const WaveletExpansion& e) const {
  return norm(synthesize(e).values());
}

}  // namespace orlicz
