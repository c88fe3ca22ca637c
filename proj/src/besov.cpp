#include "orlicz/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

double besov_wavelet_norm(const WaveletExpansion& e, double alpha, double p, double q,
                          const DyadicWeight& w) {
  if (!(p > 0.0)) throw InvalidArgument("Besov exponent p must be positive");
  if (!(q > 0.0)) throw InvalidArgument("Besov exponent q must be positive");
  if (e.dim() != w.dim() || e.finest_level() != w.finest_level() ||
      e.domain_levels() != w.domain_levels())
    throw InvalidArgument("expansion and weight grids differ");
  const int d = e.dim(), M = e.domain_levels();
  double total = 0.0;
  for (int sp = 1; sp <= e.species_count(); ++sp) {
    NeumaierSum outer;
    double outer_max = 0.0;
    for (int L = 0; L < e.depth(); ++L) {
      const int j = L - M;
      const double vol = std::ldexp(1.0, -j * d);
      const double pref = std::pow(vol, -alpha / d - 0.5);
      const std::size_t count = std::size_t{1} << (L * d);
      NeumaierSum inner;
      for (std::size_t f = 0; f < count; ++f) {
        const double s = e[e.slot(L, f, sp)];
        if (s == 0.0) continue;
        inner.add(std::pow(pref * std::fabs(s) * std::pow(w.mass_at(L, f), 1.0 / p), p));
      }
      const double level = std::pow(inner.value(), 1.0 / p);
      if (std::isinf(q))
        outer_max = std::max(outer_max, level);
      else
        outer.add(std::pow(level, q));
    }
    total += std::isinf(q) ? outer_max : std::pow(outer.value(), 1.0 / q);
  }
  return total;
}

WeightPowerReport weight_power_check(const DyadicWeight& w, double r, double delta, int levels) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  if (!(r >= 1.0)) throw InvalidArgument("A_r exponent must be at least 1");
  const DyadicWeight u = w.power(delta, w.ap_exponent());
  WeightPowerReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  const int top = std::min(levels, w.depth());
  for (int L = 0; L <= top; ++L) {
    const double vol = std::ldexp(w.cell_volume(), (w.depth() - L) * w.dim());
    for (std::size_t f = 0; f < w.level_masses(L).size(); ++f) {
      const double wq = w.mass_at(L, f) / vol;
      const double uq = u.mass_at(L, f) / vol;
      const double rhs = std::pow(uq, 1.0 / delta);
      // relative slack for the two rounded averages
      if (rhs > wq * (1.0 + 1e-12)) rep.jensen_ok = false;
      if (rhs > 0.0) {
        rep.min_ratio = std::min(rep.min_ratio, wq / rhs);
        rep.max_ratio = std::max(rep.max_ratio, wq / rhs);
      }
      ++rep.cubes;
    }
  }
  if (r > 1.0) {
    rep.ap_u = u.ap_constant(r, w.finest_level() - 1);
  } else {
    // A_1: average over Q against the smallest cell density in Q
    std::vector<double> lowest = u.cell_mass();
    const double cv = w.cell_volume();
    for (double& m : lowest) m /= cv;
    for (int L = w.depth() - 1; L >= 0; --L) {
      const double vol = std::ldexp(cv, (w.depth() - L) * w.dim());
      std::vector<double> next(u.level_masses(L).size());
      for (std::size_t f = 0; f < next.size(); ++f) {
        const DyadicCube q = u.cube_at(L, f);
        double m = std::numeric_limits<double>::infinity();
        for (int c = 0; c < q.child_count(); ++c) m = std::min(m, lowest[u.flat_index(q.child(c))]);
        next[f] = m;
        rep.ap_u = std::max(rep.ap_u, u.mass_at(L, f) / vol / m);
      }
      lowest = std::move(next);
    }
  }
  return rep;
}

IdentificationReport besov_identification_check(const WaveletExpansion& e, double gamma,
                                                const Ambient& X, SigmaMode mode) {
  if (!X.young().is_power()) throw InvalidArgument("identification needs an L^p(w) ambient space");
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  const double p = X.young().power_exponent();
  const int d = e.dim();
  IdentificationReport rep;
  rep.tau = 1.0 / (gamma / d + 1.0 / p);
  const RankedExpansion r(e, X.atoms());
  NeumaierSum a;
  for (double s : r.sizes()) a.add(std::pow(s, rep.tau));
  rep.a = std::pow(a.value(), 1.0 / rep.tau);
  const DyadicWeight u = X.weight().power(rep.tau / p, X.weight().ap_exponent());
  WaveletExpansion h = r.expansion();
  rep.b = besov_wavelet_norm(h, gamma, rep.tau, rep.tau, u);
  rep.c = approx_space_norm(r, gamma / d, rep.tau, X, mode);
  rep.ratio_ab = rep.a / rep.b;
  rep.ratio_ac = rep.a / rep.c;
  rep.ratio_bc = rep.b / rep.c;
  try {
    rep.ap_tau = rep.tau > 1.0 ? u.ap_constant(rep.tau, X.weight().finest_level() - 1)
                               : std::numeric_limits<double>::infinity();
  } catch (const ZeroMass&) {
    rep.ap_tau = std::numeric_limits<double>::infinity();
  }
  rep.ap_warning = !std::isfinite(rep.ap_tau);
  return rep;
}

std::pair<double, double> exponent_collapse_band(const DyadicWeight& w, double gamma, double p) {
  const int d = w.dim();
  const double tau = 1.0 / (gamma / d + 1.0 / p);
  const DyadicWeight u = w.power(tau / p, w.ap_exponent());
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int L = 0; L < w.depth(); ++L) {
    const double vol = std::ldexp(w.cell_volume(), (w.depth() - L) * d);
    for (std::size_t f = 0; f < w.level_masses(L).size(); ++f) {
      const double left = std::pow(vol, -0.5) * std::pow(w.mass_at(L, f), 1.0 / p);
      const double right =
          std::pow(vol, -0.5 - gamma / d) * std::pow(u.mass_at(L, f), 1.0 / tau);
      if (!(right > 0.0)) continue;
      lo = std::min(lo, left / right);
      hi = std::max(hi, left / right);
    }
  }
  return {lo, hi};
}

}  // namespace orlicz
