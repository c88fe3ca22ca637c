#ifndef ORLICZ_BESOV_HPP
#define ORLICZ_BESOV_HPP

#include <cstddef>
#include <vector>

#include "orlicz/greedy.hpp"
#include "orlicz/wavelets.hpp"
#include "orlicz/weights.hpp"

namespace orlicz {

/// sum over species of
///   [sum_j (sum_{|Q| = 2^{-jd}} (|Q|^{-alpha/d - 1/2} |s_Q| w(Q)^{1/p})^p)^{q/p}]^{1/q}
/// with q = infinity taking the max over levels.
double besov_wavelet_norm(const WaveletExpansion& e, double alpha, double p, double q,
                          const DyadicWeight& w);

struct WeightPowerReport {
  double min_ratio = 0;    // min over Q of w_Q / (u_Q)^{1/delta}
  double max_ratio = 0;
  bool jensen_ok = true;   // (u_Q)^{1/delta} <= w_Q on every cube
  std::size_t cubes = 0;
  double ap_u = 0;         // A_r constant of u = w^delta
};

/// Compares w_Q with (u_Q)^{1/delta}, u = w^delta cellwise, over all cubes of
/// internal levels 0..levels (clamped to the grid).
WeightPowerReport weight_power_check(const DyadicWeight& w, double r, double delta, int levels);

struct IdentificationReport {
  double tau = 0;
  double a = 0;  // l^tau of atom-weighted coefficients in L^p(w)
  double b = 0;  // Besov norm, alpha = gamma, p = q = tau, weight w^{tau/p}
  double c = 0;  // A^{gamma/d}_tau norm
  double ratio_ab = 0, ratio_ac = 0, ratio_bc = 0;
  double ap_tau = 0;      // A_tau constant of w^{tau/p}
  bool ap_warning = false;  // constant not finite
};

/// 1/tau = gamma/d + 1/p. The ambient space must be L^p(w) (Power(p)).
IdentificationReport besov_identification_check(const WaveletExpansion& e, double gamma,
                                                const Ambient& X,
                                                SigmaMode mode = SigmaMode::greedy);

/// Per-cube ratio |Q|^{-1/2} w(Q)^{1/p} / (|Q|^{-1/2-gamma/d} u(Q)^{1/tau}),
/// u = w^{tau/p}; min and max over wavelet cubes.
std::pair<double, double> exponent_collapse_band(const DyadicWeight& w, double gamma, double p);

}  // namespace orlicz

#endif
