#include "orlicz/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

EmbeddingReport embedding_check(const RankedExpansion& r, double alpha, double q,
                                const Ambient& X, SigmaMode mode) {
  const CoefSequence s = atom_weighted(r);
  EmbeddingReport rep;
  rep.left = lorentz_norm(s, EtaWeight::alpha_h_plus(alpha, X.profile_ptr()), q);
  rep.middle = approx_space_norm(r, alpha, q, X, mode);
  rep.right = lorentz_norm(s, EtaWeight::alpha_h_minus(alpha, X.profile_ptr()), q);
  return rep;
}

WaveletExpansion brick_expansion(const std::vector<DyadicCube>& cubes, const Ambient& X) {
  const DyadicWeight& w = X.weight();
  WaveletExpansion e(w.dim(), w.finest_level(), w.domain_levels());
  for (const DyadicCube& q : cubes) {
    if (q.dim != w.dim() || !w.in_domain(q)) throw InvalidArgument("cube outside the grid: " + to_string(q));
    const int L = q.level + w.domain_levels();
    if (L >= w.depth()) throw InvalidArgument("cube on the finest level carries no wavelet: " + to_string(q));
    const std::size_t flat = w.flat_index(q);
    const double a = X.atoms().at(L, flat);
    if (!(a > 0.0)) throw ZeroMass("brick cube has zero mass: " + to_string(q), flat);
    e[e.slot(q, 1)] += 1.0 / a;
  }
  return e;
}

std::vector<double> admissible_taus(const Ambient& X, std::size_t count) {
  const DyadicWeight& w = X.weight();
  if (count == 0) throw InvalidArgument("tau grid needs count >= 1");
  const int top = w.depth() - 1;
  double lo = std::numeric_limits<double>::infinity();
  for (double m : w.level_masses(top))
    if (m > 0.0) lo = std::min(lo, m);
  const double hi = std::min(w.total_mass() * (1.0 - 1e-12),
                             w.total_mass() / static_cast<double>(count));
  std::vector<double> out;
  if (!(lo < hi)) return out;
  constexpr int grid = 32;
  for (int i = 0; i < grid; ++i) {
    const double tau = lo * std::pow(hi / lo, static_cast<double>(i) / (grid - 1));
    try {
      (void)w.select_disjoint_cubes(tau, count, top);
    } catch (const DomainExhausted&) {
      continue;
    } catch (const TauOutOfRange&) {
      continue;
    }
    out.push_back(tau);
  }
  return out;
}

double extremal_tau(const Ambient& X, std::size_t N, std::size_t count, bool maximize) {
  if (N == 0) throw InvalidArgument("extremal tau needs N >= 1");
  const std::vector<double> taus = admissible_taus(X, count);
  if (taus.empty())
    throw DomainExhausted("no tau admits " + std::to_string(count) + " disjoint cubes", 0);
  double best_tau = taus.front();
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  const double Nd = static_cast<double>(N);
  for (double tau : taus) {
    const double v = X.profile().phi(Nd * tau) / X.profile().phi(tau);
    if (maximize ? v > best : v < best) {
      best = v;
      best_tau = tau;
    }
  }
  return best_tau;
}

OptimalityReport optimality_witness(const Ambient& X, double alpha, double q, std::size_t N,
                                    SigmaMode mode) {
  if (N == 0) throw InvalidArgument("optimality witness needs N >= 1");
  const DyadicWeight& w = X.weight();
  const int top = w.depth() - 1;
  OptimalityReport rep;
  rep.N = N;
  rep.h_plus = X.profile().h_plus_n(N);
  rep.h_minus = X.profile().h_minus_n(N);

  rep.tau_plus = extremal_tau(X, N, 2 * N, true);
  const RankedExpansion big(brick_expansion(w.select_disjoint_cubes(rep.tau_plus, 2 * N, top), X),
                            X.atoms());
  const auto sigma = sigma_profile(big, big.size() - 1, X, mode);
  rep.sigma_N = sigma[N];
  rep.approx_norm = approx_norm_from_sigma(sigma, alpha, q);
  double scale;
  if (std::isinf(q)) {
    scale = std::pow(static_cast<double>(2 * N), alpha);
  } else {
    NeumaierSum s;
    for (std::size_t k = 1; k <= 2 * N; ++k) s.add(std::pow(static_cast<double>(k), alpha * q - 1.0));
    scale = std::pow(s.value(), 1.0 / q);
  }
  rep.implied_lower = rep.approx_norm / scale;
  const CoefSequence sb = atom_weighted(big);
  rep.chain_plus.left = lorentz_norm(sb, EtaWeight::alpha_h_plus(alpha, X.profile_ptr()), q);
  rep.chain_plus.middle = rep.approx_norm;
  rep.chain_plus.right = lorentz_norm(sb, EtaWeight::alpha_h_minus(alpha, X.profile_ptr()), q);

  rep.tau_minus = extremal_tau(X, N, N, false);
  const RankedExpansion small(brick_expansion(w.select_disjoint_cubes(rep.tau_minus, N, top), X),
                              X.atoms());
  rep.brick_norm = X.norm(small.expansion());
  rep.implied_upper = rep.brick_norm;
  rep.chain_minus = embedding_check(small, alpha, q, X, mode);
  return rep;
}

}  // namespace orlicz
