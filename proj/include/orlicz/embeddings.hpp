#ifndef ORLICZ_EMBEDDINGS_HPP
#define ORLICZ_EMBEDDINGS_HPP

#include <cstddef>
#include <vector>

#include "orlicz/greedy.hpp"
#include "orlicz/lorentz.hpp"

namespace orlicz {

/// The three norms of the embedding chain
///   Lambda^q_{k^a h+} -> A^a_q -> Lambda^q_{k^a h-}.
struct EmbeddingReport {
  double left = 0;    // ||f||_{Lambda^q_{k^alpha h+(k)}}
  double middle = 0;  // ||f||_{A^alpha_q}, full norm
  double right = 0;   // ||f||_{Lambda^q_{k^alpha h-(k)}}
};

EmbeddingReport embedding_check(const RankedExpansion& r, double alpha, double q,
                                const Ambient& X, SigmaMode mode);

/// Normalized brick 1~_Gamma = sum psi_Q / ||psi_Q|| over the given cubes
/// (species 1).
WaveletExpansion brick_expansion(const std::vector<DyadicCube>& cubes, const Ambient& X);

/// Points of the 32-point log grid over the mass range of the finest wavelet
/// level at which `count` disjoint cubes can be selected.
std::vector<double> admissible_taus(const Ambient& X, std::size_t count);

/// tau on a 32-point log grid over the reachable mass range that maximizes
/// (or minimizes) phi(N tau) / phi(tau) subject to `count` disjoint cubes
/// being available at that tau.
double extremal_tau(const Ambient& X, std::size_t N, std::size_t count, bool maximize);

struct OptimalityReport {
  std::size_t N = 0;
  double tau_plus = 0, tau_minus = 0;
  double h_plus = 0, h_minus = 0;
  double sigma_N = 0;         // sigma_N of the 2N-cube witness
  double approx_norm = 0;     // ||1~_Gamma||_{A^alpha_q}, 2N-cube witness
  double implied_lower = 0;   // eta(N) must dominate this (up to constants)
  double brick_norm = 0;      // ||1~_Gamma||, N-cube witness at tau_minus
  double implied_upper = 0;   // eta(N) must stay below this
  EmbeddingReport chain_plus;   // three norms of the 2N-cube witness
  EmbeddingReport chain_minus;  // three norms of the N-cube witness
};

OptimalityReport optimality_witness(const Ambient& X, double alpha, double q, std::size_t N,
                                    SigmaMode mode);

}  // namespace orlicz

#endif
