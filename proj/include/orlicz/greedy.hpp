#ifndef ORLICZ_GREEDY_HPP
#define ORLICZ_GREEDY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz/lorentz.hpp"
#include "orlicz/orlicz_norm.hpp"
#include "orlicz/wavelets.hpp"

namespace orlicz {

/// Nonzero wavelet coefficients ranked by |s_Q| ||psi_Q||, largest first, ties
/// by slot index (level, cube index, species). The scaling coefficient is not
/// part of the ranking: greedy approximation acts on the homogeneous part.
class RankedExpansion {
public:
  RankedExpansion(WaveletExpansion e, const AtomNormTable& atoms);

  /// Homogeneous expansion (scaling coefficient set to zero).
  const WaveletExpansion& expansion() const noexcept { return e_; }
  /// Scaling coefficient removed from the original expansion.
  double scaling_remainder() const noexcept { return scaling_; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  /// Atom-weighted sizes in rank order (non-increasing).
  const std::vector<double>& sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return order_.size(); }

private:
  WaveletExpansion e_;
  double scaling_;
  std::vector<std::size_t> order_;
  std::vector<double> sizes_;
};

/// G_N: the top-N ranked terms. N larger than the support gives everything.
WaveletExpansion greedy_step(const RankedExpansion& r, std::size_t N);

/// ||f_h - G_N f_h|| in L^Phi(w), f_h the homogeneous part.
double greedy_error(const RankedExpansion& r, std::size_t N, const Ambient& X);

/// Greedy errors for every N in Ns (any order), by incremental residual
/// updates in rank order.
std::vector<double> greedy_error_profile(const RankedExpansion& r,
                                         const std::vector<std::size_t>& Ns,
                                         const Ambient& X);

/// Norm of the scaling remainder, reported separately from greedy errors.
double scaling_remainder_norm(const RankedExpansion& r, const Ambient& X);

enum class SigmaMode {
  /// all subsets of at most 20 nonzeros, coefficients re-optimized
  exhaustive,
  /// subsets of the support with the original coefficients
  support,
  /// the greedy error itself (an upper bound for sigma_N)
  greedy
};

SigmaMode parse_sigma_mode(const std::string& text);
std::string to_string(SigmaMode m);

inline constexpr std::size_t exhaustive_limit = 20;

/// sigma_0 .. sigma_{n_max}, non-increasing by construction (sigma_N is a
/// minimum over subsets of size at most N).
std::vector<double> sigma_profile(const RankedExpansion& r, std::size_t n_max,
                                  const Ambient& X, SigmaMode mode);

double sigma_N(const RankedExpansion& r, std::size_t N, const Ambient& X, SigmaMode mode);

/// (sum_{N>=1} (N^alpha sigma_N)^q / N)^{1/q}; q = infinity gives the sup.
/// Zero for expansions with at most one term.
double approx_space_seminorm(const RankedExpansion& r, double alpha, double q,
                             const Ambient& X, SigmaMode mode);
/// (||f||^q + seminorm^q)^{1/q}
double approx_space_norm(const RankedExpansion& r, double alpha, double q,
                         const Ambient& X, SigmaMode mode);

/// Same functionals from a precomputed sigma profile (sigma_0 = ||f||).
double approx_seminorm_from_sigma(const std::vector<double>& sigma, double alpha, double q);
double approx_norm_from_sigma(const std::vector<double>& sigma, double alpha, double q);

struct ConstantReport {
  std::vector<std::size_t> N;
  std::vector<double> value;  // raw quantity per N (error or norm)
  std::vector<double> C;      // fitted constant per N
  double reference = 0;       // Marcinkiewicz norm (Jackson) or unused
  double max = 0;
  double median = 0;
  bool bounded = false;  // max <= 3 median, all finite
};

/// C(N) = ||f - G_{N-1} f|| N^alpha / ||f||_{M_{k^alpha h+(k)}} for N in Ns.
ConstantReport jackson_check(const RankedExpansion& r, double alpha, const Ambient& X,
                             const std::vector<std::size_t>& Ns);

/// For samples f in Sigma_N: ||f||_{Lambda_{k^alpha h-(k)}} / (N^alpha ||f||).
/// N is taken as the support size of each sample.
ConstantReport bernstein_check(const std::vector<RankedExpansion>& samples, double alpha,
                               const Ambient& X);

/// Atom-weighted coefficient sizes of the homogeneous part.
CoefSequence atom_weighted(const RankedExpansion& r);

}  // namespace orlicz

#endif
