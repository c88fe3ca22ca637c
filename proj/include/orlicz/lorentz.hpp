#ifndef ORLICZ_LORENTZ_HPP
#define ORLICZ_LORENTZ_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

inline constexpr double q_infinity = std::numeric_limits<double>::infinity();

/// Increasing doubling sequence eta(k), k >= 1.
class EtaWeight {
public:
  enum class Kind { power, alpha_h_plus, alpha_h_minus };

  /// eta(k) = k^exponent
  static EtaWeight power(double exponent);
  /// eta(k) = k^alpha h^+(k)
  static EtaWeight alpha_h_plus(double alpha, ProfilePtr profile);
  /// eta(k) = k^alpha h^-(k)
  static EtaWeight alpha_h_minus(double alpha, ProfilePtr profile);

  double operator()(std::size_t k) const;
  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  /// max over k <= k_max of eta(2k) / eta(k)
  double doubling_constant(std::size_t k_max) const;
  /// True if eta(k) < eta(k+1) for all k < k_max.
  bool increasing(std::size_t k_max) const;

private:
  EtaWeight(Kind k, double a, ProfilePtr p) : kind_(k), a_(a), profile_(std::move(p)) {}
  Kind kind_;
  double a_;
  ProfilePtr profile_;
};

/// Finite nonnegative sequence with its non-increasing rearrangement.
class CoefSequence {
public:
  explicit CoefSequence(std::vector<double> values);
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& rearranged() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return values_.size(); }

private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

/// [sum_k (eta(k) s*_k)^q / k]^{1/q}; q = infinity gives sup_k eta(k) s*_k.
double lorentz_norm(const CoefSequence& s, const EtaWeight& eta, double q);

/// Largest observed ||s + t|| / (||s||^r + ||t||^r)^{1/r} over random pairs,
/// for a given r in (0, 1]. A value <= 1 means the r-triangle inequality held
/// on every sample.
double quasi_triangle_ratio(const EtaWeight& eta, double q, double r, std::size_t length,
                            std::size_t trials, std::uint64_t seed);

}  // namespace orlicz

#endif
