#ifndef ORLICZ_ORLICZ_NORM_HPP
#define ORLICZ_ORLICZ_NORM_HPP

#include <cstddef>
#include <vector>

#include "orlicz/wavelets.hpp"
#include "orlicz/weights.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Tolerance on |G(lambda) - 1| for the Luxemburg solver.
inline constexpr double modular_tolerance = 1e-10;

/// G(lambda) = sum Phi(|v_i| / lambda) m_i with compensated summation.
double modular(const std::vector<double>& values, const std::vector<double>& masses,
               const YoungFunction& F, double lambda);

/// inf{lambda > 0 : G(lambda) <= 1} for paired cell values and masses.
double luxemburg_norm(const std::vector<double>& values,
                      const std::vector<double>& masses, const YoungFunction& F);

double luxemburg_norm(const GridFunction& f, const DyadicWeight& w, const YoungFunction& F);

/// phi(w(E)) for a set of cells; E must have positive mass.
double indicator_norm(const DyadicWeight& w, const YoungFunction& F,
                      const std::vector<std::size_t>& cells);

/// The space L^Phi(w) on a fixed grid with its cached atom norms and
/// fundamental profile.
class Ambient {
public:
  Ambient(DyadicWeight w, YoungFunction F, ProfilePtr profile = nullptr);

  const DyadicWeight& weight() const noexcept { return w_; }
  const YoungFunction& young() const noexcept { return F_; }
  const FundamentalProfile& profile() const noexcept { return *profile_; }
  ProfilePtr profile_ptr() const noexcept { return profile_; }
  const AtomNormTable& atoms() const noexcept { return atoms_; }

  double norm(const std::vector<double>& cells) const;
  double norm(const GridFunction& f) const;
  /// Norm of the synthesized expansion, scaling term included as stored.
  double norm(const WaveletExpansion& e) const;

private:
  DyadicWeight w_;
  YoungFunction F_;
  ProfilePtr profile_;
  AtomNormTable atoms_;
};

}  // namespace orlicz

#endif
