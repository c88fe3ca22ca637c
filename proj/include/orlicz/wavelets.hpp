#ifndef ORLICZ_WAVELETS_HPP
#define ORLICZ_WAVELETS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz/weights.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Piecewise-constant function on the cells of side 2^{-J} covering [0,2^M)^d.
class GridFunction {
public:
  GridFunction(int dim, int finest_level, int domain_levels, std::vector<double> values);
  static GridFunction zeros(int dim, int finest_level, int domain_levels);

  int dim() const noexcept { return d_; }
  int finest_level() const noexcept { return J_; }
  int domain_levels() const noexcept { return M_; }
  int depth() const noexcept { return J_ + M_; }
  std::size_t cell_count() const noexcept { return v_.size(); }
  double cell_volume() const;

  const std::vector<double>& values() const noexcept { return v_; }
  std::vector<double>& values() noexcept { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }

  bool compatible(const DyadicWeight& w) const noexcept;

private:
  int d_, J_, M_;
  std::vector<double> v_;
};

/// "random:seed=..", "bump[:center=..,radius=..]", "sawtooth[:teeth=..]",
/// "file:<path>"
GridFunction make_function(const std::string& spec, int dim, int finest_level,
                           int domain_levels);

/// Filter order 1 is Haar; 2..4 are the periodized Daubechies filters with
/// that many vanishing moments.
struct WaveletFamily {
  int order = 1;
  bool is_haar() const noexcept { return order == 1; }
  std::string name() const;
  static WaveletFamily parse(const std::string& text);
};

struct SlotInfo {
  int L;             // internal level: cube level + M
  std::size_t flat;  // row-major cube index at that level
  int species;       // 1 .. 2^d - 1
};

/// Wavelet coefficients for all cubes of levels -M .. J-1 plus the single
/// scaling coefficient of the root cube. Slots are ordered by level, then
/// cube index, then species.
class WaveletExpansion {
public:
  WaveletExpansion(int dim, int finest_level, int domain_levels,
                   WaveletFamily family = {});

  int dim() const noexcept { return d_; }
  int finest_level() const noexcept { return J_; }
  int domain_levels() const noexcept { return M_; }
  int depth() const noexcept { return J_ + M_; }
  int species_count() const noexcept { return (1 << d_) - 1; }
  const WaveletFamily& family() const noexcept { return family_; }

  std::size_t slot_count() const noexcept { return c_.size(); }
  std::size_t level_offset(int L) const { return offset_.at(L); }
  std::size_t slot(int L, std::size_t flat, int species) const;
  std::size_t slot(const DyadicCube& q, int species) const;
  SlotInfo info(std::size_t slot) const;
  DyadicCube cube(std::size_t slot) const;

  std::vector<double>& coefficients() noexcept { return c_; }
  const std::vector<double>& coefficients() const noexcept { return c_; }
  double& operator[](std::size_t s) { return c_[s]; }
  double operator[](std::size_t s) const { return c_[s]; }
  double scaling = 0.0;

  std::size_t nonzero_count() const;

private:
  int d_, J_, M_;
  WaveletFamily family_;
  std::vector<std::size_t> offset_;
  std::vector<double> c_;
};

WaveletExpansion analyze(const GridFunction& f, WaveletFamily family = {});
GridFunction synthesize(const WaveletExpansion& e);

/// (sum over Q containing the cell, species: s^2 / |Q|)^{1/2}
double square_function(const WaveletExpansion& e, std::size_t cell,
                       bool include_scaling = false);
std::vector<double> square_function_all(const WaveletExpansion& e,
                                        bool include_scaling = false);

/// phi(w(Q)) / |Q|^{1/2}; for Haar this is the exact Luxemburg norm.
double atom_norm(const DyadicWeight& w, const YoungFunction& F, const DyadicCube& q);

/// Atom norms of every cube on the wavelet levels. Zero-mass cubes get 0.
class AtomNormTable {
public:
  AtomNormTable(const DyadicWeight& w, const YoungFunction& F);
  double at(int L, std::size_t flat) const { return norms_[L][flat]; }
  double for_slot(const WaveletExpansion& e, std::size_t slot) const;
  int dim() const noexcept { return d_; }

private:
  int d_;
  std::vector<std::vector<double>> norms_;
};

/// Adds c * psi_{Q,species} (Haar) to the cell values of a grid of the given
/// shape.
void add_haar_atom(std::vector<double>& cells, int dim, int finest_level,
                   int domain_levels, int L, std::size_t flat, int species,
                   double c);

}  // namespace orlicz

#endif
