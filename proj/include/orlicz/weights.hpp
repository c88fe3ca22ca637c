#ifndef ORLICZ_WEIGHTS_HPP
#define ORLICZ_WEIGHTS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orlicz {

/// The cube 2^{-level}([0,1)^d + k). For d = 1 only k[0] is used.
struct DyadicCube {
  int dim = 1;
  int level = 0;
  std::array<std::int64_t, 2> k{0, 0};

  /// |Q| = 2^{-level*dim}
  double volume() const;
  double side() const;
  DyadicCube parent() const;
  /// Children in row-major order of (bit0, bit1).
  DyadicCube child(int c) const;
  int child_count() const { return 1 << dim; }
  /// True if `other` is contained in this cube (equality included).
  bool contains(const DyadicCube& other) const;
  bool disjoint(const DyadicCube& other) const;

  auto operator<=>(const DyadicCube&) const = default;
};

std::string to_string(const DyadicCube& q);

/// Fitted constants of the two-sided nested-cube inequality
///   c1 (|A|/|Q|)^p_hat <= w(A)/w(Q) <= c2 (|A|/|Q|)^delta_hat.
struct Regularity {
  double p_hat = 0;
  double delta_hat = 0;
  double c1 = 0;
  double c2 = 1;
  /// Lower constant for crossing cubes: c1 2^{-d p_hat}.
  double c_hat = 0;
};

struct TowerEntry {
  int level;
  double mass;
};

struct TowerReport {
  std::vector<TowerEntry> ascent;   // base first, root last
  std::vector<TowerEntry> descent;  // base first, finest last
  bool growth_ok = true;
};

/// Piecewise-constant weight on the grid of cells of side 2^{-J} covering
/// [0, 2^M)^d. Masses of all dyadic cubes are stored per level.
class DyadicWeight {
public:
  DyadicWeight(int dim, int finest_level, int domain_levels,
               std::vector<double> cell_mass, double ap_exponent = 2.0);

  int dim() const noexcept { return d_; }
  int finest_level() const noexcept { return J_; }
  int domain_levels() const noexcept { return M_; }
  /// Number of dyadic levels below the root: J + M.
  int depth() const noexcept { return J_ + M_; }
  std::size_t cells_per_axis() const noexcept { return std::size_t{1} << depth(); }
  std::size_t cell_count() const noexcept { return cell_mass().size(); }
  double cell_volume() const;
  double ap_exponent() const noexcept { return ap_; }

  const std::vector<double>& cell_mass() const noexcept { return pyramid_.back(); }
  /// Masses of all cubes at internal level L = level + M, row-major.
  const std::vector<double>& level_masses(int L) const { return pyramid_.at(L); }
  double mass_at(int L, std::size_t flat) const { return pyramid_[L][flat]; }
  double mass(const DyadicCube& q) const;
  double total_mass() const noexcept { return pyramid_[0][0]; }
  double min_cell_mass() const noexcept { return min_cell_; }

  bool in_domain(const DyadicCube& q) const noexcept;
  /// Row-major index of q among cubes of its level. Throws outside the domain.
  std::size_t flat_index(const DyadicCube& q) const;
  DyadicCube cube_at(int L, std::size_t flat) const;
  DyadicCube root() const { return cube_at(0, 0); }

  const Regularity& regularity() const noexcept { return reg_; }

  /// Dyadic A_p characteristic maximized over levels -M..max_level.
  double ap_constant(double p, int max_level) const;

  TowerReport tower_limits(const DyadicCube& base) const;

  /// N pairwise-disjoint cubes with c_hat tau < w(R) <= tau, taken from
  /// internal levels 1..max_L (default: down to single cells).
  std::vector<DyadicCube> select_disjoint_cubes(double tau, std::size_t N,
                                                int max_L = -1) const;

  /// Weight with cellwise density raised to `exponent`.
  DyadicWeight power(double exponent, double ap_exponent) const;

private:
  void fit_regularity();

  int d_, J_, M_;
  double ap_;
  std::vector<std::vector<double>> pyramid_;
  double min_cell_ = 0;
  Regularity reg_;
};

/// "const[:value=..]", "power:gamma=..,center=..", "product:gx=..,gy=..,cx=..,cy=..",
/// "file:<path>"; all accept ap=.. for the declared A_p exponent.
DyadicWeight make_weight(const std::string& spec, int dim, int finest_level,
                         int domain_levels);

struct GridFile {
  int dim = 1;
  int finest_level = 0;
  int domain_levels = 0;
  std::vector<double> values;
};

/// Header "d J M" followed by 2^{(J+M)d} whitespace separated values.
GridFile read_grid_file(const std::string& path);
void write_grid_file(const std::string& path, const GridFile& g);

}  // namespace orlicz

#endif
