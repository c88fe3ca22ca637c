#ifndef ORLICZ_DEMOCRACY_HPP
#define ORLICZ_DEMOCRACY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/orlicz_norm.hpp"
#include "orlicz/weights.hpp"

namespace orlicz {

/// Finite set of distinct dyadic cubes on the wavelet levels of a grid, with
/// the shade/light decomposition computed by cell counting.
class CubeFamily {
public:
  CubeFamily(std::vector<DyadicCube> cubes, const DyadicWeight& w);

  const std::vector<DyadicCube>& cubes() const noexcept { return cubes_; }
  std::size_t size() const noexcept { return cubes_.size(); }

  /// Index into cubes() of the smallest member containing the cell, or -1.
  long smallest_containing(std::size_t cell) const { return owner_[cell]; }
  /// Cells of Light(Q), ascending.
  const std::vector<std::size_t>& light_cells(std::size_t i) const { return light_[i]; }
  /// |Shade(Q)| / |Q|
  double shade_fraction(std::size_t i) const;

  /// Members with nonempty light, i.e. Q = Q_x for some x.
  std::vector<std::size_t> minimal() const;
  /// Members with |Light(Q)| >= 2^{-d} |Q|.
  std::vector<std::size_t> lighted() const;
  /// Members with |Shade(Q)| > (2^d - 1) 2^{-d} |Q|.
  std::vector<std::size_t> shaded() const;

  /// Cells covered by the union of the family.
  std::size_t union_cells() const noexcept { return covered_; }
  /// Number of cells in member i.
  std::size_t cube_cells(std::size_t i) const noexcept { return size_cells_[i]; }

private:
  int d_;
  std::vector<DyadicCube> cubes_;
  std::vector<long> owner_;
  std::vector<std::vector<std::size_t>> light_;
  std::vector<std::size_t> size_cells_;
  std::size_t covered_ = 0;
};

struct BrickNorm {
  double norm = 0;       // ||sum psi_Q / ||psi_Q|| ||
  double surrogate = 0;  // ||(sum chi_Q / phi(w(Q))^2)^{1/2}||
};

BrickNorm brick_norm(const CubeFamily& G, const Ambient& X);

/// Square function (sum_{Q containing x} 1/phi(w(Q))^2)^{1/2} on every cell.
std::vector<double> square_surrogate(const CubeFamily& G, const Ambient& X);

/// chi_{Q_x}(x) / phi(w(Q_x)) at a cell; zero outside the union.
double linearized_square(const CubeFamily& G, const Ambient& X, std::size_t cell);

/// sum_{Q in Gamma_min} Phi(1 / (lambda phi(w(Q)))) w(Light(Q)), the modular
/// of the linearized square function at lambda.
double light_modular(const CubeFamily& G, const Ambient& X, double lambda);

enum class Generator { disjoint, tower, random };

std::string to_string(Generator g);
Generator parse_generator(const std::string& text);
/// Comma separated list, e.g. "a,b,c" or "disjoint,tower".
std::vector<Generator> parse_generators(const std::string& text);

/// Cube families of size N. Trial 0 and 1 of the disjoint generator use the
/// tau maximizing and minimizing phi(N tau)/phi(tau); later trials use a
/// seeded tau from the same grid.
std::vector<DyadicCube> generate_family(const Ambient& X, Generator g, std::size_t N,
                                        std::size_t trial, std::uint64_t seed);

struct ProbeRow {
  std::size_t N = 0;
  Generator gen = Generator::disjoint;
  std::size_t trial = 0;
  double norm = 0;
  double surrogate = 0;
  double h_minus = 0;
  double h_plus = 0;
};

struct ProbeSummary {
  std::size_t N = 0;
  std::size_t families = 0;
  double min_norm = 0;
  double max_norm = 0;
  double h_minus = 0;
  double h_plus = 0;
};

struct ProbeResult {
  std::vector<ProbeRow> rows;          // ordered by N, generator, trial
  std::vector<ProbeSummary> summary;   // one per N
};

/// Brick norms over `trials` families per generator and N, run in parallel
/// with per-family seeds derived from (seed, N index, generator, trial).
ProbeResult democracy_probe(const Ambient& X, const std::vector<std::size_t>& Ns,
                            std::size_t trials, std::uint64_t seed,
                            const std::vector<Generator>& generators);

}  // namespace orlicz

#endif
