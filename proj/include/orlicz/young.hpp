#ifndef ORLICZ_YOUNG_HPP
#define ORLICZ_YOUNG_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

struct PowerKind {
  double p;
};

/// Phi(t) = t^p * log(e + t)^a
struct ZygmundKind {
  double p;
  double a;
};

/// Log-log interpolated table with power-law tails outside [t_0, t_n].
struct TableKind {
  std::vector<double> log_t;
  std::vector<double> log_phi;
  double lo_exponent;
  double hi_exponent;
};

/// A Young function Phi. Values are also available in log space so that the
/// fundamental function can be evaluated far outside the double range.
class YoungFunction {
public:
  using Kind = std::variant<PowerKind, ZygmundKind, TableKind>;

  static constexpr double default_tolerance = 1e-12;

  static YoungFunction power(double p);
  static YoungFunction zygmund(double p, double a);
  /// t and phi ascending and strictly positive. Missing tail exponents are
  /// taken from the slope of the first / last table segment.
  static YoungFunction tabulated(const std::vector<double>& t,
                                 const std::vector<double>& phi,
                                 std::optional<double> lo_exponent = {},
                                 std::optional<double> hi_exponent = {});
  /// Two-column text file "t Phi(t)".
  static YoungFunction load_table(const std::string& path,
                                  std::optional<double> lo_exponent = {},
                                  std::optional<double> hi_exponent = {});
  /// "power:p=2", "zygmund:p=2,a=1" or "table:<path>[,lo=..,hi=..]".
  static YoungFunction parse(const std::string& spec);

  YoungFunction with_tolerance(double tol) const;

  const Kind& kind() const noexcept { return kind_; }
  double inverse_tolerance() const noexcept { return tol_; }
  bool is_power() const noexcept {
    return std::holds_alternative<PowerKind>(kind_);
  }
  /// Exponent p for Power, NaN otherwise.
  double power_exponent() const noexcept;
  std::string describe() const;

  double operator()(double t) const;
  /// log Phi(e^x)
  double log_value(double x) const;
  /// d log Phi / d log t at log t = x
  double log_slope(double x) const;

  double inverse(double y) const;
  /// log Phi^{-1}(e^ly)
  double log_inverse(double ly) const;

  /// phi(t) = 1 / Phi^{-1}(1/t)
  double fundamental(double t) const;
  double log_fundamental(double log_t) const;

private:
  explicit YoungFunction(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
  double tol_ = default_tolerance;
};

enum class Dilation { sup, inf };

/// Sup (inf) of phi(s t) / phi(s) over s in [1e-8, 1e8], 64 points per
/// decade; closed form t^{1/p} for Power.
double dilation(const YoungFunction& F, double t, Dilation mode);

struct BoydIndices {
  double lower;
  double upper;
};

/// Precomputed fundamental function data for one Young function.
class FundamentalProfile {
public:
  static constexpr int per_decade = 64;
  static constexpr int s_decades = 8;
  static constexpr std::size_t exact_table_size = 256;
  /// Points at which log h^+(t) / log t is taken as the Boyd index estimate.
  static constexpr double boyd_log10_t = 200.0;

  explicit FundamentalProfile(YoungFunction F);
  static std::shared_ptr<const FundamentalProfile> make(const YoungFunction& F);

  const YoungFunction& young() const noexcept { return F_; }

  double phi(double t) const { return F_.fundamental(t); }
  double log_phi(double log_t) const { return F_.log_fundamental(log_t); }

  /// Direct grid sup/inf for arbitrary t > 0.
  double h_plus(double t) const;
  double h_minus(double t) const;
  /// Integer arguments: exact table up to exact_table_size, log-grid
  /// interpolation beyond.
  double h_plus_n(std::size_t k) const;
  double h_minus_n(std::size_t k) const;

  /// Sampled t grid 10^{m/64}, |m| <= 8*64, with h^+/h^- on it.
  const std::vector<double>& grid_t() const noexcept { return grid_t_; }
  const std::vector<double>& grid_h_plus() const noexcept { return grid_hp_; }
  const std::vector<double>& grid_h_minus() const noexcept { return grid_hm_; }

  BoydIndices boyd() const noexcept { return boyd_; }

  /// Smallest C with h^+(s) <= C max(s^{i-eps}, s^{I+eps}) for grid s within
  /// 10^{+-decades}. Since phi(st)/phi(t) <= h^+(s) this bounds the envelope.
  double envelope_constant(double eps, double decades) const;

private:
  double log_dilation(double log_t, Dilation mode) const;
  double interpolate_grid(const std::vector<double>& values, double t) const;

  YoungFunction F_;
  std::vector<double> s_log_phi_;  // log phi on the s grid
  std::vector<double> grid_t_, grid_hp_, grid_hm_;
  std::vector<double> int_hp_, int_hm_;  // index k-1
  BoydIndices boyd_{};
};

using ProfilePtr = std::shared_ptr<const FundamentalProfile>;

BoydIndices boyd_indices(const YoungFunction& F);

}  // namespace orlicz

#endif
