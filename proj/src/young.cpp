#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "orlicz/config.hpp"
#include "orlicz/error.hpp"

namespace orlicz {

namespace {

constexpr double ln10 = std::numbers::ln10;

// log(log(e + e^x)), stable for large |x|
double log_log_e_plus(double x) {
  const double L = x > 0.0 ? x + std::log1p(std::numbers::e * std::exp(-x))
                           : 1.0 + std::log1p(std::exp(x - 1.0));
  return std::log(L);
}

double log_e_plus(double x) {
  return x > 0.0 ? x + std::log1p(std::numbers::e * std::exp(-x))
                 : 1.0 + std::log1p(std::exp(x - 1.0));
}

std::size_t segment_of(const std::vector<double>& xs, double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs.begin());
  if (i == 0) return 0;
  if (i >= xs.size()) return xs.size() - 2;
  return i - 1;
}

void check_exponent(double p, const char* what) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw InvalidArgument(std::string(what) + " must satisfy 1 < p < inf");
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
  check_exponent(p, "power exponent");
  return YoungFunction(PowerKind{p});
}

YoungFunction YoungFunction::zygmund(double p, double a) {
  check_exponent(p, "zygmund exponent");
  if (!(a >= 0.0) || !std::isfinite(a))
    throw InvalidArgument("zygmund log exponent must satisfy a >= 0");
  return YoungFunction(ZygmundKind{p, a});
}

YoungFunction YoungFunction::tabulated(const std::vector<double>& t,
                                       const std::vector<double>& phi,
                                       std::optional<double> lo_exponent,
                                       std::optional<double> hi_exponent) {
  if (t.size() != phi.size() || t.size() < 2)
    throw InvalidArgument("table needs at least two (t, Phi) rows");
  TableKind k;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(phi[i] > 0.0) || !std::isfinite(t[i]) ||
        !std::isfinite(phi[i]))
      throw InvalidArgument("table entries must be positive and finite");
    if (i > 0 && !(t[i] > t[i - 1] && phi[i] > phi[i - 1]))
      throw InvalidArgument("table must be strictly increasing in t and Phi");
    k.log_t.push_back(std::log(t[i]));
    k.log_phi.push_back(std::log(phi[i]));
  }
  const std::size_t n = k.log_t.size();
  k.lo_exponent = lo_exponent.value_or((k.log_phi[1] - k.log_phi[0]) /
                                       (k.log_t[1] - k.log_t[0]));
  k.hi_exponent = hi_exponent.value_or((k.log_phi[n - 1] - k.log_phi[n - 2]) /
                                       (k.log_t[n - 1] - k.log_t[n - 2]));
  if (!(k.lo_exponent > 0.0) || !(k.hi_exponent > 0.0))
    throw InvalidArgument("table tail exponents must be positive");
  return YoungFunction(std::move(k));
}

YoungFunction YoungFunction::load_table(const std::string& path,
                                        std::optional<double> lo_exponent,
                                        std::optional<double> hi_exponent) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open Young table " + path);
  std::vector<double> t, phi;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    double a = 0, b = 0;
    if (!(row >> a >> b))
      throw InvalidArgument("malformed Young table row: " + line);
    t.push_back(a);
    phi.push_back(b);
  }
  return tabulated(t, phi, lo_exponent, hi_exponent);
}

YoungFunction YoungFunction::parse(const std::string& text) {
  const KindSpec s = parse_kind_spec(text);
  if (s.kind == "power") {
    auto p = s.number("p");
    if (!p) throw InvalidArgument("power: missing p");
    return power(*p);
  }
  if (s.kind == "zygmund") {
    auto p = s.number("p");
    if (!p) throw InvalidArgument("zygmund: missing p");
    return zygmund(*p, s.number("a", 1.0));
  }
  if (s.kind == "table") return load_table(s.path, s.number("lo"), s.number("hi"));
  throw InvalidArgument("unknown Young function kind '" + s.kind + "'");
}

YoungFunction YoungFunction::with_tolerance(double tol) const {
  if (!(tol > 0.0)) throw InvalidArgument("inverse tolerance must be positive");
  YoungFunction copy = *this;
  copy.tol_ = tol;
  return copy;
}

double YoungFunction::power_exponent() const noexcept {
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return pk->p;
  return std::numeric_limits<double>::quiet_NaN();
}

std::string YoungFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PowerKind>) {
          os << "power:p=" << k.p;
        } else if constexpr (std::is_same_v<K, ZygmundKind>) {
          os << "zygmund:p=" << k.p << ",a=" << k.a;
        } else {
          os << "table[" << k.log_t.size() << "],lo=" << k.lo_exponent
             << ",hi=" << k.hi_exponent;
        }
      },
      kind_);
  return os.str();
}

double YoungFunction::operator()(double t) const {
  if (t < 0.0 || std::isnan(t)) throw InvalidArgument("Young argument must be >= 0");
  if (t == 0.0) return 0.0;
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return std::pow(t, pk->p);
  if (auto* zk = std::get_if<ZygmundKind>(&kind_))
    return std::pow(t, zk->p) * std::pow(std::log(std::numbers::e + t), zk->a);
  return std::exp(log_value(std::log(t)));
}

double YoungFunction::log_value(double x) const {
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return pk->p * x;
  if (auto* zk = std::get_if<ZygmundKind>(&kind_))
    return zk->p * x + (zk->a == 0.0 ? 0.0 : zk->a * log_log_e_plus(x));
  const auto& tk = std::get<TableKind>(kind_);
  if (x <= tk.log_t.front())
    return tk.log_phi.front() + tk.lo_exponent * (x - tk.log_t.front());
  if (x >= tk.log_t.back())
    return tk.log_phi.back() + tk.hi_exponent * (x - tk.log_t.back());
  const std::size_t i = segment_of(tk.log_t, x);
  const double u = (x - tk.log_t[i]) / (tk.log_t[i + 1] - tk.log_t[i]);
  return tk.log_phi[i] + u * (tk.log_phi[i + 1] - tk.log_phi[i]);
}

double YoungFunction::log_slope(double x) const {
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return pk->p;
  if (auto* zk = std::get_if<ZygmundKind>(&kind_)) {
    const double frac = 1.0 / (1.0 + std::exp(1.0 - x));  // t / (e + t)
    return zk->p + zk->a * frac / log_e_plus(x);
  }
  const auto& tk = std::get<TableKind>(kind_);
  if (x < tk.log_t.front()) return tk.lo_exponent;
  if (x >= tk.log_t.back()) return tk.hi_exponent;
  const std::size_t i = segment_of(tk.log_t, x);
  return (tk.log_phi[i + 1] - tk.log_phi[i]) / (tk.log_t[i + 1] - tk.log_t[i]);
}

double YoungFunction::log_inverse(double ly) const {
  if (std::isnan(ly)) throw InvalidArgument("Young inverse of NaN");
  if (ly == -std::numeric_limits<double>::infinity()) return ly;
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return ly / pk->p;
  if (auto* tk = std::get_if<TableKind>(&kind_)) {
    // piecewise linear in log-log, so the inverse is exact
    if (ly <= tk->log_phi.front())
      return tk->log_t.front() + (ly - tk->log_phi.front()) / tk->lo_exponent;
    if (ly >= tk->log_phi.back())
      return tk->log_t.back() + (ly - tk->log_phi.back()) / tk->hi_exponent;
    const std::size_t i = segment_of(tk->log_phi, ly);
    const double u = (ly - tk->log_phi[i]) / (tk->log_phi[i + 1] - tk->log_phi[i]);
    return tk->log_t[i] + u * (tk->log_t[i + 1] - tk->log_t[i]);
  }
  // Safeguarded Newton on g(x) = log Phi(e^x) - ly; bracket grown by doubling.
  auto g = [&](double x) { return log_value(x) - ly; };
  const double guess = ly / std::get<ZygmundKind>(kind_).p;
  double lo = guess, hi = guess;
  double step = 1.0;
  int grow = 0;
  while (g(lo) > 0.0) {
    lo -= step;
    step *= 2.0;
    if (++grow > 2000) throw NonConvergence("Young inverse: cannot bracket");
  }
  step = 1.0;
  while (g(hi) < 0.0) {
    hi += step;
    step *= 2.0;
    if (++grow > 2000) throw NonConvergence("Young inverse: cannot bracket");
  }
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double gx = g(x);
    if (std::fabs(gx) <= tol_) return x;
    if (gx < 0.0) lo = x; else hi = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::fabs(x)))
      return x;
    double next = x - gx / log_slope(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  throw NonConvergence("Young inverse: iteration cap reached");
}

double YoungFunction::inverse(double y) const {
  if (y < 0.0 || std::isnan(y)) throw InvalidArgument("Young inverse needs y >= 0");
  if (y == 0.0) return 0.0;
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return std::pow(y, 1.0 / pk->p);
  return std::exp(log_inverse(std::log(y)));
}

double YoungFunction::log_fundamental(double log_t) const {
  return -log_inverse(-log_t);
}

double YoungFunction::fundamental(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("fundamental function needs t > 0");
  if (auto* pk = std::get_if<PowerKind>(&kind_)) return std::pow(t, 1.0 / pk->p);
  return std::exp(log_fundamental(std::log(t)));
}

namespace {

constexpr int s_points = 2 * FundamentalProfile::s_decades *
                             FundamentalProfile::per_decade + 1;

double s_log(int i) {
  return ln10 * (-FundamentalProfile::s_decades +
                 static_cast<double>(i) / FundamentalProfile::per_decade);
}

double log_dilation_direct(const YoungFunction& F,
                           const std::vector<double>& s_log_phi, double log_t,
                           Dilation mode) {
  double best = mode == Dilation::sup ? -std::numeric_limits<double>::infinity()
                                      : std::numeric_limits<double>::infinity();
  for (int i = 0; i < s_points; ++i) {
    const double v = F.log_fundamental(s_log(i) + log_t) - s_log_phi[i];
    best = mode == Dilation::sup ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

std::vector<double> s_grid_log_phi(const YoungFunction& F) {
  std::vector<double> out(s_points);
  for (int i = 0; i < s_points; ++i) out[i] = F.log_fundamental(s_log(i));
  return out;
}

}  // namespace

double dilation(const YoungFunction& F, double t, Dilation mode) {
  if (!(t > 0.0)) throw InvalidArgument("dilation needs t > 0");
  if (F.is_power()) return std::pow(t, 1.0 / F.power_exponent());
  return std::exp(log_dilation_direct(F, s_grid_log_phi(F), std::log(t), mode));
}

FundamentalProfile::FundamentalProfile(YoungFunction F) : F_(std::move(F)) {
  constexpr int half = s_decades * per_decade;  // 512
  const bool power = F_.is_power();
  const double inv_p = power ? 1.0 / F_.power_exponent() : 0.0;

  // log phi on 10^{m/64}, |m| <= 2*half, so that s t stays on the grid
  std::vector<double> ext(4 * half + 1);
  for (int m = -2 * half; m <= 2 * half; ++m)
    ext[m + 2 * half] = F_.log_fundamental(ln10 * m / per_decade);
  s_log_phi_.assign(ext.begin() + half, ext.begin() + 3 * half + 1);

  grid_t_.resize(2 * half + 1);
  grid_hp_.resize(2 * half + 1);
  grid_hm_.resize(2 * half + 1);
  for (int m = -half; m <= half; ++m) {
    const double t = std::pow(10.0, static_cast<double>(m) / per_decade);
    grid_t_[m + half] = t;
    if (power) {
      grid_hp_[m + half] = grid_hm_[m + half] = std::pow(t, inv_p);
      continue;
    }
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 2 * half; ++i) {
      const double v = ext[i + m + half] - s_log_phi_[i];
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    grid_hp_[m + half] = std::exp(hi);
    grid_hm_[m + half] = std::exp(lo);
  }
  grid_hp_[half] = grid_hm_[half] = 1.0;

  int_hp_.resize(exact_table_size);
  int_hm_.resize(exact_table_size);
  for (std::size_t k = 1; k <= exact_table_size; ++k) {
    const double kd = static_cast<double>(k);
    if (power) {
      int_hp_[k - 1] = int_hm_[k - 1] = std::pow(kd, inv_p);
    } else if (k == 1) {
      int_hp_[0] = int_hm_[0] = 1.0;
    } else {
      int_hp_[k - 1] = std::exp(log_dilation(std::log(kd), Dilation::sup));
      int_hm_[k - 1] = std::exp(log_dilation(std::log(kd), Dilation::inf));
    }
  }

  if (power) {
    boyd_ = {inv_p, inv_p};
  } else {
    const double lt = boyd_log10_t * ln10;
    boyd_.lower = log_dilation(-lt, Dilation::sup) / -lt;
    boyd_.upper = log_dilation(lt, Dilation::sup) / lt;
    if (!std::isfinite(boyd_.lower) || !std::isfinite(boyd_.upper))
      throw InvalidArgument("degenerate Young profile: non-finite Boyd index");
  }
}

std::shared_ptr<const FundamentalProfile> FundamentalProfile::make(
    const YoungFunction& F) {
  return std::make_shared<const FundamentalProfile>(F);
}

double FundamentalProfile::log_dilation(double log_t, Dilation mode) const {
  return log_dilation_direct(F_, s_log_phi_, log_t, mode);
}

double FundamentalProfile::h_plus(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("dilation needs t > 0");
  if (F_.is_power()) return std::pow(t, 1.0 / F_.power_exponent());
  return std::exp(log_dilation(std::log(t), Dilation::sup));
}

double FundamentalProfile::h_minus(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("dilation needs t > 0");
  if (F_.is_power()) return std::pow(t, 1.0 / F_.power_exponent());
  return std::exp(log_dilation(std::log(t), Dilation::inf));
}

double FundamentalProfile::interpolate_grid(const std::vector<double>& values,
                                            double t) const {
  const double pos = std::log10(t) * per_decade + s_decades * per_decade;
  const double last = static_cast<double>(values.size() - 1);
  if (pos < 0.0 || pos > last) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t i = std::min(static_cast<std::size_t>(pos), values.size() - 2);
  const double u = pos - static_cast<double>(i);
  return std::exp((1.0 - u) * std::log(values[i]) + u * std::log(values[i + 1]));
}

double FundamentalProfile::h_plus_n(std::size_t k) const {
  if (k == 0) throw InvalidArgument("h_plus_n needs k >= 1");
  if (k <= exact_table_size) return int_hp_[k - 1];
  if (F_.is_power()) return std::pow(static_cast<double>(k), 1.0 / F_.power_exponent());
  const double v = interpolate_grid(grid_hp_, static_cast<double>(k));
  return std::isnan(v) ? h_plus(static_cast<double>(k)) : v;
}

double FundamentalProfile::h_minus_n(std::size_t k) const {
  if (k == 0) throw InvalidArgument("h_minus_n needs k >= 1");
  if (k <= exact_table_size) return int_hm_[k - 1];
  if (F_.is_power()) return std::pow(static_cast<double>(k), 1.0 / F_.power_exponent());
  const double v = interpolate_grid(grid_hm_, static_cast<double>(k));
  return std::isnan(v) ? h_minus(static_cast<double>(k)) : v;
}

double FundamentalProfile::envelope_constant(double eps, double decades) const {
  double c = 0.0;
  for (std::size_t i = 0; i < grid_t_.size(); ++i) {
    const double t = grid_t_[i];
    if (std::fabs(std::log10(t)) > decades + 1e-9) continue;
    const double env = std::max(std::pow(t, boyd_.lower - eps),
                                std::pow(t, boyd_.upper + eps));
    c = std::max(c, grid_hp_[i] / env);
  }
  return c;
}

BoydIndices boyd_indices(const YoungFunction& F) {
  return FundamentalProfile(F).boyd();
}

}  // namespace orlicz
