#include "orlicz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "orlicz/config.hpp"
#include "orlicz/error.hpp"

namespace orlicz {

double DyadicCube::volume() const { return std::ldexp(1.0, -level * dim); }
double DyadicCube::side() const { return std::ldexp(1.0, -level); }

DyadicCube DyadicCube::parent() const {
  DyadicCube p = *this;
  p.level = level - 1;
  for (int i = 0; i < dim; ++i) p.k[i] = k[i] >> 1;  // floor division
  return p;
}

DyadicCube DyadicCube::child(int c) const {
  DyadicCube ch = *this;
  ch.level = level + 1;
  if (dim == 1) {
    ch.k[0] = 2 * k[0] + c;
  } else {
    ch.k[0] = 2 * k[0] + (c >> 1);
    ch.k[1] = 2 * k[1] + (c & 1);
  }
  return ch;
}

bool DyadicCube::contains(const DyadicCube& other) const {
  if (other.dim != dim || other.level < level) return false;
  const int shift = other.level - level;
  for (int i = 0; i < dim; ++i)
    if ((other.k[i] >> shift) != k[i]) return false;
  return true;
}

bool DyadicCube::disjoint(const DyadicCube& other) const {
  return !contains(other) && !other.contains(*this);
}

std::string to_string(const DyadicCube& q) {
  std::ostringstream os;
  os << "Q(j=" << q.level << ",k=" << q.k[0];
  if (q.dim == 2) os << "," << q.k[1];
  os << ")";
  return os.str();
}

namespace {

std::size_t per_axis(int L) { return std::size_t{1} << L; }

// Aggregates one level into its parent level; children summed in child order.
std::vector<double> aggregate(const std::vector<double>& fine, int d, int Lfine) {
  const std::size_t nf = per_axis(Lfine);
  const std::size_t nc = nf / 2;
  if (d == 1) {
    std::vector<double> out(nc);
    for (std::size_t i = 0; i < nc; ++i) out[i] = fine[2 * i] + fine[2 * i + 1];
    return out;
  }
  std::vector<double> out(nc * nc);
  for (std::size_t i0 = 0; i0 < nc; ++i0)
    for (std::size_t i1 = 0; i1 < nc; ++i1) {
      const std::size_t a = (2 * i0) * nf + 2 * i1;
      const std::size_t b = (2 * i0 + 1) * nf + 2 * i1;
      out[i0 * nc + i1] = ((fine[a] + fine[a + 1]) + fine[b]) + fine[b + 1];
    }
  return out;
}

std::vector<std::vector<double>> build_pyramid(std::vector<double> cells, int d,
                                               int depth) {
  std::vector<std::vector<double>> pyr(depth + 1);
  pyr[depth] = std::move(cells);
  for (int L = depth; L > 0; --L) pyr[L - 1] = aggregate(pyr[L], d, L);
  return pyr;
}

}  // namespace

DyadicWeight::DyadicWeight(int dim, int finest_level, int domain_levels,
                           std::vector<double> cell_mass, double ap_exponent)
    : d_(dim), J_(finest_level), M_(domain_levels), ap_(ap_exponent) {
  if (d_ != 1 && d_ != 2) throw InvalidArgument("weight dimension must be 1 or 2");
  if (J_ < 0 || M_ < 0 || J_ + M_ > (d_ == 1 ? 24 : 12))
    throw InvalidArgument("weight grid levels out of range");
  if (!(ap_ > 1.0)) throw InvalidArgument("A_p exponent must exceed 1");
  const std::size_t expected = std::size_t{1} << (depth() * d_);
  if (cell_mass.size() != expected)
    throw InvalidArgument("weight has " + std::to_string(cell_mass.size()) +
                          " cells, expected " + std::to_string(expected));
  bool any = false;
  min_cell_ = std::numeric_limits<double>::infinity();
  for (double m : cell_mass) {
    if (!(m >= 0.0) || !std::isfinite(m))
      throw InvalidArgument("cell masses must be finite and nonnegative");
    any = any || m > 0.0;
    min_cell_ = std::min(min_cell_, m);
  }
  if (!any) throw InvalidArgument("weight has zero total mass");
  pyramid_ = build_pyramid(std::move(cell_mass), d_, depth());
  fit_regularity();
}

double DyadicWeight::cell_volume() const { return std::ldexp(1.0, -J_ * d_); }

bool DyadicWeight::in_domain(const DyadicCube& q) const noexcept {
  if (q.dim != d_ || q.level < -M_ || q.level > J_) return false;
  const std::int64_t n = static_cast<std::int64_t>(per_axis(q.level + M_));
  for (int i = 0; i < d_; ++i)
    if (q.k[i] < 0 || q.k[i] >= n) return false;
  return true;
}

std::size_t DyadicWeight::flat_index(const DyadicCube& q) const {
  if (!in_domain(q)) throw InvalidArgument("cube outside the domain: " + to_string(q));
  if (d_ == 1) return static_cast<std::size_t>(q.k[0]);
  return static_cast<std::size_t>(q.k[0]) * per_axis(q.level + M_) +
         static_cast<std::size_t>(q.k[1]);
}

DyadicCube DyadicWeight::cube_at(int L, std::size_t flat) const {
  DyadicCube q;
  q.dim = d_;
  q.level = L - M_;
  if (d_ == 1) {
    q.k[0] = static_cast<std::int64_t>(flat);
  } else {
    q.k[0] = static_cast<std::int64_t>(flat / per_axis(L));
    q.k[1] = static_cast<std::int64_t>(flat % per_axis(L));
  }
  return q;
}

double DyadicWeight::mass(const DyadicCube& q) const {
  return pyramid_[q.level + M_][flat_index(q)];
}

void DyadicWeight::fit_regularity() {
  const int D = depth();
  std::vector<double> rmin(D + 1, std::numeric_limits<double>::infinity());
  std::vector<double> rmax(D + 1, 0.0);
  for (int LA = 1; LA <= D; ++LA) {
    std::vector<double> lo = pyramid_[LA], hi = pyramid_[LA];
    for (int LQ = LA - 1; LQ >= 0; --LQ) {
      // min / max over children of the descendant extremes
      const std::size_t nf = per_axis(LQ + 1), nc = per_axis(LQ);
      std::vector<double> nlo(pyramid_[LQ].size()), nhi(pyramid_[LQ].size());
      for (std::size_t q = 0; q < nlo.size(); ++q) {
        double a = std::numeric_limits<double>::infinity(), b = 0.0;
        if (d_ == 1) {
          a = std::min(lo[2 * q], lo[2 * q + 1]);
          b = std::max(hi[2 * q], hi[2 * q + 1]);
        } else {
          const std::size_t i0 = q / nc, i1 = q % nc;
          for (int c = 0; c < 4; ++c) {
            const std::size_t f = (2 * i0 + (c >> 1)) * nf + 2 * i1 + (c & 1);
            a = std::min(a, lo[f]);
            b = std::max(b, hi[f]);
          }
        }
        nlo[q] = a;
        nhi[q] = b;
        const double wq = pyramid_[LQ][q];
        if (wq > 0.0) {
          rmin[LA - LQ] = std::min(rmin[LA - LQ], a / wq);
          rmax[LA - LQ] = std::max(rmax[LA - LQ], b / wq);
        }
      }
      lo.swap(nlo);
      hi.swap(nhi);
    }
  }
  reg_.p_hat = ap_;
  reg_.c2 = 1.0;
  // A = Q (m = 0) is an admissible pair, so c1 <= 1
  reg_.c1 = 1.0;
  reg_.delta_hat = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= D; ++m) {
    const double log_rho = -m * d_ * std::log(2.0);
    reg_.c1 = std::min(reg_.c1, rmin[m] / std::exp(reg_.p_hat * log_rho));
    const double dl = rmax[m] > 0.0 ? std::log(rmax[m]) / log_rho : 0.0;
    reg_.delta_hat = std::min(reg_.delta_hat, std::max(0.0, dl));
  }
  if (D == 0) {
    reg_.c1 = 1.0;
    reg_.delta_hat = 0.0;
  }
  reg_.c_hat = reg_.c1 * std::exp2(-d_ * reg_.p_hat);
}

double DyadicWeight::ap_constant(double p, int max_level) const {
  if (!(p > 1.0)) throw InvalidArgument("ap_constant needs p > 1");
  const int Lmax = std::clamp(max_level + M_, 0, depth());
  const double vol = cell_volume();
  const auto& cells = cell_mass();
  std::vector<double> sigma(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!(cells[i] > 0.0))
      throw ZeroMass("zero-mass cell " + std::to_string(i) +
                         " makes the dual weight undefined",
                     i);
    sigma[i] = std::pow(cells[i] / vol, -1.0 / (p - 1.0)) * vol;
  }
  auto spyr = build_pyramid(std::move(sigma), d_, depth());
  double best = 0.0;
  for (int L = 0; L <= Lmax; ++L) {
    const double qvol = std::ldexp(1.0, -(L - M_) * d_);
    for (std::size_t q = 0; q < pyramid_[L].size(); ++q) {
      const double a = pyramid_[L][q] / qvol;
      const double b = spyr[L][q] / qvol;
      best = std::max(best, a * std::pow(b, p - 1.0));
    }
  }
  return best;
}

TowerReport DyadicWeight::tower_limits(const DyadicCube& base) const {
  TowerReport r;
  const double w0 = mass(base);
  DyadicCube q = base;
  for (;;) {
    r.ascent.push_back({q.level, mass(q)});
    if (q.level == -M_) break;
    q = q.parent();
  }
  q = base;
  for (;;) {
    r.descent.push_back({q.level, mass(q)});
    if (q.level == J_) break;
    q = q.child(0);
  }
  // w(Q_k) >= c2^{-1} 2^{k d delta} w(Q_0), with round-off slack
  for (std::size_t k = 1; k < r.ascent.size(); ++k) {
    const double bound =
        std::exp2(static_cast<double>(k) * d_ * reg_.delta_hat) * w0 / reg_.c2;
    if (r.ascent[k].mass < bound * (1.0 - 1e-12)) r.growth_ok = false;
    if (r.ascent[k].mass < r.ascent[k - 1].mass) r.growth_ok = false;
  }
  return r;
}

std::vector<DyadicCube> DyadicWeight::select_disjoint_cubes(double tau, std::size_t N,
                                                            int max_L) const {
  if (!(tau > 0.0) || !(tau < total_mass()) || tau < min_cell_)
    throw TauOutOfRange("tau outside the reachable mass range");
  std::vector<DyadicCube> out;
  if (N == 0) return out;
  const int D = max_L < 0 ? depth() : std::min(max_L, depth());
  if (D < 1) throw InvalidArgument("no selectable levels");
  // origin tower T_L = cube (L, 0); find the crossing cube on it
  int start = D;
  for (int L = 1; L <= D; ++L) {
    if (pyramid_[L][0] <= tau) {
      if (pyramid_[L][0] > 0.0) out.push_back(cube_at(L, 0));
      start = L;
      break;
    }
  }
  // every visited cube has a parent heavier than tau, so each cube with
  // w <= tau met here is a crossing cube; crossings are pairwise disjoint
  std::function<void(int, std::size_t)> dfs = [&](int L, std::size_t f) {
    if (out.size() >= N) return;
    const double w = pyramid_[L][f];
    if (w <= tau) {
      if (w > 0.0) out.push_back(cube_at(L, f));
      return;
    }
    if (L == D) return;
    const DyadicCube q = cube_at(L, f);
    for (int c = 0; c < q.child_count(); ++c) dfs(L + 1, flat_index(q.child(c)));
  };
  for (int L = start - 1; L >= 0 && out.size() < N; --L) {
    const DyadicCube t = cube_at(L, 0);
    for (int c = 1; c < t.child_count() && out.size() < N; ++c)
      dfs(L + 1, flat_index(t.child(c)));
  }
  if (out.size() < N)
    throw DomainExhausted("domain exhausted after " + std::to_string(out.size()) +
                              " of " + std::to_string(N) + " cubes",
                          out.size());
  out.resize(N);
  return out;
}

DyadicWeight DyadicWeight::power(double exponent, double ap_exponent) const {
  const double vol = cell_volume();
  std::vector<double> cells(cell_mass().size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    cells[i] = std::pow(cell_mass()[i] / vol, exponent) * vol;
  return DyadicWeight(d_, J_, M_, std::move(cells), ap_exponent);
}

namespace {

// integral of |x - c|^g over [a, b]
double power_integral(double a, double b, double c, double g) {
  auto F = [&](double u) {
    return std::copysign(std::pow(std::fabs(u), g + 1.0) / (g + 1.0), u);
  };
  return F(b - c) - F(a - c);
}

}  // namespace

DyadicWeight make_weight(const std::string& text, int dim, int J, int M) {
  const KindSpec s = parse_kind_spec(text);
  const double ap = s.number("ap", 2.0);
  const std::size_t n = std::size_t{1} << (J + M);
  const double h = std::ldexp(1.0, -J);
  const double vol = std::ldexp(1.0, -J * dim);
  const std::size_t count = dim == 1 ? n : n * n;
  if (s.kind == "const") {
    const double v = s.number("value", 1.0);
    if (!(v > 0.0)) throw InvalidArgument("const weight value must be positive");
    return DyadicWeight(dim, J, M, std::vector<double>(count, v * vol), ap);
  }
  if (s.kind == "power") {
    const double g = s.number("gamma", 0.5);
    const double c = s.number("center", 0.0);
    if (!(g > -1.0)) throw InvalidArgument("power weight needs gamma > -1");
    std::vector<double> cells(count);
    if (dim == 1) {
      for (std::size_t i = 0; i < n; ++i)
        cells[i] = power_integral(i * h, (i + 1) * h, c, g);
    } else {
      const double cy = s.number("center_y", c);
      for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1) {
          const double x = (i0 + 0.5) * h - c, y = (i1 + 0.5) * h - cy;
          cells[i0 * n + i1] = std::pow(std::hypot(x, y), g) * vol;
        }
    }
    return DyadicWeight(dim, J, M, std::move(cells), ap);
  }
  if (s.kind == "product") {
    const double gx = s.number("gx", 0.0), gy = s.number("gy", 0.0);
    const double cx = s.number("cx", 0.0), cy = s.number("cy", 0.0);
    if (!(gx > -1.0) || !(gy > -1.0))
      throw InvalidArgument("product weight needs exponents > -1");
    std::vector<double> cells(count);
    if (dim == 1) {
      for (std::size_t i = 0; i < n; ++i)
        cells[i] = power_integral(i * h, (i + 1) * h, cx, gx);
    } else {
      for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1)
          cells[i0 * n + i1] = power_integral(i0 * h, (i0 + 1) * h, cx, gx) *
                               power_integral(i1 * h, (i1 + 1) * h, cy, gy);
    }
    return DyadicWeight(dim, J, M, std::move(cells), ap);
  }
  if (s.kind == "file") {
    GridFile g = read_grid_file(s.path);
    if (g.dim != dim || g.finest_level != J || g.domain_levels != M)
      throw InvalidArgument("weight file " + s.path + " has shape (" +
                            std::to_string(g.dim) + "," +
                            std::to_string(g.finest_level) + "," +
                            std::to_string(g.domain_levels) + "), expected (" +
                            std::to_string(dim) + "," + std::to_string(J) + "," +
                            std::to_string(M) + ")");
    return DyadicWeight(g.dim, g.finest_level, g.domain_levels, std::move(g.values), ap);
  }
  throw InvalidArgument("unknown weight kind '" + s.kind + "'");
}

GridFile read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open grid file " + path);
  GridFile g;
  if (!(in >> g.dim >> g.finest_level >> g.domain_levels))
    throw InvalidArgument(path + ": malformed header, expected 'd J M'");
  if ((g.dim != 1 && g.dim != 2) || g.finest_level < 0 || g.domain_levels < 0 ||
      (g.finest_level + g.domain_levels) * g.dim > 24)
    throw InvalidArgument(path + ": header out of range");
  const std::size_t count = std::size_t{1}
                            << ((g.finest_level + g.domain_levels) * g.dim);
  g.values.reserve(count);
  std::string tok;
  while (in >> tok) g.values.push_back(parse_double(tok, path));
  if (g.values.size() != count)
    throw InvalidArgument(path + ": expected " + std::to_string(count) +
                          " values, found " + std::to_string(g.values.size()));
  return g;
}

void write_grid_file(const std::string& path, const GridFile& g) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write grid file " + path);
  out << g.dim << ' ' << g.finest_level << ' ' << g.domain_levels << '\n';
  char buf[32];
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", g.values[i]);
    out << buf << ((i + 1) % 8 == 0 ? '\n' : ' ');
  }
  out << '\n';
}

}  // namespace orlicz
