#include "orlicz/wavelets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "orlicz/config.hpp"
#include "orlicz/error.hpp"
#include "orlicz/random.hpp"

namespace orlicz {

GridFunction::GridFunction(int dim, int J, int M, std::vector<double> values)
    : d_(dim), J_(J), M_(M), v_(std::move(values)) {
  if (d_ != 1 && d_ != 2) throw InvalidArgument("grid dimension must be 1 or 2");
  if (J_ < 0 || M_ < 0 || (J_ + M_) * d_ > 24)
    throw InvalidArgument("grid levels out of range");
  if (v_.size() != std::size_t{1} << ((J_ + M_) * d_))
    throw InvalidArgument("grid function has the wrong number of cells");
  for (double x : v_)
    if (!std::isfinite(x)) throw InvalidArgument("grid function values must be finite");
}

GridFunction GridFunction::zeros(int dim, int J, int M) {
  return GridFunction(dim, J, M,
                      std::vector<double>(std::size_t{1} << ((J + M) * dim), 0.0));
}

double GridFunction::cell_volume() const { return std::ldexp(1.0, -J_ * d_); }

bool GridFunction::compatible(const DyadicWeight& w) const noexcept {
  return w.dim() == d_ && w.finest_level() == J_ && w.domain_levels() == M_;
}

GridFunction make_function(const std::string& text, int dim, int J, int M) {
  const KindSpec s = parse_kind_spec(text);
  const std::size_t n = std::size_t{1} << (J + M);
  const std::size_t count = dim == 1 ? n : n * n;
  const double h = std::ldexp(1.0, -J);
  const double side = std::ldexp(1.0, M);
  std::vector<double> v(count);
  auto mid = [&](std::size_t cell, int axis) {
    const std::size_t i = dim == 1 ? cell : (axis == 0 ? cell / n : cell % n);
    return (static_cast<double>(i) + 0.5) * h;
  };
  if (s.kind == "random") {
    Rng rng(static_cast<std::uint64_t>(s.integer("seed", 1)));
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  } else if (s.kind == "bump") {
    const double c = s.number("center", 0.5) * side;
    const double r = s.number("radius", 0.4) * side;
    for (std::size_t i = 0; i < count; ++i) {
      double rr = 0.0;
      for (int a = 0; a < dim; ++a) rr += std::pow((mid(i, a) - c) / r, 2);
      v[i] = rr < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - rr)) : 0.0;
    }
  } else if (s.kind == "sawtooth") {
    const double teeth = s.number("teeth", 3.0);
    for (std::size_t i = 0; i < count; ++i) {
      const double u = teeth * mid(i, 0) / side;
      v[i] = u - std::floor(u) - 0.5;
    }
  } else if (s.kind == "file") {
    GridFile g = read_grid_file(s.path);
    if (g.dim != dim || g.finest_level != J || g.domain_levels != M)
      throw InvalidArgument("function file " + s.path + " does not match the grid shape");
    v = std::move(g.values);
  } else {
    throw InvalidArgument("unknown function kind '" + s.kind + "'");
  }
  return GridFunction(dim, J, M, std::move(v));
}

namespace {

const std::array<std::vector<double>, 5>& lowpass_table() {
  static const std::array<std::vector<double>, 5> table = [] {
    std::array<std::vector<double>, 5> t;
    const double r2 = std::numbers::sqrt2, r3 = std::numbers::sqrt3;
    t[1] = {1.0 / r2, 1.0 / r2};
    t[2] = {(1 + r3) / (4 * r2), (3 + r3) / (4 * r2), (3 - r3) / (4 * r2),
            (1 - r3) / (4 * r2)};
    t[3] = {0.33267055295008263, 0.8068915093110925, 0.45987750211849154,
            -0.13501102001025458, -0.08544127388202666, 0.03522629188570953};
    t[4] = {0.2303778133088965, 0.7148465705529157, 0.6308807679298589,
            -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
            0.0328830116668852, -0.010597401785069032};
    return t;
  }();
  return table;
}

struct Filters {
  std::vector<double> h, g;
};

Filters filters_for(const WaveletFamily& f) {
  if (f.order < 1 || f.order > 4) throw InvalidArgument("unsupported wavelet family");
  Filters out;
  out.h = lowpass_table()[f.order];
  const std::size_t L = out.h.size();
  out.g.resize(L);
  for (std::size_t m = 0; m < L; ++m)
    out.g[m] = ((m % 2) ? -1.0 : 1.0) * out.h[L - 1 - m];
  return out;
}

// One periodized analysis step on a strided 1D line of length n.
void analyze_line(const Filters& f, const double* in, std::size_t n,
                  std::size_t stride, double* lo, double* hi, std::size_t ostride) {
  const std::size_t half = n / 2;
  const std::size_t L = f.h.size();
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0, b = 0.0;
    for (std::size_t m = 0; m < L; ++m) {
      const double x = in[((2 * k + m) % n) * stride];
      a += f.h[m] * x;
      b += f.g[m] * x;
    }
    lo[k * ostride] = a;
    hi[k * ostride] = b;
  }
}

void synthesize_line(const Filters& f, const double* lo, const double* hi,
                     std::size_t half, std::size_t istride, double* out,
                     std::size_t stride) {
  const std::size_t n = 2 * half;
  const std::size_t L = f.h.size();
  for (std::size_t i = 0; i < n; ++i) out[i * stride] = 0.0;
  for (std::size_t k = 0; k < half; ++k)
    for (std::size_t m = 0; m < L; ++m)
      out[((2 * k + m) % n) * stride] +=
          f.h[m] * lo[k * istride] + f.g[m] * hi[k * istride];
}

}  // namespace

std::string WaveletFamily::name() const {
  return order == 1 ? "haar" : "daubechies:" + std::to_string(order);
}

WaveletFamily WaveletFamily::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t == "haar") return {1};
  if (t.rfind("daubechies:", 0) == 0) {
    const long n = parse_long(t.substr(11), "daubechies order");
    if (n < 1 || n > 4) throw InvalidArgument("daubechies order must be 1..4");
    return {static_cast<int>(n)};
  }
  throw InvalidArgument("unsupported wavelet family '" + t + "'");
}

WaveletExpansion::WaveletExpansion(int dim, int J, int M, WaveletFamily family)
    : d_(dim), J_(J), M_(M), family_(family) {
  if (d_ != 1 && d_ != 2) throw InvalidArgument("expansion dimension must be 1 or 2");
  if (J_ < 0 || M_ < 0 || (J_ + M_) * d_ > 24)
    throw InvalidArgument("expansion levels out of range");
  filters_for(family_);
  offset_.resize(depth() + 1);
  std::size_t total = 0;
  for (int L = 0; L < depth(); ++L) {
    offset_[L] = total;
    total += (std::size_t{1} << (L * d_)) * species_count();
  }
  offset_[depth()] = total;
  c_.assign(total, 0.0);
}

std::size_t WaveletExpansion::slot(int L, std::size_t flat, int species) const {
  return offset_[L] + flat * species_count() + (species - 1);
}

std::size_t WaveletExpansion::slot(const DyadicCube& q, int species) const {
  const int L = q.level + M_;
  if (q.dim != d_ || L < 0 || L >= depth() || species < 1 || species > species_count())
    throw InvalidArgument("no wavelet slot for " + to_string(q));
  const std::int64_t n = std::int64_t{1} << L;
  for (int i = 0; i < d_; ++i)
    if (q.k[i] < 0 || q.k[i] >= n) throw InvalidArgument("cube outside the domain");
  const std::size_t flat = d_ == 1 ? static_cast<std::size_t>(q.k[0])
                                   : static_cast<std::size_t>(q.k[0] * n + q.k[1]);
  return slot(L, flat, species);
}

SlotInfo WaveletExpansion::info(std::size_t s) const {
  int L = 0;
  while (L + 1 < depth() && offset_[L + 1] <= s) ++L;
  const std::size_t r = s - offset_[L];
  return {L, r / species_count(), static_cast<int>(r % species_count()) + 1};
}

DyadicCube WaveletExpansion::cube(std::size_t s) const {
  const SlotInfo i = info(s);
  DyadicCube q;
  q.dim = d_;
  q.level = i.L - M_;
  if (d_ == 1) {
    q.k[0] = static_cast<std::int64_t>(i.flat);
  } else {
    const std::size_t n = std::size_t{1} << i.L;
    q.k[0] = static_cast<std::int64_t>(i.flat / n);
    q.k[1] = static_cast<std::int64_t>(i.flat % n);
  }
  return q;
}

std::size_t WaveletExpansion::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](double x) { return x != 0.0; }));
}

WaveletExpansion analyze(const GridFunction& f, WaveletFamily family) {
  const Filters flt = filters_for(family);
  WaveletExpansion e(f.dim(), f.finest_level(), f.domain_levels(), family);
  const int D = f.depth();
  const double scale = 1.0 / std::sqrt(std::ldexp(1.0, f.finest_level() * f.dim()));
  std::vector<double> a(f.values());
  for (double& x : a) x *= scale;
  if (f.dim() == 1) {
    for (int L = D - 1; L >= 0; --L) {
      const std::size_t n = std::size_t{1} << (L + 1);
      std::vector<double> lo(n / 2), hi(n / 2);
      analyze_line(flt, a.data(), n, 1, lo.data(), hi.data(), 1);
      std::copy(hi.begin(), hi.end(), e.coefficients().begin() + e.level_offset(L));
      a.swap(lo);
    }
  } else {
    for (int L = D - 1; L >= 0; --L) {
      const std::size_t n = std::size_t{1} << (L + 1), h = n / 2;
      // axis 0 (k0): columns of the row-major n x n array
      std::vector<double> lo0(h * n), hi0(h * n);
      for (std::size_t c = 0; c < n; ++c)
        analyze_line(flt, a.data() + c, n, n, lo0.data() + c, hi0.data() + c, n);
      std::vector<double> ll(h * h), lh(h * h), hl(h * h), hh(h * h);
      for (std::size_t r = 0; r < h; ++r) {
        analyze_line(flt, lo0.data() + r * n, n, 1, ll.data() + r * h, lh.data() + r * h, 1);
        analyze_line(flt, hi0.data() + r * n, n, 1, hl.data() + r * h, hh.data() + r * h, 1);
      }
      for (std::size_t q = 0; q < h * h; ++q) {
        e[e.slot(L, q, 1)] = hl[q];
        e[e.slot(L, q, 2)] = lh[q];
        e[e.slot(L, q, 3)] = hh[q];
      }
      a.swap(ll);
    }
  }
  e.scaling = a[0];
  return e;
}

GridFunction synthesize(const WaveletExpansion& e) {
  const Filters flt = filters_for(e.family());
  const int D = e.depth();
  std::vector<double> a{e.scaling};
  if (e.dim() == 1) {
    for (int L = 0; L < D; ++L) {
      const std::size_t h = std::size_t{1} << L;
      std::vector<double> out(2 * h);
      synthesize_line(flt, a.data(), e.coefficients().data() + e.level_offset(L), h, 1,
                      out.data(), 1);
      a.swap(out);
    }
  } else {
    for (int L = 0; L < D; ++L) {
      const std::size_t h = std::size_t{1} << L, n = 2 * h;
      std::vector<double> lh(h * h), hl(h * h), hh(h * h);
      for (std::size_t q = 0; q < h * h; ++q) {
        hl[q] = e[e.slot(L, q, 1)];
        lh[q] = e[e.slot(L, q, 2)];
        hh[q] = e[e.slot(L, q, 3)];
      }
      std::vector<double> lo0(h * n), hi0(h * n);
      for (std::size_t r = 0; r < h; ++r) {
        synthesize_line(flt, a.data() + r * h, lh.data() + r * h, h, 1, lo0.data() + r * n, 1);
        synthesize_line(flt, hl.data() + r * h, hh.data() + r * h, h, 1, hi0.data() + r * n, 1);
      }
      std::vector<double> out(n * n);
      for (std::size_t c = 0; c < n; ++c)
        synthesize_line(flt, lo0.data() + c, hi0.data() + c, h, n, out.data() + c, n);
      a.swap(out);
    }
  }
  const double scale = std::sqrt(std::ldexp(1.0, e.finest_level() * e.dim()));
  for (double& x : a) x *= scale;
  return GridFunction(e.dim(), e.finest_level(), e.domain_levels(), std::move(a));
}

double square_function(const WaveletExpansion& e, std::size_t cell, bool include_scaling) {
  const int d = e.dim(), D = e.depth();
  const std::size_t n = std::size_t{1} << D;
  const std::size_t c0 = d == 1 ? cell : cell / n, c1 = d == 1 ? 0 : cell % n;
  double sum = 0.0;
  if (include_scaling)
    sum += e.scaling * e.scaling / std::ldexp(1.0, e.domain_levels() * d);
  for (int L = 0; L < D; ++L) {
    const int shift = D - L;
    const std::size_t flat =
        d == 1 ? (c0 >> shift) : (c0 >> shift) * (std::size_t{1} << L) + (c1 >> shift);
    const double inv_vol = std::ldexp(1.0, (L - e.domain_levels()) * d);
    for (int sp = 1; sp <= e.species_count(); ++sp) {
      const double s = e[e.slot(L, flat, sp)];
      sum += s * s * inv_vol;
    }
  }
  return std::sqrt(sum);
}

std::vector<double> square_function_all(const WaveletExpansion& e, bool include_scaling) {
  const int d = e.dim(), D = e.depth();
  std::vector<double> acc{include_scaling
                              ? e.scaling * e.scaling / std::ldexp(1.0, e.domain_levels() * d)
                              : 0.0};
  for (int L = 0; L < D; ++L) {
    const std::size_t h = std::size_t{1} << L;
    const double inv_vol = std::ldexp(1.0, (L - e.domain_levels()) * d);
    // add this level's energy, then push down to the children
    for (std::size_t q = 0; q < acc.size(); ++q)
      for (int sp = 1; sp <= e.species_count(); ++sp) {
        const double s = e[e.slot(L, q, sp)];
        acc[q] += s * s * inv_vol;
      }
    std::vector<double> next(acc.size() << d);
    if (d == 1) {
      for (std::size_t q = 0; q < h; ++q) next[2 * q] = next[2 * q + 1] = acc[q];
    } else {
      const std::size_t n = 2 * h;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] = acc[(i / 2) * h + j / 2];
    }
    acc.swap(next);
  }
  for (double& x : acc) x = std::sqrt(x);
  return acc;
}

double atom_norm(const DyadicWeight& w, const YoungFunction& F, const DyadicCube& q) {
  const double m = w.mass(q);
  if (!(m > 0.0))
    throw ZeroMass("zero-mass cube " + to_string(q) + " has no atom norm",
                   w.flat_index(q));
  return F.fundamental(m) / std::sqrt(q.volume());
}

AtomNormTable::AtomNormTable(const DyadicWeight& w, const YoungFunction& F)
    : d_(w.dim()) {
  norms_.resize(w.depth());
  for (int L = 0; L < w.depth(); ++L) {
    const auto& masses = w.level_masses(L);
    const double inv_sqrt_vol = std::sqrt(std::ldexp(1.0, (L - w.domain_levels()) * d_));
    norms_[L].resize(masses.size());
    for (std::size_t q = 0; q < masses.size(); ++q)
      norms_[L][q] = masses[q] > 0.0 ? F.fundamental(masses[q]) * inv_sqrt_vol : 0.0;
  }
}

double AtomNormTable::for_slot(const WaveletExpansion& e, std::size_t slot) const {
  const SlotInfo i = e.info(slot);
  return norms_[i.L][i.flat];
}

void add_haar_atom(std::vector<double>& cells, int dim, int J, int M, int L,
                   std::size_t flat, int species, double c) {
  const int D = J + M;
  const int shift = D - L;  // cells per cube side = 2^shift
  const std::size_t side = std::size_t{1} << shift, half = side / 2;
  const double amp = c * std::sqrt(std::ldexp(1.0, (L - M) * dim));
  if (dim == 1) {
    const std::size_t base = flat << shift;
    for (std::size_t i = 0; i < half; ++i) cells[base + i] += amp;
    for (std::size_t i = half; i < side; ++i) cells[base + i] -= amp;
    return;
  }
  const std::size_t n = std::size_t{1} << D, h = std::size_t{1} << L;
  const std::size_t b0 = (flat / h) << shift, b1 = (flat % h) << shift;
  for (std::size_t i = 0; i < side; ++i) {
    const double s0 = i < half ? 1.0 : -1.0;
    for (std::size_t j = 0; j < side; ++j) {
      const double s1 = j < half ? 1.0 : -1.0;
      const double sign = species == 1 ? s0 : species == 2 ? s1 : s0 * s1;
      cells[(b0 + i) * n + b1 + j] += sign * amp;
    }
  }
}

}  // namespace orlicz
