#include "orlicz/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

RankedExpansion::RankedExpansion(WaveletExpansion e, const AtomNormTable& atoms)
    : e_(std::move(e)), scaling_(e_.scaling) {
  if (atoms.dim() != e_.dim()) throw InvalidArgument("atom table and expansion differ in dimension");
  e_.scaling = 0.0;
  const auto& c = e_.coefficients();
  std::vector<double> size(c.size(), 0.0);
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s] == 0.0) continue;
    order_.push_back(s);
    size[s] = std::fabs(c[s]) * atoms.for_slot(e_, s);
  }
  // slots are laid out by (level, cube index, species), so the slot index is
  // the tie-break key
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return size[a] > size[b]; });
  sizes_.reserve(order_.size());
  for (std::size_t s : order_) sizes_.push_back(size[s]);
}

CoefSequence atom_weighted(const RankedExpansion& r) { return CoefSequence(r.sizes()); }

WaveletExpansion greedy_step(const RankedExpansion& r, std::size_t N) {
  const WaveletExpansion& src = r.expansion();
  WaveletExpansion g(src.dim(), src.finest_level(), src.domain_levels(), src.family());
  const std::size_t n = std::min(N, r.size());
  for (std::size_t i = 0; i < n; ++i) g[r.order()[i]] = src[r.order()[i]];
  return g;
}

namespace {

// Cell values of f_h minus a chosen set of its own terms.
class ResidualBuilder {
public:
  explicit ResidualBuilder(const RankedExpansion& r)
      : r_(r), base_(synthesize(r.expansion()).values()) {}

  const std::vector<double>& full() const { return base_; }

  std::vector<double> without(const std::vector<std::size_t>& slots) const {
    const WaveletExpansion& e = r_.expansion();
    if (e.family().is_haar()) {
      std::vector<double> cells = base_;
      for (std::size_t s : slots) subtract(cells, s, e[s]);
      return cells;
    }
    WaveletExpansion rest = e;
    for (std::size_t s : slots) rest[s] = 0.0;
    return synthesize(rest).values();
  }

  void subtract(std::vector<double>& cells, std::size_t slot, double c) const {
    const WaveletExpansion& e = r_.expansion();
    const SlotInfo si = e.info(slot);
    add_haar_atom(cells, e.dim(), e.finest_level(), e.domain_levels(), si.L, si.flat,
                  si.species, -c);
  }

  // Dense cell vector of the unit atom at a slot.
  std::vector<double> atom(std::size_t slot) const {
    const WaveletExpansion& e = r_.expansion();
    if (e.family().is_haar()) {
      std::vector<double> cells(base_.size(), 0.0);
      subtract(cells, slot, -1.0);
      return cells;
    }
    WaveletExpansion u(e.dim(), e.finest_level(), e.domain_levels(), e.family());
    u[slot] = 1.0;
    return synthesize(u).values();
  }

private:
  const RankedExpansion& r_;
  std::vector<double> base_;
};

std::vector<std::size_t> top(const std::vector<std::size_t>& order, std::size_t n) {
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(n, order.size()))};
}

}  // namespace

double greedy_error(const RankedExpansion& r, std::size_t N, const Ambient& X) {
  if (N >= r.size()) return 0.0;
  ResidualBuilder rb(r);
  return X.norm(rb.without(top(r.order(), N)));
}

std::vector<double> greedy_error_profile(const RankedExpansion& r,
                                         const std::vector<std::size_t>& Ns,
                                         const Ambient& X) {
  std::vector<std::size_t> idx(Ns.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return Ns[a] < Ns[b]; });
  std::vector<double> out(Ns.size(), 0.0);
  ResidualBuilder rb(r);
  const bool haar = r.expansion().family().is_haar();
  std::vector<double> cells = rb.full();
  std::size_t removed = 0;
  for (std::size_t i : idx) {
    const std::size_t N = Ns[i];
    if (N >= r.size()) continue;
    if (haar) {
      for (; removed < N; ++removed)
        rb.subtract(cells, r.order()[removed], r.expansion()[r.order()[removed]]);
      out[i] = X.norm(cells);
    } else {
      out[i] = X.norm(rb.without(top(r.order(), N)));
    }
  }
  return out;
}

double scaling_remainder_norm(const RankedExpansion& r, const Ambient& X) {
  if (r.scaling_remainder() == 0.0) return 0.0;
  const WaveletExpansion& e = r.expansion();
  WaveletExpansion s(e.dim(), e.finest_level(), e.domain_levels(), e.family());
  s.scaling = r.scaling_remainder();
  return X.norm(s);
}

SigmaMode parse_sigma_mode(const std::string& text) {
  if (text == "exhaustive") return SigmaMode::exhaustive;
  if (text == "support") return SigmaMode::support;
  if (text == "greedy") return SigmaMode::greedy;
  throw InvalidArgument("unknown sigma mode '" + text + "'");
}

std::string to_string(SigmaMode m) {
  switch (m) {
    case SigmaMode::exhaustive: return "exhaustive";
    case SigmaMode::support: return "support";
    case SigmaMode::greedy: return "greedy";
  }
  return "?";
}

namespace {

constexpr std::size_t enumeration_budget = 4096;
constexpr std::size_t swap_window = 4;
constexpr std::size_t swap_size_limit = 512;
constexpr int swap_rounds = 4;
constexpr std::size_t refined_subsets = 4;
constexpr int descent_sweeps = 32;
constexpr int golden_steps = 48;

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    visit(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<std::size_t> to_slots(const RankedExpansion& r, const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> out;
  out.reserve(ranks.size());
  for (std::size_t i : ranks) out.push_back(r.order()[i]);
  return out;
}

double support_sigma(const RankedExpansion& r, std::size_t N, const Ambient& X,
                     const ResidualBuilder& rb) {
  const std::size_t n = r.size();
  if (N >= n) return 0.0;
  if (N == 0) return X.norm(rb.full());
  if (binomial(n, N) <= static_cast<double>(enumeration_budget)) {
    double best = std::numeric_limits<double>::infinity();
    for_each_subset(n, N, [&](const std::vector<std::size_t>& s) {
      best = std::min(best, X.norm(rb.without(to_slots(r, s))));
    });
    return best;
  }
  // candidate orderings of rank positions
  const auto& e = r.expansion();
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  orders.push_back(by_rank);
  std::vector<std::size_t> by_raw = by_rank;
  std::stable_sort(by_raw.begin(), by_raw.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(e[r.order()[a]]) > std::fabs(e[r.order()[b]]);
  });
  orders.push_back(by_raw);
  if (!e.family().is_haar() && n <= swap_size_limit) {
    std::vector<double> single(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> a = rb.atom(r.order()[i]);
      for (double& v : a) v *= e[r.order()[i]];
      single[i] = X.norm(a);
    }
    std::vector<std::size_t> by_single = by_rank;
    std::stable_sort(by_single.begin(), by_single.end(),
                     [&](std::size_t a, std::size_t b) { return single[a] > single[b]; });
    orders.push_back(by_single);
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_order;
  for (const auto& o : orders) {
    const double v = X.norm(rb.without(to_slots(r, top(o, N))));
    if (v < best) {
      best = v;
      best_order = o;
    }
  }
  if (n > swap_size_limit) return best;
  // exchange one of the last kept terms with one of the first dropped ones
  for (int round = 0; round < swap_rounds; ++round) {
    bool improved = false;
    const std::size_t lo = N > swap_window ? N - swap_window : 0;
    const std::size_t hi = std::min(n, N + swap_window);
    std::vector<std::size_t> cand_order;
    for (std::size_t i = lo; i < N && !improved; ++i)
      for (std::size_t j = N; j < hi && !improved; ++j) {
        std::vector<std::size_t> o = best_order;
        std::swap(o[i], o[j]);
        const double v = X.norm(rb.without(to_slots(r, top(o, N))));
        if (v < best) {
          best = v;
          cand_order = std::move(o);
          improved = true;
        }
      }
    if (!improved) break;
    best_order = std::move(cand_order);
  }
  return best;
}

// Minimizes ||res + t psi|| over t in [-B, B] by golden section.
double golden_line(const std::vector<double>& res, const std::vector<double>& psi, double B,
                   const Ambient& X, double& t_best) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<double> tmp(res.size());
  auto eval = [&](double t) {
    for (std::size_t i = 0; i < res.size(); ++i) tmp[i] = res[i] + t * psi[i];
    return X.norm(tmp);
  };
  double a = -B, b = B;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < golden_steps; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = eval(x2);
    }
  }
  t_best = f1 < f2 ? x1 : x2;
  return std::min(f1, f2);
}

// Coordinate descent on the coefficients of the kept terms.
double refine(const std::vector<std::size_t>& kept, const std::vector<std::vector<double>>& atoms,
              const std::vector<double>& atom_norms, std::vector<double> res, double value,
              const Ambient& X) {
  for (int sweep = 0; sweep < descent_sweeps; ++sweep) {
    const double start = value;
    for (std::size_t j : kept) {
      if (!(atom_norms[j] > 0.0) || value == 0.0) continue;
      const double B = 2.0 * value / atom_norms[j];
      double t = 0.0;
      const double v = golden_line(res, atoms[j], B, X, t);
      if (v < value) {
        for (std::size_t i = 0; i < res.size(); ++i) res[i] += t * atoms[j][i];
        value = v;
      }
    }
    if (!(value < start * (1.0 - 1e-12))) break;
  }
  return value;
}

std::vector<double> exhaustive_profile(const RankedExpansion& r, std::size_t n_max,
                                       const Ambient& X, const ResidualBuilder& rb) {
  const std::size_t n = r.size();
  if (n > exhaustive_limit)
    throw InvalidArgument("exhaustive sigma needs at most 20 nonzero coefficients, got " +
                          std::to_string(n));
  const auto& e = r.expansion();
  std::vector<std::vector<double>> atoms(n);
  std::vector<double> atom_norms(n);
  for (std::size_t i = 0; i < n; ++i) {
    atoms[i] = rb.atom(r.order()[i]);
    atom_norms[i] = X.norm(atoms[i]);
  }
  std::vector<double> sigma(n_max + 1, 0.0);
  for (std::size_t N = 0; N <= n_max; ++N) {
    if (N == 0) {
      sigma[0] = X.norm(rb.full());
      continue;
    }
    if (N >= n) break;
    struct Candidate {
      double value;
      std::vector<std::size_t> kept;
    };
    std::vector<Candidate> cands;
    for_each_subset(n, N, [&](const std::vector<std::size_t>& s) {
      std::vector<double> res = rb.full();
      for (std::size_t i : s) {
        const double c = e[r.order()[i]];
        for (std::size_t k = 0; k < res.size(); ++k) res[k] -= c * atoms[i][k];
      }
      cands.push_back({X.norm(res), s});
    });
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    double best = cands.front().value;
    for (std::size_t c = 0; c < std::min(refined_subsets, cands.size()); ++c) {
      std::vector<double> res = rb.full();
      for (std::size_t i : cands[c].kept) {
        const double coef = e[r.order()[i]];
        for (std::size_t k = 0; k < res.size(); ++k) res[k] -= coef * atoms[i][k];
      }
      best = std::min(best, refine(cands[c].kept, atoms, atom_norms, std::move(res),
                                   cands[c].value, X));
    }
    sigma[N] = best;
  }
  return sigma;
}

}  // namespace

std::vector<double> sigma_profile(const RankedExpansion& r, std::size_t n_max,
                                  const Ambient& X, SigmaMode mode) {
  ResidualBuilder rb(r);
  std::vector<double> sigma;
  if (mode == SigmaMode::exhaustive) {
    sigma = exhaustive_profile(r, n_max, X, rb);
  } else if (mode == SigmaMode::greedy) {
    std::vector<std::size_t> Ns(n_max + 1);
    std::iota(Ns.begin(), Ns.end(), 0);
    sigma = greedy_error_profile(r, Ns, X);
  } else {
    sigma.assign(n_max + 1, 0.0);
    for (std::size_t N = 0; N <= n_max && N < r.size(); ++N) sigma[N] = support_sigma(r, N, X, rb);
  }
  for (std::size_t N = 1; N < sigma.size(); ++N) sigma[N] = std::min(sigma[N], sigma[N - 1]);
  return sigma;
}

double sigma_N(const RankedExpansion& r, std::size_t N, const Ambient& X, SigmaMode mode) {
  if (mode == SigmaMode::support) {
    ResidualBuilder rb(r);
    return support_sigma(r, N, X, rb);
  }
  if (mode == SigmaMode::greedy) return greedy_error(r, N, X);
  return sigma_profile(r, N, X, mode).back();
}

double approx_seminorm_from_sigma(const std::vector<double>& sigma, double alpha, double q) {
  if (!(q > 0.0)) throw InvalidArgument("approximation space exponent q must be positive");
  if (std::isinf(q)) {
    double m = 0.0;
    for (std::size_t N = 1; N < sigma.size(); ++N)
      m = std::max(m, std::pow(static_cast<double>(N), alpha) * sigma[N]);
    return m;
  }
  NeumaierSum s;
  for (std::size_t N = 1; N < sigma.size(); ++N) {
    const double Nd = static_cast<double>(N);
    s.add(std::pow(std::pow(Nd, alpha) * sigma[N], q) / Nd);
  }
  return std::pow(s.value(), 1.0 / q);
}

double approx_norm_from_sigma(const std::vector<double>& sigma, double alpha, double q) {
  const double semi = approx_seminorm_from_sigma(sigma, alpha, q);
  const double f = sigma.empty() ? 0.0 : sigma[0];
  if (std::isinf(q)) return std::max(f, semi);
  return std::pow(std::pow(f, q) + std::pow(semi, q), 1.0 / q);
}

double approx_space_seminorm(const RankedExpansion& r, double alpha, double q,
                             const Ambient& X, SigmaMode mode) {
  if (r.size() <= 1) return 0.0;
  return approx_seminorm_from_sigma(sigma_profile(r, r.size() - 1, X, mode), alpha, q);
}

double approx_space_norm(const RankedExpansion& r, double alpha, double q, const Ambient& X,
                         SigmaMode mode) {
  if (r.size() == 0) return 0.0;
  return approx_norm_from_sigma(sigma_profile(r, r.size() - 1, X, mode), alpha, q);
}

namespace {

void summarize(ConstantReport& rep) {
  std::vector<double> pos;
  bool finite = true;
  for (double c : rep.C) {
    if (!std::isfinite(c)) finite = false;
    if (c > 0.0) pos.push_back(c);
  }
  rep.max = pos.empty() ? 0.0 : *std::max_element(pos.begin(), pos.end());
  rep.median = pos.empty() ? 0.0 : median(pos);
  rep.bounded = finite && (pos.empty() || rep.max <= 3.0 * rep.median);
}

}  // namespace

ConstantReport jackson_check(const RankedExpansion& r, double alpha, const Ambient& X,
                             const std::vector<std::size_t>& Ns) {
  ConstantReport rep;
  const EtaWeight eta = EtaWeight::alpha_h_plus(alpha, X.profile_ptr());
  rep.reference = lorentz_norm(atom_weighted(r), eta, q_infinity);
  std::vector<std::size_t> prev;
  for (std::size_t N : Ns) {
    if (N == 0) throw InvalidArgument("Jackson check starts at N = 1");
    prev.push_back(N - 1);
  }
  const std::vector<double> err = greedy_error_profile(r, prev, X);
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    rep.N.push_back(Ns[i]);
    rep.value.push_back(err[i]);
    rep.C.push_back(rep.reference > 0.0
                        ? err[i] * std::pow(static_cast<double>(Ns[i]), alpha) / rep.reference
                        : 0.0);
  }
  summarize(rep);
  return rep;
}

ConstantReport bernstein_check(const std::vector<RankedExpansion>& samples, double alpha,
                               const Ambient& X) {
  ConstantReport rep;
  const EtaWeight eta = EtaWeight::alpha_h_minus(alpha, X.profile_ptr());
  for (const RankedExpansion& r : samples) {
    const std::size_t N = r.size();
    if (N == 0) continue;
    const double lam = lorentz_norm(atom_weighted(r), eta, 1.0);
    const double f = X.norm(r.expansion());
    rep.N.push_back(N);
    rep.value.push_back(lam);
    rep.C.push_back(lam / (std::pow(static_cast<double>(N), alpha) * f));
  }
  summarize(rep);
  return rep;
}

}  // namespace orlicz
