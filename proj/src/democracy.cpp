#include "orlicz/democracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "orlicz/embeddings.hpp"
#include "orlicz/error.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/random.hpp"
#include "orlicz/config.hpp"

namespace orlicz {

namespace {

// Calls f(cell) for every grid cell inside the cube (L, flat).
template <class F>
void for_cells(const DyadicWeight& w, int L, std::size_t flat, F&& f) {
  const int D = w.depth();
  const std::size_t s = std::size_t{1} << (D - L);
  if (w.dim() == 1) {
    for (std::size_t i = flat * s; i < (flat + 1) * s; ++i) f(i);
    return;
  }
  const std::size_t nL = std::size_t{1} << L, n = std::size_t{1} << D;
  const std::size_t k0 = flat / nL, k1 = flat % nL;
  for (std::size_t i0 = k0 * s; i0 < (k0 + 1) * s; ++i0)
    for (std::size_t i1 = k1 * s; i1 < (k1 + 1) * s; ++i1) f(i0 * n + i1);
}

struct Located {
  int L;
  std::size_t flat;
};

Located locate(const DyadicWeight& w, const DyadicCube& q) {
  if (q.dim != w.dim() || !w.in_domain(q))
    throw InvalidArgument("cube outside the grid: " + to_string(q));
  const int L = q.level + w.domain_levels();
  if (L >= w.depth())
    throw InvalidArgument("cube on the finest level carries no wavelet: " + to_string(q));
  return {L, w.flat_index(q)};
}

}  // namespace

CubeFamily::CubeFamily(std::vector<DyadicCube> cubes, const DyadicWeight& w)
    : d_(w.dim()), cubes_(std::move(cubes)), owner_(w.cell_count(), -1) {
  std::set<DyadicCube> seen;
  std::vector<Located> loc;
  for (const DyadicCube& q : cubes_) {
    if (!seen.insert(q).second) throw InvalidArgument("duplicate cube in family: " + to_string(q));
    loc.push_back(locate(w, q));
  }
  // finest cubes first, so each cell is claimed by its smallest container
  std::vector<std::size_t> idx(cubes_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return loc[a].L > loc[b].L; });
  size_cells_.assign(cubes_.size(), 0);
  for (std::size_t i : idx) {
    for_cells(w, loc[i].L, loc[i].flat, [&](std::size_t c) {
      if (owner_[c] < 0) owner_[c] = static_cast<long>(i);
    });
    size_cells_[i] = std::size_t{1} << ((w.depth() - loc[i].L) * d_);
  }
  light_.assign(cubes_.size(), {});
  for (std::size_t c = 0; c < owner_.size(); ++c)
    if (owner_[c] >= 0) {
      light_[owner_[c]].push_back(c);
      ++covered_;
    }
}

double CubeFamily::shade_fraction(std::size_t i) const {
  return 1.0 - static_cast<double>(light_[i].size()) / static_cast<double>(size_cells_[i]);
}

std::vector<std::size_t> CubeFamily::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cubes_.size(); ++i)
    if (!light_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> CubeFamily::lighted() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cubes_.size(); ++i)
    if ((light_[i].size() << d_) >= size_cells_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> CubeFamily::shaded() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cubes_.size(); ++i)
    if ((light_[i].size() << d_) < size_cells_[i]) out.push_back(i);
  return out;
}

std::vector<double> square_surrogate(const CubeFamily& G, const Ambient& X) {
  const DyadicWeight& w = X.weight();
  std::vector<double> sq(w.cell_count(), 0.0);
  for (const DyadicCube& q : G.cubes()) {
    const Located l = locate(w, q);
    const double m = w.mass_at(l.L, l.flat);
    if (!(m > 0.0)) throw ZeroMass("family cube has zero mass: " + to_string(q), l.flat);
    const double v = 1.0 / X.profile().phi(m);
    for_cells(w, l.L, l.flat, [&](std::size_t c) { sq[c] += v * v; });
  }
  for (double& v : sq) v = std::sqrt(v);
  return sq;
}

BrickNorm brick_norm(const CubeFamily& G, const Ambient& X) {
  BrickNorm b;
  b.norm = X.norm(brick_expansion(G.cubes(), X));
  b.surrogate = X.norm(square_surrogate(G, X));
  return b;
}

double linearized_square(const CubeFamily& G, const Ambient& X, std::size_t cell) {
  if (cell >= X.weight().cell_count()) throw InvalidArgument("cell index out of range");
  const long o = G.smallest_containing(cell);
  if (o < 0) return 0.0;
  return 1.0 / X.profile().phi(X.weight().mass(G.cubes()[o]));
}

double light_modular(const CubeFamily& G, const Ambient& X, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("modular needs lambda > 0");
  const DyadicWeight& w = X.weight();
  double total = 0.0;
  for (std::size_t i : G.minimal()) {
    double lm = 0.0;
    for (std::size_t c : G.light_cells(i)) lm += w.cell_mass()[c];
    total += X.young()(1.0 / (lambda * X.profile().phi(w.mass(G.cubes()[i])))) * lm;
  }
  return total;
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::disjoint: return "a";
    case Generator::tower: return "b";
    case Generator::random: return "c";
  }
  return "?";
}

Generator parse_generator(const std::string& text) {
  if (text == "a" || text == "disjoint") return Generator::disjoint;
  if (text == "b" || text == "tower") return Generator::tower;
  if (text == "c" || text == "random") return Generator::random;
  throw InvalidArgument("unknown family generator '" + text + "'");
}

std::vector<Generator> parse_generators(const std::string& text) {
  std::vector<Generator> out;
  for (const std::string& part : split(text, ','))
    if (!trim(part).empty()) out.push_back(parse_generator(trim(part)));
  if (out.empty()) throw InvalidArgument("empty generator list");
  return out;
}

std::vector<DyadicCube> generate_family(const Ambient& X, Generator g, std::size_t N,
                                        std::size_t trial, std::uint64_t seed) {
  const DyadicWeight& w = X.weight();
  const int top = w.depth() - 1;
  const int d = w.dim();
  std::size_t available = 0;
  for (int L = 0; L <= top; ++L) available += std::size_t{1} << (L * d);
  if (N == 0 || N > available)
    throw DomainExhausted("grid too small for a family of " + std::to_string(N) + " cubes", 0);
  Rng rng(seed);
  std::vector<DyadicCube> out;
  std::set<DyadicCube> seen;
  auto add = [&](const DyadicCube& q) {
    if (out.size() < N && seen.insert(q).second) out.push_back(q);
  };
  switch (g) {
    case Generator::disjoint: {
      double tau;
      if (trial == 0) {
        tau = extremal_tau(X, N, N, true);
      } else if (trial == 1) {
        tau = extremal_tau(X, N, N, false);
      } else {
        const auto taus = admissible_taus(X, N);
        if (taus.empty())
          throw DomainExhausted("no tau admits " + std::to_string(N) + " disjoint cubes", 0);
        tau = taus[rng.below(taus.size())];
      }
      return w.select_disjoint_cubes(tau, N, top);
    }
    case Generator::tower: {
      const std::size_t base_count = std::size_t{1} << (top * d);
      while (out.size() < N) {
        DyadicCube q = w.cube_at(top, rng.below(base_count));
        const int height = static_cast<int>(rng.below(static_cast<std::uint64_t>(top) + 1));
        for (int h = 0; h <= height && out.size() < N; ++h) {
          add(q);
          q = q.parent();
        }
      }
      return out;
    }
    case Generator::random: {
      while (out.size() < N) {
        const int L = static_cast<int>(rng.below(static_cast<std::uint64_t>(top) + 1));
        add(w.cube_at(L, rng.below(std::size_t{1} << (L * d))));
      }
      return out;
    }
  }
  return out;
}

ProbeResult democracy_probe(const Ambient& X, const std::vector<std::size_t>& Ns,
                            std::size_t trials, std::uint64_t seed,
                            const std::vector<Generator>& generators) {
  struct Task {
    std::size_t n_index;
    Generator gen;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < Ns.size(); ++i)
    for (Generator g : generators)
      for (std::size_t t = 0; t < trials; ++t) tasks.push_back({i, g, t});

  ProbeResult res;
  res.rows.resize(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k) {
    const Task& t = tasks[k];
    const std::size_t N = Ns[t.n_index];
    const std::uint64_t counter =
        (static_cast<std::uint64_t>(t.n_index) << 40) |
        (static_cast<std::uint64_t>(t.gen) << 32) | static_cast<std::uint64_t>(t.trial);
    const CubeFamily G(generate_family(X, t.gen, N, t.trial, derive_seed(seed, counter)),
                       X.weight());
    const BrickNorm b = brick_norm(G, X);
    ProbeRow& row = res.rows[k];
    row.N = N;
    row.gen = t.gen;
    row.trial = t.trial;
    row.norm = b.norm;
    row.surrogate = b.surrogate;
    row.h_minus = X.profile().h_minus_n(N);
    row.h_plus = X.profile().h_plus_n(N);
  });

  for (std::size_t N : Ns) {
    ProbeSummary s;
    s.N = N;
    s.min_norm = std::numeric_limits<double>::infinity();
    s.max_norm = 0.0;
    s.h_minus = X.profile().h_minus_n(N);
    s.h_plus = X.profile().h_plus_n(N);
    for (const ProbeRow& r : res.rows)
      if (r.N == N) {
        ++s.families;
        s.min_norm = std::min(s.min_norm, r.norm);
        s.max_norm = std::max(s.max_norm, r.norm);
      }
    res.summary.push_back(s);
  }
  return res;
}

}  // namespace orlicz
