#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "orlicz/democracy.hpp"
#include "orlicz/embeddings.hpp"
#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/random.hpp"

using namespace orlicz;

namespace {

DyadicCube cube(int level, std::int64_t k) { return DyadicCube{1, level, {k, 0}}; }

}  // namespace

TEST_CASE("decomposition of a tower") {
  const DyadicWeight w = make_weight("const", 1, 5, 0);
  // Q0 in Q1 in Q2
  const CubeFamily G({cube(3, 0), cube(2, 0), cube(1, 0)}, w);
  CHECK(G.minimal() == std::vector<std::size_t>{0, 1, 2});
  CHECK(G.lighted() == std::vector<std::size_t>{0, 1, 2});
  CHECK(G.shaded().empty());
  CHECK(G.shade_fraction(2) == 0.5);
  CHECK(G.shade_fraction(0) == 0.0);
  // Light(Q1) = Q1 \ Q0: cells 4..7 of the 32
  CHECK(G.light_cells(1) == std::vector<std::size_t>{4, 5, 6, 7});
  CHECK(G.smallest_containing(0) == 0);
  CHECK(G.smallest_containing(12) == 2);
  CHECK(G.smallest_containing(20) == -1);
}

TEST_CASE("decomposition of disjoint and shaded families") {
  const DyadicWeight w = make_weight("const", 1, 5, 0);
  const CubeFamily D({cube(3, 0), cube(3, 5), cube(2, 3)}, w);
  CHECK(D.minimal().size() == 3);
  CHECK(D.lighted().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(D.shade_fraction(i) == 0.0);
  // both children present: the parent is fully shaded and drops out of Gamma_min
  const CubeFamily S({cube(2, 0), cube(2, 1), cube(1, 0)}, w);
  CHECK(S.minimal() == std::vector<std::size_t>{0, 1});
  CHECK(S.shaded() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(CubeFamily({cube(2, 0), cube(2, 0)}, w), InvalidArgument);
  CHECK_THROWS_AS(CubeFamily({cube(5, 0)}, w), InvalidArgument);
  CHECK_THROWS_AS(CubeFamily({cube(2, 4)}, w), InvalidArgument);
}

TEST_CASE("cardinality sandwich and light partition on random families") {
  for (int d : {1, 2}) {
    const int J = d == 1 ? 8 : 4;
    const Ambient X(make_weight("const", d, J, 0), YoungFunction::power(2));
    for (std::size_t t = 0; t < 20; ++t) {
      const auto cubes = generate_family(X, t % 2 ? Generator::random : Generator::tower, 64, t,
                                         derive_seed(99, t));
      const CubeFamily G(cubes, X.weight());
      const double frac = ((1 << d) - 1.0) / (1 << d);
      const std::size_t nL = G.lighted().size(), nmin = G.minimal().size();
      CHECK(frac * G.size() <= nL);
      CHECK(nL <= nmin);
      CHECK(nmin <= G.size());
      // lighted members are minimal
      for (std::size_t i : G.lighted()) CHECK(!G.light_cells(i).empty());
      // the lights of minimal cubes partition the union
      std::size_t total = 0;
      for (std::size_t i : G.minimal()) total += G.light_cells(i).size();
      CHECK(total == G.union_cells());
      std::size_t by_cell = 0;
      for (std::size_t c = 0; c < X.weight().cell_count(); ++c)
        for (const DyadicCube& q : cubes)
          if (q.contains(X.weight().cube_at(X.weight().depth(), c))) {
            ++by_cell;
            break;
          }
      CHECK(by_cell == G.union_cells());
    }
  }
}

TEST_CASE("brick norms") {
  const Ambient X(make_weight("const", 1, 8, 0), YoungFunction::power(2));
  CHECK(brick_norm(CubeFamily({cube(0, 0)}, X.weight()), X).norm ==
        doctest::Approx(1.0).epsilon(1e-10));
  // N disjoint cubes of equal mass: phi(N tau)/phi(tau) = sqrt(N) in L2
  std::vector<DyadicCube> d;
  for (int k = 0; k < 9; ++k) d.push_back(cube(5, 2 * k));
  const BrickNorm b = brick_norm(CubeFamily(d, X.weight()), X);
  CHECK(b.norm == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(b.surrogate == doctest::Approx(3.0).epsilon(1e-10));
  // orthonormal tower: both equal sqrt(3)
  const BrickNorm t = brick_norm(CubeFamily({cube(3, 0), cube(2, 0), cube(1, 0)}, X.weight()), X);
  CHECK(t.norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(t.surrogate == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));

  const Ambient Z(make_weight("power:gamma=0.5", 1, 8, 0), YoungFunction::zygmund(2, 1));
  std::vector<DyadicCube> eq = Z.weight().select_disjoint_cubes(0.05, 6, 7);
  const BrickNorm bz = brick_norm(CubeFamily(eq, Z.weight()), Z);
  CHECK(bz.norm >= Z.profile().h_minus_n(6) * 0.5);
  CHECK(bz.norm <= Z.profile().h_plus_n(6) * 2.0);
}

TEST_CASE("linearized square function") {
  const Ambient X(make_weight("const", 1, 6, 0), YoungFunction::power(2));
  const CubeFamily D({cube(3, 0), cube(3, 2), cube(2, 3)}, X.weight());
  const auto S = square_surrogate(D, X);
  for (std::size_t c = 0; c < S.size(); ++c)
    CHECK(linearized_square(D, X, c) == doctest::Approx(S[c]).epsilon(1e-14));
  CHECK(linearized_square(D, X, 40) == 0.0);

  // tower: S^2 |Q_x| = sum_k 2^{-k} < 2
  const CubeFamily T({cube(4, 0), cube(3, 0), cube(2, 0), cube(1, 0), cube(0, 0)}, X.weight());
  const auto St = square_surrogate(T, X);
  for (std::size_t c = 0; c < St.size(); ++c) {
    const double ratio = St[c] / linearized_square(T, X, c);
    CHECK(ratio >= 1.0);
    CHECK(ratio <= std::sqrt(2.0));
  }
}

TEST_CASE("linearized modular of a disjoint family at lambda = h+(N)") {
  for (const auto& F : {YoungFunction::power(1.5), YoungFunction::zygmund(2, 1)}) {
    const Ambient X(make_weight("power:gamma=0.5", 1, 10, 2), F);
    for (std::size_t N : {1u, 3u, 8u, 20u, 64u}) {
      const double tau = extremal_tau(X, N, N, true);
      const CubeFamily G(X.weight().select_disjoint_cubes(tau, N, X.weight().depth() - 1),
                         X.weight());
      CHECK(light_modular(G, X, X.profile().h_plus_n(N)) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("democracy probe") {
  const Ambient X(make_weight("power:gamma=0.5", 1, 9, 1), YoungFunction::power(2.5));
  const auto Ns = dyadic_range(32);
  const std::vector<Generator> gens = {Generator::disjoint, Generator::tower, Generator::random};
  const ProbeResult r = democracy_probe(X, Ns, 4, 7, gens);
  CHECK(r.rows.size() == Ns.size() * 3 * 4);
  for (const ProbeRow& row : r.rows) {
    if (row.N == 1) CHECK(row.norm == doctest::Approx(1.0).epsilon(1e-10));
    const double scale = std::pow(static_cast<double>(row.N), 1.0 / 2.5);
    CHECK(row.norm / scale > 0.5);
    CHECK(row.norm / scale < 2.0);
    CHECK(row.h_plus == doctest::Approx(scale).epsilon(1e-6));
  }
  for (const ProbeSummary& s : r.summary) CHECK(s.families == 12);
  // identical seeds reproduce the table
  const ProbeResult again = democracy_probe(X, Ns, 4, 7, gens);
  for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(again.rows[i].norm == r.rows[i].norm);

  CHECK(parse_generators("a, c") == std::vector<Generator>{Generator::disjoint, Generator::random});
  CHECK_THROWS_AS(parse_generators("x"), InvalidArgument);
  CHECK_THROWS_AS(generate_family(X, Generator::random, 5000, 0, 1), DomainExhausted);
}
