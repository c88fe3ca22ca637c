#ifndef ORLICZ_RANDOM_HPP
#define ORLICZ_RANDOM_HPP

#include <cstdint>
#include <random>

namespace orlicz {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t counter) noexcept {
  return mix_seed(mix_seed(master) ^ mix_seed(counter + 0x632be59bd9b4e019ULL));
}

/// Small wrapper over mt19937_64 whose outputs are bit-reproducible across
/// standard libraries (no std::*_distribution involved).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  double sign() { return (engine_() >> 63) ? -1.0 : 1.0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace orlicz

#endif
