#include "orlicz/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "orlicz/error.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/random.hpp"

namespace orlicz {

EtaWeight EtaWeight::power(double exponent) {
  if (!std::isfinite(exponent)) throw InvalidArgument("eta exponent must be finite");
  return EtaWeight(Kind::power, exponent, nullptr);
}

EtaWeight EtaWeight::alpha_h_plus(double alpha, ProfilePtr profile) {
  if (!profile) throw InvalidArgument("eta weight needs a fundamental profile");
  return EtaWeight(Kind::alpha_h_plus, alpha, std::move(profile));
}

EtaWeight EtaWeight::alpha_h_minus(double alpha, ProfilePtr profile) {
  if (!profile) throw InvalidArgument("eta weight needs a fundamental profile");
  return EtaWeight(Kind::alpha_h_minus, alpha, std::move(profile));
}

double EtaWeight::operator()(std::size_t k) const {
  if (k == 0) throw InvalidArgument("eta is indexed from 1");
  const double kd = static_cast<double>(k);
  switch (kind_) {
    case Kind::power: return std::pow(kd, a_);
    case Kind::alpha_h_plus: return std::pow(kd, a_) * profile_->h_plus_n(k);
    case Kind::alpha_h_minus: return std::pow(kd, a_) * profile_->h_minus_n(k);
  }
  return 0.0;
}

std::string EtaWeight::name() const {
  char buf[64];
  switch (kind_) {
    case Kind::power: std::snprintf(buf, sizeof buf, "k^%g", a_); break;
    case Kind::alpha_h_plus: std::snprintf(buf, sizeof buf, "k^%g h+(k)", a_); break;
    case Kind::alpha_h_minus: std::snprintf(buf, sizeof buf, "k^%g h-(k)", a_); break;
  }
  return buf;
}

double EtaWeight::doubling_constant(std::size_t k_max) const {
  double c = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) c = std::max(c, (*this)(2 * k) / (*this)(k));
  return c;
}

bool EtaWeight::increasing(std::size_t k_max) const {
  double prev = (*this)(1);
  for (std::size_t k = 2; k <= k_max; ++k) {
    const double cur = (*this)(k);
    if (!(cur > prev)) return false;
    prev = cur;
  }
  return true;
}

CoefSequence::CoefSequence(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite sequence entry");
    v = std::fabs(v);
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
}

double lorentz_norm(const CoefSequence& s, const EtaWeight& eta, double q) {
  if (!(q > 0.0)) throw InvalidArgument("Lorentz exponent q must be positive");
  const auto& r = s.rearranged();
  if (std::isinf(q)) {
    double m = 0.0;
    for (std::size_t k = 1; k <= r.size() && r[k - 1] > 0.0; ++k)
      m = std::max(m, eta(k) * r[k - 1]);
    return m;
  }
  NeumaierSum sum;
  for (std::size_t k = 1; k <= r.size() && r[k - 1] > 0.0; ++k)
    sum.add(std::pow(eta(k) * r[k - 1], q) / static_cast<double>(k));
  return std::pow(sum.value(), 1.0 / q);
}

double quasi_triangle_ratio(const EtaWeight& eta, double q, double r, std::size_t length,
                            std::size_t trials, std::uint64_t seed) {
  if (!(r > 0.0 && r <= 1.0)) throw InvalidArgument("r must lie in (0, 1]");
  if (length == 0) throw InvalidArgument("empty sequences");
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    // heavy-tailed magnitudes with random signs and sparsity
    std::vector<double> a(length), b(length), c(length);
    for (std::size_t i = 0; i < length; ++i) {
      a[i] = rng.uniform() < 0.3 ? 0.0 : rng.sign() * std::pow(rng.uniform(1e-3, 1.0), 4.0);
      b[i] = rng.uniform() < 0.3 ? 0.0 : rng.sign() * std::pow(rng.uniform(1e-3, 1.0), 4.0);
      c[i] = a[i] + b[i];
    }
    const double na = lorentz_norm(CoefSequence(a), eta, q);
    const double nb = lorentz_norm(CoefSequence(b), eta, q);
    const double nc = lorentz_norm(CoefSequence(c), eta, q);
    const double denom = std::pow(std::pow(na, r) + std::pow(nb, r), 1.0 / r);
    if (denom > 0.0) worst = std::max(worst, nc / denom);
  }
  return worst;
}

}  // namespace orlicz
