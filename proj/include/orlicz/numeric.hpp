#ifndef ORLICZ_NUMERIC_HPP
#define ORLICZ_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace orlicz {

/// Compensated (Neumaier) summation.
class NeumaierSum {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct LineFit {
  double slope;
  double intercept;
};

/// Least-squares fit of log y against log x.
LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> v);

/// Dyadic values 1, 2, 4, ... up to and including max_value.
std::vector<std::size_t> dyadic_range(std::size_t max_value);

}  // namespace orlicz

#endif
