#include "pocut/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace pocut {

double mean_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

CiSummary confidence_interval(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 2)
    throw std::invalid_argument("confidence_interval: need at least 2 samples");
  CiSummary ci;
  ci.n_samples = n;
  ci.mean = mean_of(samples);
  ci.sd = sample_sd(samples);
  double q;
  if (n >= 30) {
    q = kNormalQ995;
    ci.method = "normal";
  } else {
    q = t_quantile_995(n - 1);
    ci.method = "student_t";
  }
  const double half = q * ci.sd / std::sqrt(static_cast<double>(n));
  ci.lo = ci.mean - half;
  ci.hi = ci.mean + half;
  return ci;
}

}  // namespace pocut
