#pragma once

#include <span>

namespace pocut {

// Two-sided 99% Normal quantile, used once samples reach 30.
inline constexpr double kNormalQ995 = 2.5758;

// Two-sided 99% Student's t quantile (the 0.995 point) for df >= 1, from an
// embedded table through df = 200, Normal beyond.
double t_quantile_995(int df);

struct CiSummary {
  double mean = 0.0;
  double sd = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int n_samples = 0;
  double level = 0.99;
  const char* method = "";  // "normal" (n >= 30) or "student_t"
};

// mean +- q * sd / sqrt(n) with the (n-1)-denominator sample deviation;
// q switches from Student's t to Normal at exactly n = 30. Throws
// std::invalid_argument below 2 samples.
CiSummary confidence_interval(std::span<const double> samples);

double mean_of(std::span<const double> xs);
double sample_sd(std::span<const double> xs);  // n-1 denominator

}  // namespace pocut
