#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sclab {

struct GofReport {
  double tv_distance = 0.0;
  double chi2_stat = 0.0;
  bool pass = false;
};

// Total-variation and chi-square distance between the empirical distribution
// of `counts` and Poisson(mu). Bins are the single values 0..K plus one tail
// bin, where K is the smallest value with Poisson cdf >= 0.999.
// pass = tv_distance < tv_threshold. Throws on empty counts, mu < 0, or a
// negative count.
GofReport poisson_gof(std::span<const std::int64_t> counts, double mu,
                      double tv_threshold = 0.1);

// Mean of x(x-1)...(x-l+1) over the samples. l >= 1; throws on empty input.
double factorial_moment(std::span<const std::int64_t> samples, int l);

double mean(std::span<const double> xs);
// Unbiased sample variance (denominator size-1); 0 when fewer than 2 samples.
double sample_variance(std::span<const double> xs);
// sqrt(sample_variance / size): standard error of the mean.
double standard_error(std::span<const double> xs);
double median(std::vector<double> xs);

std::vector<double> to_doubles(std::span<const std::int64_t> xs);

}  // namespace sclab
