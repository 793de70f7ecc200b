#include "sclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sclab {

GofReport poisson_gof(std::span<const std::int64_t> counts, double mu, double tv_threshold) {
  if (counts.empty()) throw std::invalid_argument("poisson_gof: empty counts");
  if (mu < 0.0) throw std::invalid_argument("poisson_gof: mu must be non-negative");

  // K = smallest value with cdf >= 0.999; pmf computed iteratively.
  int k_cut = 0;
  double pmf = std::exp(-mu);
  double cdf = pmf;
  while (cdf < 0.999) {
    ++k_cut;
    pmf *= mu / k_cut;
    cdf += pmf;
    if (k_cut > 1000000) throw std::runtime_error("poisson_gof: quantile search ran away");
  }

  std::vector<std::int64_t> observed(static_cast<std::size_t>(k_cut) + 2, 0);
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("poisson_gof: negative count");
    const auto bin = static_cast<std::size_t>(std::min<std::int64_t>(c, k_cut + 1));
    ++observed[bin];
  }

  const double total = static_cast<double>(counts.size());
  GofReport report;
  pmf = std::exp(-mu);
  double covered = 0.0;
  for (int j = 0; j <= k_cut; ++j) {
    if (j > 0) pmf *= mu / j;
    covered += pmf;
    const double expected = pmf * total;
    const double obs = static_cast<double>(observed[static_cast<std::size_t>(j)]);
    report.tv_distance += std::abs(obs / total - pmf);
    if (expected > 0.0) {
      report.chi2_stat += (obs - expected) * (obs - expected) / expected;
    } else if (obs > 0.0) {
      report.chi2_stat = std::numeric_limits<double>::infinity();
    }
  }
  const double tail_p = std::max(0.0, 1.0 - covered);
  const double tail_obs = static_cast<double>(observed.back());
  report.tv_distance += std::abs(tail_obs / total - tail_p);
  const double tail_expected = tail_p * total;
  if (tail_expected > 0.0) {
    report.chi2_stat += (tail_obs - tail_expected) * (tail_obs - tail_expected) / tail_expected;
  } else if (tail_obs > 0.0) {
    report.chi2_stat = std::numeric_limits<double>::infinity();
  }
  report.tv_distance *= 0.5;
  report.pass = report.tv_distance < tv_threshold;
  return report;
}

double factorial_moment(std::span<const std::int64_t> samples, int l) {
  if (l < 1) throw std::invalid_argument("factorial_moment: order must be >= 1");
  if (samples.empty()) throw std::invalid_argument("factorial_moment: empty samples");
  double sum = 0.0;
  for (std::int64_t x : samples) {
    double term = 1.0;
    for (int i = 0; i < l; ++i) term *= static_cast<double>(x - i);
    sum += term;
  }
  return sum / static_cast<double>(samples.size());
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty input");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

double standard_error(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("standard_error: empty input");
  return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median: empty input");
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return 0.5 * (xs[mid - 1] + xs[mid]);
}

std::vector<double> to_doubles(std::span<const std::int64_t> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (std::int64_t x : xs) out.push_back(static_cast<double>(x));
  return out;
}

}  // namespace sclab
