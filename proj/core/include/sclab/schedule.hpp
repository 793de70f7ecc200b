#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sclab {

enum class ScheduleKind { Explicit, PowerLaw, Critical };

// Per-dimension inclusion probabilities for the sampler.
//
//   Explicit: p[i-1] is the probability for dimension i, 0 beyond the list.
//   PowerLaw: p_i = n^{-alpha[i-1]}, 0 beyond the list (alpha = +inf allowed).
//   Critical: p_i = (rho1 log n + rho2 log log n + c)^{b_i} * n^{-alpha_i}
//             for the first k dimensions, 0 beyond; the exponent vectors must
//             satisfy sum alpha_i C(k,i) = sum b_i C(k,i) = 1. Values above 1
//             are clamped to 1 (prob_at_raw exposes the unclamped value).
struct ProbabilitySchedule {
  ScheduleKind kind = ScheduleKind::Explicit;
  std::vector<double> p;      // Explicit
  std::vector<double> alpha;  // PowerLaw, Critical
  std::vector<double> b;      // Critical
  double c = 0.0;             // Critical
  int k = 0;                  // Critical: target dimension
  int d_max = 1;              // highest dimension the sampler will populate

  static ProbabilitySchedule explicit_probs(std::vector<double> probs, int d_max);
  static ProbabilitySchedule power_law(std::vector<double> alpha, int d_max);
  static ProbabilitySchedule critical(int k, std::vector<double> alpha, std::vector<double> b,
                                      double c, int d_max);

  // Inclusion probability for dimension i (1-based) at a given n.
  double prob_at(int i, int n) const;
  double prob_at_raw(int i, int n) const;

  // p_1..p_k evaluated at n (clamped), for feeding the closed-form layer.
  std::vector<double> probs_up_to(int k_max, int n) const;
};

struct SampleSpec {
  int n = 0;
  ProbabilitySchedule schedule;
  std::uint64_t seed = 0;
};

std::string schedule_to_json(const ProbabilitySchedule& s);
ProbabilitySchedule schedule_from_json_text(const std::string& text);
std::string sample_spec_to_json(const SampleSpec& spec);
SampleSpec sample_spec_from_json_text(const std::string& text);

}  // namespace sclab
