#include "sclab/schedule.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "sclab/theory.hpp"

namespace sclab {

ProbabilitySchedule ProbabilitySchedule::explicit_probs(std::vector<double> probs, int d_max) {
  for (double v : probs) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("schedule: explicit probabilities must lie in [0,1]");
    }
  }
  ProbabilitySchedule s;
  s.kind = ScheduleKind::Explicit;
  s.p = std::move(probs);
  s.d_max = d_max;
  if (d_max < 1) throw std::invalid_argument("schedule: d_max must be >= 1");
  return s;
}

ProbabilitySchedule ProbabilitySchedule::power_law(std::vector<double> alpha, int d_max) {
  for (double a : alpha) {
    if (!(a >= 0.0)) throw std::invalid_argument("schedule: alpha must be >= 0 (or +inf)");
  }
  ProbabilitySchedule s;
  s.kind = ScheduleKind::PowerLaw;
  s.alpha = std::move(alpha);
  s.d_max = d_max;
  if (d_max < 1) throw std::invalid_argument("schedule: d_max must be >= 1");
  return s;
}

ProbabilitySchedule ProbabilitySchedule::critical(int k, std::vector<double> alpha,
                                                  std::vector<double> b, double c, int d_max) {
  // validates the two constraint sums
  (void)theory::critical_params(k, alpha, b, c);
  ProbabilitySchedule s;
  s.kind = ScheduleKind::Critical;
  s.k = k;
  s.alpha = std::move(alpha);
  s.b = std::move(b);
  s.c = c;
  s.d_max = d_max;
  if (d_max < 1) throw std::invalid_argument("schedule: d_max must be >= 1");
  return s;
}

double ProbabilitySchedule::prob_at_raw(int i, int n) const {
  if (i < 1) throw std::invalid_argument("prob_at: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("prob_at: n must be >= 1");
  switch (kind) {
    case ScheduleKind::Explicit:
      if (i > static_cast<int>(p.size())) return 0.0;
      return p[static_cast<std::size_t>(i - 1)];
    case ScheduleKind::PowerLaw: {
      if (i > static_cast<int>(alpha.size())) return 0.0;
      const double a = alpha[static_cast<std::size_t>(i - 1)];
      if (std::isinf(a)) return 0.0;
      return std::pow(static_cast<double>(n), -a);
    }
    case ScheduleKind::Critical: {
      if (i > static_cast<int>(alpha.size())) return 0.0;
      if (n <= 2) throw std::invalid_argument("prob_at: critical schedule needs n >= 3");
      const theory::CriticalParams cp = theory::critical_params(k, alpha, b, c);
      const double base = cp.rho1 * std::log(n) + cp.rho2 * std::log(std::log(n)) + c;
      if (!(base > 0.0)) {
        throw std::invalid_argument("prob_at: critical window is non-positive at this n");
      }
      const double a = alpha[static_cast<std::size_t>(i - 1)];
      const double bi = b[static_cast<std::size_t>(i - 1)];
      if (std::isinf(a)) return 0.0;
      return std::pow(base, bi) * std::pow(static_cast<double>(n), -a);
    }
  }
  return 0.0;
}

double ProbabilitySchedule::prob_at(int i, int n) const {
  const double raw = prob_at_raw(i, n);
  return raw > 1.0 ? 1.0 : raw;
}

std::vector<double> ProbabilitySchedule::probs_up_to(int k_max, int n) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (int i = 1; i <= k_max; ++i) out.push_back(prob_at(i, n));
  return out;
}

namespace {

// JSON has no infinity literal; +inf exponents round-trip as the string "inf".
nlohmann::json alpha_json(const std::vector<double>& alpha) {
  nlohmann::json arr = nlohmann::json::array();
  for (double a : alpha) {
    if (std::isinf(a)) {
      arr.push_back("inf");
    } else {
      arr.push_back(a);
    }
  }
  return arr;
}

std::vector<double> alpha_from(const nlohmann::json& arr) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& el : arr) {
    if (el.is_string()) {
      if (el.get<std::string>() != "inf") {
        throw std::invalid_argument("schedule: alpha entries must be numbers or \"inf\"");
      }
      out.push_back(std::numeric_limits<double>::infinity());
    } else {
      out.push_back(el.get<double>());
    }
  }
  return out;
}

nlohmann::json schedule_json(const ProbabilitySchedule& s) {
  nlohmann::json j;
  switch (s.kind) {
    case ScheduleKind::Explicit:
      j["type"] = "explicit";
      j["p"] = s.p;
      break;
    case ScheduleKind::PowerLaw:
      j["type"] = "power_law";
      j["alpha"] = alpha_json(s.alpha);
      break;
    case ScheduleKind::Critical:
      j["type"] = "critical";
      j["k"] = s.k;
      j["alpha"] = alpha_json(s.alpha);
      j["b"] = s.b;
      j["c"] = s.c;
      break;
  }
  j["d_max"] = s.d_max;
  return j;
}

ProbabilitySchedule schedule_from(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  const int d_max = j.at("d_max").get<int>();
  if (type == "explicit") {
    return ProbabilitySchedule::explicit_probs(j.at("p").get<std::vector<double>>(), d_max);
  }
  if (type == "power_law") {
    return ProbabilitySchedule::power_law(alpha_from(j.at("alpha")), d_max);
  }
  if (type == "critical") {
    return ProbabilitySchedule::critical(j.at("k").get<int>(), alpha_from(j.at("alpha")),
                                         j.at("b").get<std::vector<double>>(),
                                         j.value("c", 0.0), d_max);
  }
  throw std::invalid_argument("schedule: unknown type '" + type + "'");
}

}  // namespace

std::string schedule_to_json(const ProbabilitySchedule& s) { return schedule_json(s).dump(); }

ProbabilitySchedule schedule_from_json_text(const std::string& text) {
  return schedule_from(nlohmann::json::parse(text));
}

std::string sample_spec_to_json(const SampleSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["seed"] = spec.seed;
  j["schedule"] = schedule_json(spec.schedule);
  return j.dump();
}

SampleSpec sample_spec_from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SampleSpec spec;
  spec.n = j.at("n").get<int>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.schedule = schedule_from(j.at("schedule"));
  return spec;
}

}  // namespace sclab
