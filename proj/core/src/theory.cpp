#include "sclab/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sclab/combinatorics.hpp"

namespace sclab::theory {

namespace {

constexpr double kEqTol = 1e-12;

void check_probs(int k, std::span<const double> probs, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (static_cast<int>(probs.size()) < k) {
    throw std::invalid_argument(std::string(who) + ": need probabilities up to dimension k");
  }
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string(who) + ": probabilities must lie in [0,1]");
    }
  }
}

// alpha_i * coeff with the convention inf * positive = inf; coeff is never 0
// in the sums below, so no 0 * inf ambiguity arises.
double term(double alpha, double coeff) {
  if (std::isinf(alpha)) return std::numeric_limits<double>::infinity();
  return alpha * coeff;
}

}  // namespace

double expected_face_count(int n, int d, std::span<const double> probs) {
  if (d < 0) throw std::invalid_argument("expected_face_count: d must be >= 0");
  if (d > 0) check_probs(d, probs, "expected_face_count");
  double prod = 1.0;
  for (int i = 1; i <= d; ++i) {
    prod *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(d + 1, i + 1));
  }
  return choose(n, d + 1) * prod;
}

EtaGamma eta_gamma(int k, std::span<const double> probs) {
  check_probs(k, probs, "eta_gamma");
  EtaGamma eg;
  eg.eta = 1.0 - probs[static_cast<std::size_t>(k - 1)];
  for (int i = 1; i <= k - 1; ++i) {
    eg.eta *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(k + 1, i + 1));
  }
  eg.gamma = 1.0;
  for (int i = 1; i <= k; ++i) {
    eg.gamma *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(k, i));
  }
  return eg;
}

double expected_free_faces(int n, int k, std::span<const double> probs) {
  check_probs(k, probs, "expected_free_faces");
  if (n < k) return 0.0;
  double weight = 1.0;
  for (int i = 1; i <= k - 1; ++i) {
    weight *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(k, i + 1));
  }
  const double gamma = eta_gamma(k, probs).gamma;
  return choose(n, k) * weight * std::pow(1.0 - gamma, n - k);
}

double expected_boundaries(int n, int k, std::span<const double> probs) {
  check_probs(k, probs, "expected_boundaries");
  if (n < k + 1) return 0.0;
  const EtaGamma eg = eta_gamma(k, probs);
  return choose(n, k + 1) * eg.eta * std::pow(1.0 - eg.gamma, n - k - 1);
}

LinkParams link_params(int k, std::span<const double> probs) {
  if (k < 2) throw std::invalid_argument("link_params: k must be >= 2");
  check_probs(k, probs, "link_params");
  LinkParams lp;
  lp.p_bar = 1.0;
  for (int i = 1; i <= k - 1; ++i) {
    lp.p_bar *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(k - 1, i));
  }
  lp.p_prime = 1.0;
  for (int i = 1; i <= k; ++i) {
    lp.p_prime *= std::pow(probs[static_cast<std::size_t>(i - 1)], choose(k - 1, i - 1));
  }
  return lp;
}

std::string to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::VanishingCohomology: return "VanishingCohomology";
    case RegimeLabel::NontrivialBettiDominant: return "NontrivialBettiDominant";
    case RegimeLabel::NontrivialViaBoundaries: return "NontrivialViaBoundaries";
    case RegimeLabel::TrivialHomologyLower: return "TrivialHomologyLower";
    case RegimeLabel::Boundary: return "Boundary";
    case RegimeLabel::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

RegimeVerdict classify_regime(const RegimeInput& in) {
  const int k = in.k;
  if (k < 1) throw std::invalid_argument("classify_regime: k must be >= 1");
  if (static_cast<int>(in.alpha.size()) < k) {
    throw std::invalid_argument("classify_regime: need alpha_1..alpha_k");
  }
  for (double a : in.alpha) {
    if (!(a >= 0.0)) throw std::invalid_argument("classify_regime: alpha must be >= 0");
  }

  RegimeVerdict v;
  auto& s = v.sums;
  s.vanishing = 0.0;
  for (int i = 1; i <= k; ++i) s.vanishing += term(in.alpha[static_cast<std::size_t>(i - 1)], choose(k, i));
  s.betti = 0.0;
  s.boundaries = 0.0;
  for (int i = 1; i <= k - 1; ++i) {
    s.betti += term(in.alpha[static_cast<std::size_t>(i - 1)], choose(k - 1, i));
    s.boundaries += term(in.alpha[static_cast<std::size_t>(i - 1)], choose(k + 1, i + 1));
  }

  const double kp1 = static_cast<double>(k + 1);
  if (s.vanishing < 1.0 - kEqTol) {
    v.label = RegimeLabel::VanishingCohomology;
    return v;
  }
  if (std::abs(s.vanishing - 1.0) <= kEqTol) {
    v.label = RegimeLabel::Boundary;
    return v;
  }
  // Above the vanishing window. The boundary-subcomplex mechanism is checked
  // first; when it applies together with the betti-dominant range the verdict
  // stays with the boundaries (the betti label is reserved for p_k = 1, where
  // no unfilled boundary can exist).
  if (!in.pk_is_one && s.boundaries < kp1 - kEqTol) {
    v.label = RegimeLabel::NontrivialViaBoundaries;
    return v;
  }
  if (s.betti < 1.0 - kEqTol) {
    v.label = RegimeLabel::NontrivialBettiDominant;
    return v;
  }
  if (s.boundaries > kp1 + kEqTol) {
    v.label = RegimeLabel::TrivialHomologyLower;
    return v;
  }
  if (!in.pk_is_one && std::abs(s.boundaries - kp1) <= kEqTol) {
    v.label = RegimeLabel::Boundary;
    return v;
  }
  v.label = RegimeLabel::Indeterminate;
  return v;
}

CriticalParams critical_params(int k, std::span<const double> alpha, std::span<const double> b,
                               double c) {
  if (k < 1) throw std::invalid_argument("critical_params: k must be >= 1");
  if (static_cast<int>(alpha.size()) < k || static_cast<int>(b.size()) < k) {
    throw std::invalid_argument("critical_params: need exponents up to dimension k");
  }
  double alpha_sum = 0.0;
  double b_sum = 0.0;
  for (int i = 1; i <= k; ++i) {
    alpha_sum += alpha[static_cast<std::size_t>(i - 1)] * choose(k, i);
    b_sum += b[static_cast<std::size_t>(i - 1)] * choose(k, i);
  }
  if (std::abs(alpha_sum - 1.0) > kEqTol || std::abs(b_sum - 1.0) > kEqTol) {
    throw std::invalid_argument(
        "critical_params: exponents must satisfy sum alpha_i C(k,i) = sum b_i C(k,i) = 1");
  }

  CriticalParams cp;
  cp.k = k;
  cp.c = c;
  cp.rho1 = static_cast<double>(k);
  cp.rho2 = 0.0;
  for (int i = 1; i <= k - 1; ++i) {
    cp.rho1 -= alpha[static_cast<std::size_t>(i - 1)] * choose(k, i + 1);
    cp.rho2 += b[static_cast<std::size_t>(i - 1)] * choose(k, i + 1);
  }
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  cp.mu = std::pow(cp.rho1, cp.rho2) * std::exp(-c) / kfact;
  return cp;
}

double vertex_support_bound(int k, std::span<const double> alpha) {
  if (k < 2) throw std::invalid_argument("vertex_support_bound: k must be >= 2");
  if (static_cast<int>(alpha.size()) < k - 1) {
    throw std::invalid_argument("vertex_support_bound: need alpha_1..alpha_{k-1}");
  }
  double numer = static_cast<double>(k);
  double denom = -1.0;
  for (int i = 1; i <= k - 1; ++i) {
    numer -= alpha[static_cast<std::size_t>(i - 1)] * choose(k, i + 1);
    denom += alpha[static_cast<std::size_t>(i - 1)] * choose(k - 1, i);
  }
  if (!(denom > 0.0)) {
    throw std::invalid_argument("vertex_support_bound: requires sum alpha_i C(k-1,i) > 1");
  }
  return numer / denom;
}

}  // namespace sclab::theory
