#pragma once

#include <span>
#include <string>
#include <vector>

namespace sclab::theory {

// Conventions shared by everything below:
//   * probs[i] is the inclusion probability for dimension i+1 (so probs[0] is
//     the edge probability p1); entries must lie in [0, 1];
//   * alpha[i] is the exponent for dimension i+1 in p_i = n^{-alpha_i};
//     alpha_i = +infinity encodes p_i = 0.

// Expected number of (k-1)-faces contained in no k-face.
double expected_free_faces(int n, int k, std::span<const double> probs);

// Expected number of (k+1)-vertex sets spanning a full k-simplex boundary with
// the k-simplex absent and the lexicographically first (k-1)-face free.
double expected_boundaries(int n, int k, std::span<const double> probs);

// Expected number of d-faces.
double expected_face_count(int n, int d, std::span<const double> probs);

struct LinkParams {
  double p_bar;    // P[vertex lands in the link of a (k-2)-face]
  double p_prime;  // edge probability inside such a link
};
LinkParams link_params(int k, std::span<const double> probs);

struct EtaGamma {
  double eta;    // per-set weight of an unfilled boundary
  double gamma;  // probability a fixed outside vertex fills a cone over a (k-1)-face
};
EtaGamma eta_gamma(int k, std::span<const double> probs);

enum class RegimeLabel {
  VanishingCohomology,
  NontrivialBettiDominant,
  NontrivialViaBoundaries,
  TrivialHomologyLower,
  Boundary,
  Indeterminate,
};

std::string to_string(RegimeLabel label);

struct RegimeInput {
  int k = 2;
  std::vector<double> alpha;  // alpha_1..alpha_k
  bool pk_is_one = false;     // whether p_k = 1 exactly
};

// The three decision sums, stored so a verdict can be re-derived.
struct RegimeSums {
  double vanishing;   // sum_{i<=k}   alpha_i * C(k, i)      vs 1
  double betti;       // sum_{i<=k-1} alpha_i * C(k-1, i)    vs 1
  double boundaries;  // sum_{i<=k-1} alpha_i * C(k+1, i+1)  vs k+1
};

struct RegimeVerdict {
  RegimeLabel label = RegimeLabel::Indeterminate;
  RegimeSums sums;
};

RegimeVerdict classify_regime(const RegimeInput& in);

struct CriticalParams {
  int k = 2;
  double rho1 = 0;  // multiplies log n in the critical window
  double rho2 = 0;  // multiplies log log n
  double c = 0;
  double mu = 0;  // limiting Poisson mean: rho1^rho2 * exp(-c) / k!
};

// Exponent vectors must satisfy sum alpha_i C(k,i) = sum b_i C(k,i) = 1
// (within 1e-12); throws std::invalid_argument otherwise.
CriticalParams critical_params(int k, std::span<const double> alpha, std::span<const double> b,
                               double c);

// Upper bound on the vertex support of a minimal nontrivial cocycle class:
// usable when sum_{i<=k-1} alpha_i C(k-1,i) > 1; throws otherwise.
double vertex_support_bound(int k, std::span<const double> alpha);

}  // namespace sclab::theory
