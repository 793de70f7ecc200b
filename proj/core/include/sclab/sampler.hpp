#pragma once

#include <cstdint>

#include "sclab/complex.hpp"
#include "sclab/schedule.hpp"

namespace sclab {

// Samples the multi-parameter random complex X(n, p_1, p_2, ...).
//
// The 1-skeleton is an Erdos-Renyi graph with probability p_1; inductively,
// every k-simplex whose full boundary is present is included independently
// with probability p_k, up to dimension d_max.
//
// Determinism contract (tested):
//   * dimensions are processed in ascending order;
//   * within dimension d, candidate simplices are visited in lexicographic
//     order of their vertex tuples, and only simplices whose boundary is fully
//     present count as candidates;
//   * the t-th candidate of dimension d is included iff
//     rng::Stream{rng::mix(spec.seed, d)}.unit_at(t) < p_d; candidates skipped
//     for an absent boundary consume no randomness.
SimplicialComplex sample(const SampleSpec& spec);

// Special cases, expressed through the same sampler:
//   X(n, p, 0, ...), X(n, 1, ..., 1, p at dimension k, 0, ...), X(n, p, 1, ..., 1).
SimplicialComplex sample_erdos_renyi(int n, int d_max, double p, std::uint64_t seed);
SimplicialComplex sample_linial_meshulam(int n, int d_max, int k, double p, std::uint64_t seed);
SimplicialComplex sample_clique(int n, int d_max, double p, std::uint64_t seed);

}  // namespace sclab
