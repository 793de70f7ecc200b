#pragma once

#include <cstdint>

#include "sclab/boundary.hpp"

namespace sclab {

// Rank over the rationals, by fraction-free (Bareiss) integer elimination with
// arbitrary-precision intermediates. Exact for any input; intended for desk
// scale matrices.
std::int64_t rank_exact(const SignedSparseMatrix& m);

// Rank over GF(p) for a prime p < 2^31. Always a lower bound on the rational
// rank; equality fails only when p divides an invariant factor, which for a
// random 31-bit prime is vanishingly rare. Used as the bulk fast path.
std::int64_t rank_mod_prime(const SignedSparseMatrix& m, std::uint32_t p);

// Deterministically derives a prime in (2^30, 2^31) from `seed`.
std::uint32_t derive_rank_prime(std::uint64_t seed);

bool is_prime_u64(std::uint64_t n);

}  // namespace sclab
