#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclab/complex.hpp"

namespace sclab {

enum class RankMethod {
  Exact,     // fraction-free integer elimination
  ModPrime,  // elimination mod a derived 31-bit prime
  Auto,      // Exact for small matrices, ModPrime beyond
};

// Unreduced Betti numbers over the rationals: betti[0] counts connected
// components. ranks[d] = rank of the boundary map from d-chains, d = 1..top;
// betti[d] = f[d] - ranks[d] - ranks[d+1].
struct BettiReport {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> ranks;  // ranks[0] = 0 by convention
  std::vector<std::int64_t> betti;
  std::int64_t euler = 0;
  std::uint32_t prime_used = 0;  // 0 when every rank came from the exact path
};

inline constexpr std::uint64_t kDefaultPrimeSeed = 0x73636c6162ull;  // "sclab"

BettiReport betti(const SimplicialComplex& x, RankMethod method = RankMethod::Auto,
                  std::uint64_t prime_seed = kDefaultPrimeSeed);

std::string betti_report_to_json(const BettiReport& r);

}  // namespace sclab
