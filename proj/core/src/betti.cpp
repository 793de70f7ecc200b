#include "sclab/betti.hpp"

#include <stdexcept>

#include "json.hpp"

#include "sclab/boundary.hpp"
#include "sclab/rank.hpp"

namespace sclab {

namespace {

// Beyond this many cells the exact path's big-integer growth is not worth it.
constexpr std::int64_t kAutoExactCellLimit = 20000;

}  // namespace

BettiReport betti(const SimplicialComplex& x, RankMethod method, std::uint64_t prime_seed) {
  BettiReport r;
  r.f = x.f_vector();
  const int top = x.top_dim();

  r.ranks.assign(static_cast<std::size_t>(top) + 2, 0);
  for (int d = 1; d <= top; ++d) {
    const SignedSparseMatrix m = boundary_matrix(x, d);
    RankMethod used = method;
    if (method == RankMethod::Auto) {
      used = (m.rows * m.cols <= kAutoExactCellLimit) ? RankMethod::Exact : RankMethod::ModPrime;
    }
    if (used == RankMethod::Exact) {
      r.ranks[static_cast<std::size_t>(d)] = rank_exact(m);
    } else {
      if (r.prime_used == 0) r.prime_used = derive_rank_prime(prime_seed);
      r.ranks[static_cast<std::size_t>(d)] = rank_mod_prime(m, r.prime_used);
    }
  }

  r.betti.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    r.betti[static_cast<std::size_t>(d)] = r.f[static_cast<std::size_t>(d)] -
                                           r.ranks[static_cast<std::size_t>(d)] -
                                           r.ranks[static_cast<std::size_t>(d) + 1];
  }

  std::int64_t euler_f = 0;
  std::int64_t euler_b = 0;
  for (int d = 0; d <= top; ++d) {
    const std::int64_t sign = (d % 2 == 0) ? 1 : -1;
    euler_f += sign * r.f[static_cast<std::size_t>(d)];
    euler_b += sign * r.betti[static_cast<std::size_t>(d)];
  }
  if (euler_f != euler_b) {
    throw std::logic_error("betti: Euler characteristic mismatch between f-vector and ranks");
  }
  r.euler = euler_f;
  return r;
}

std::string betti_report_to_json(const BettiReport& r) {
  nlohmann::json j;
  j["f"] = r.f;
  j["ranks"] = std::vector<std::int64_t>(r.ranks.begin() + 1, r.ranks.end() - 1);
  j["betti"] = r.betti;
  j["euler"] = r.euler;
  if (r.prime_used != 0) j["prime"] = r.prime_used;
  return j.dump();
}

}  // namespace sclab
