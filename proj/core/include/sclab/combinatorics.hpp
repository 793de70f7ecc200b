#pragma once

#include <cstdint>

namespace sclab {

// Binomial coefficient as a double. Exact whenever the value fits in 53 bits,
// which covers every count used at desk scale (n in the hundreds, k small).
inline double choose(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  // counting values are integers; round away accumulated float error
  return (r < 9.007199254740992e15) ? static_cast<double>(static_cast<std::int64_t>(r + 0.5)) : r;
}

inline std::int64_t choose_i64(std::int64_t n, std::int64_t k) noexcept {
  return static_cast<std::int64_t>(choose(n, k));
}

}  // namespace sclab
