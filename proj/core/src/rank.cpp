#include "sclab/rank.hpp"

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sclab/rng.hpp"

namespace sclab {

namespace {

using boost::multiprecision::cpp_int;

// x mod p via Barrett reduction; p is invariant across millions of updates and
// hardware division would dominate the elimination otherwise.
struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor(2^64 / p)

  explicit Barrett(std::uint64_t prime) : p(prime), magic(~0ull / prime) {}

  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t derive_rank_prime(std::uint64_t seed) {
  for (std::uint64_t t = 0;; ++t) {
    std::uint64_t candidate = (1ull << 30) + (rng::mix(seed, t) & ((1ull << 30) - 1));
    candidate |= 1;
    if (is_prime_u64(candidate)) return static_cast<std::uint32_t>(candidate);
  }
}

std::int64_t rank_exact(const SignedSparseMatrix& m) {
  const std::int64_t rows = m.rows;
  const std::int64_t cols = m.cols;
  if (rows == 0 || cols == 0 || m.entries.empty()) return 0;

  std::vector<cpp_int> a(static_cast<std::size_t>(rows * cols));
  for (const auto& e : m.entries) a[static_cast<std::size_t>(e.row * cols + e.col)] = e.value;

  auto at = [&](std::int64_t i, std::int64_t j) -> cpp_int& {
    return a[static_cast<std::size_t>(i * cols + j)];
  };

  std::int64_t rank = 0;
  cpp_int prev = 1;
  for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (std::int64_t j = col; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const cpp_int pivot = at(rank, col);
    for (std::int64_t i = rank + 1; i < rows; ++i) {
      const cpp_int lead = at(i, col);
      for (std::int64_t j = col + 1; j < cols; ++j) {
        // one-step fraction-free update; division by the previous pivot is exact
        at(i, j) = (pivot * at(i, j) - lead * at(rank, j)) / prev;
      }
      at(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::int64_t rank_mod_prime(const SignedSparseMatrix& m, std::uint32_t p) {
  std::int64_t rows = m.rows;
  std::int64_t cols = m.cols;
  if (rows == 0 || cols == 0 || m.entries.empty()) return 0;

  // Orient so the pivot dimension is the smaller one.
  const bool transpose = rows > cols;
  if (transpose) std::swap(rows, cols);

  std::vector<std::uint32_t> a(static_cast<std::size_t>(rows * cols), 0);
  for (const auto& e : m.entries) {
    const std::int64_t r = transpose ? e.col : e.row;
    const std::int64_t c = transpose ? e.row : e.col;
    a[static_cast<std::size_t>(r * cols + c)] = e.value > 0 ? 1u : p - 1u;
  }

  const Barrett barrett(p);
  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < cols && rank < rows; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t i = rank; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i * cols + col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + piv * cols + col, a.begin() + (piv + 1) * cols,
                       a.begin() + rank * cols + col);
    }
    const std::uint32_t* src = &a[static_cast<std::size_t>(rank * cols)];
    const std::uint64_t inv = mod_pow(src[col], p - 2, p);
    for (std::int64_t i = rank + 1; i < rows; ++i) {
      std::uint32_t* dst = &a[static_cast<std::size_t>(i * cols)];
      if (dst[col] == 0) continue;
      // dst += (p - dst[col] * inv) * src, elementwise mod p
      const std::uint64_t f = p - barrett.reduce(dst[col] * inv);
      for (std::int64_t j = col; j < cols; ++j) {
        const std::uint64_t t = dst[j] + barrett.reduce(f * src[j]);
        dst[j] = static_cast<std::uint32_t>(t >= p ? t - p : t);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace sclab
