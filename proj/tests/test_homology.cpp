#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "sclab/betti.hpp"
#include "sclab/boundary.hpp"
#include "sclab/complex.hpp"
#include "sclab/rank.hpp"
#include "sclab/rng.hpp"
#include "sclab/sampler.hpp"

using namespace sclab;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets(3, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
}

SimplicialComplex octahedron_boundary() {
  std::vector<Simplex> facets;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) facets.push_back(Simplex{a, b, c});
  return SimplicialComplex::from_facets(6, facets);
}

std::vector<std::vector<std::int64_t>> dense(const SignedSparseMatrix& m) {
  std::vector<std::vector<std::int64_t>> d(
      static_cast<std::size_t>(m.rows),
      std::vector<std::int64_t>(static_cast<std::size_t>(m.cols), 0));
  for (const auto& e : m.entries) {
    d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
  }
  return d;
}

SignedSparseMatrix transpose(const SignedSparseMatrix& m) {
  SignedSparseMatrix t;
  t.rows = m.cols;
  t.cols = m.rows;
  for (const auto& e : m.entries) t.entries.push_back({e.col, e.row, e.value});
  return t;
}

// Sparse random sign matrix driven by the repo generator.
SignedSparseMatrix random_pm1(std::int64_t rows, std::int64_t cols, std::uint64_t seed) {
  SignedSparseMatrix m;
  m.rows = rows;
  m.cols = cols;
  rng::Stream s{seed};
  std::uint64_t t = 0;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      const double u = s.unit_at(t++);
      if (u < 0.2) m.entries.push_back({r, c, +1});
      else if (u < 0.4) m.entries.push_back({r, c, -1});
    }
  }
  return m;
}

}  // namespace

TEST_CASE("boundary matrix of an edge") {
  auto x = SimplicialComplex::from_facets(2, {Simplex{0, 1}});
  auto m = boundary_matrix(x, 1);
  CHECK(m.rows == 2);
  CHECK(m.cols == 1);
  REQUIRE(m.entries.size() == 2);
  // dense column reads (-1, +1): dropping vertex 0 leaves {1} with sign +,
  // dropping vertex 1 leaves {0} with sign -
  auto d = dense(m);
  CHECK(d[0][0] == -1);
  CHECK(d[1][0] == 1);
}

TEST_CASE("boundary matrix of the full triangle") {
  auto x = SimplicialComplex::from_facets(3, {Simplex{0, 1, 2}});
  auto m = boundary_matrix(x, 2);
  CHECK(m.rows == 3);
  CHECK(m.cols == 1);
  auto d = dense(m);
  // rows are the edges {0,1}, {0,2}, {1,2} in lex order
  CHECK(d[0][0] == 1);   // drop vertex 2: +{0,1}
  CHECK(d[1][0] == -1);  // drop vertex 1: -{0,2}
  CHECK(d[2][0] == 1);   // drop vertex 0: +{1,2}

  // no 3-faces: empty matrix
  auto m3 = boundary_matrix(x, 3);
  CHECK(m3.cols == 0);
  CHECK(m3.entries.empty());
}

TEST_CASE("boundary composed with boundary vanishes") {
  auto check_dd = [](const SimplicialComplex& x) {
    for (int d = 1; d < x.top_dim(); ++d) {
      auto a = dense(boundary_matrix(x, d));
      auto b = dense(boundary_matrix(x, d + 1));
      if (a.empty() || b.empty() || b[0].empty()) continue;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b[0].size(); ++j) {
          std::int64_t acc = 0;
          for (std::size_t l = 0; l < b.size(); ++l) acc += a[i][l] * b[l][j];
          CHECK(acc == 0);
        }
      }
    }
  };
  check_dd(SimplicialComplex::from_facets(3, {Simplex{0, 1, 2}}));
  check_dd(octahedron_boundary());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    check_dd(sample(SampleSpec{10, ProbabilitySchedule::explicit_probs({0.6, 0.6, 0.6}, 3), seed}));
  }
}

TEST_CASE("rank basics") {
  SignedSparseMatrix zero;
  zero.rows = 3;
  zero.cols = 2;
  CHECK(rank_exact(zero) == 0);

  SignedSparseMatrix eye;
  eye.rows = 3;
  eye.cols = 3;
  for (std::int64_t i = 0; i < 3; ++i) eye.entries.push_back({i, i, 1});
  CHECK(rank_exact(eye) == 3);

  auto d1 = boundary_matrix(hollow_triangle(), 1);
  CHECK(d1.rows == 3);
  CHECK(d1.cols == 3);
  CHECK(rank_exact(d1) == 2);
}

TEST_CASE("rank equals transpose rank") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto m = random_pm1(4 + seed % 5, 3 + seed % 7, seed);
    CHECK(rank_exact(m) == rank_exact(transpose(m)));
  }
}

TEST_CASE("prime derivation") {
  const std::uint32_t p = derive_rank_prime(kDefaultPrimeSeed);
  CHECK(p > (1u << 30));
  CHECK(p < (1u << 31));
  CHECK(is_prime_u64(p));
  CHECK(derive_rank_prime(kDefaultPrimeSeed) == p);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::uint32_t q = derive_rank_prime(s);
    CHECK(q > (1u << 30));
    CHECK(is_prime_u64(q));
  }

  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(2147483647ull));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(2147483647ull * 3));
  CHECK_FALSE(is_prime_u64(1000000000));
}

TEST_CASE("modular rank equals exact rank") {
  const std::uint32_t p = derive_rank_prime(kDefaultPrimeSeed);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto m = random_pm1(5 + seed % 6, 5 + (seed * 7) % 6, seed + 100);
    CHECK(rank_mod_prime(m, p) == rank_exact(m));
  }
}

TEST_CASE("betti of known spaces") {
  auto tri = betti(hollow_triangle());
  CHECK(tri.betti == std::vector<std::int64_t>{1, 1});
  CHECK(tri.euler == 0);

  auto full = betti(SimplicialComplex::from_facets(3, {Simplex{0, 1, 2}}));
  CHECK(full.betti == std::vector<std::int64_t>{1, 0, 0});
  CHECK(full.euler == 1);

  auto hollow_tetra = betti(SimplicialComplex::from_facets(
      4, {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}}));
  CHECK(hollow_tetra.betti == std::vector<std::int64_t>{1, 0, 1});
  CHECK(hollow_tetra.euler == 2);

  auto oct = betti(octahedron_boundary());
  CHECK(oct.f == std::vector<std::int64_t>{6, 12, 8});
  CHECK(oct.ranks == std::vector<std::int64_t>{0, 5, 7, 0});
  CHECK(oct.betti == std::vector<std::int64_t>{1, 0, 1});

  auto two_tri = betti(SimplicialComplex::from_facets(
      6, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2},
          Simplex{3, 4}, Simplex{4, 5}, Simplex{3, 5}}));
  CHECK(two_tri.betti == std::vector<std::int64_t>{2, 2});

  // beta_0 counts components, isolated vertices included
  auto sparse = betti(SimplicialComplex::from_facets(4, {Simplex{0, 1}}));
  CHECK(sparse.betti[0] == 3);
}

TEST_CASE("betti methods agree on sampled complexes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);  // 5..10
    const double p1 = 0.3 + 0.05 * static_cast<double>(seed % 9);
    const double p2 = 0.2 + 0.07 * static_cast<double>(seed % 8);
    const int d_max = (seed % 2 == 0) ? 2 : 3;
    std::vector<double> probs{p1, p2};
    if (d_max == 3) probs.push_back(0.5);
    auto x = sample(SampleSpec{n, ProbabilitySchedule::explicit_probs(probs, d_max), seed});

    auto exact = betti(x, RankMethod::Exact);
    auto modp = betti(x, RankMethod::ModPrime, seed);
    CHECK(exact.f == modp.f);
    CHECK(exact.ranks == modp.ranks);
    CHECK(exact.betti == modp.betti);
    CHECK(exact.euler == modp.euler);
    CHECK(exact.prime_used == 0);
    CHECK(modp.prime_used != 0);

    auto just_auto = betti(x);
    CHECK(just_auto.betti == exact.betti);
  }
}

TEST_CASE("euler identity and betti sandwich on samples") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    auto x = sample(SampleSpec{12, ProbabilitySchedule::explicit_probs({0.5, 0.5, 0.5}, 3), seed});
    auto r = betti(x);

    std::int64_t euler = 0;
    for (std::size_t d = 0; d < r.f.size(); ++d) {
      euler += (d % 2 == 0 ? 1 : -1) * r.f[d];
    }
    CHECK(r.euler == euler);

    const int top = static_cast<int>(r.f.size()) - 1;
    for (int d = 0; d <= top; ++d) {
      const std::int64_t fd = r.f[static_cast<std::size_t>(d)];
      const std::int64_t above = d + 1 <= top ? r.f[static_cast<std::size_t>(d) + 1] : 0;
      const std::int64_t below = d >= 1 ? r.f[static_cast<std::size_t>(d) - 1] : 0;
      const std::int64_t bd = r.betti[static_cast<std::size_t>(d)];
      CHECK(bd <= fd);
      CHECK(bd >= fd - above - below);
    }
  }
}

TEST_CASE("betti report json") {
  auto j = nlohmann::json::parse(betti_report_to_json(betti(hollow_triangle())));
  CHECK(j.at("f") == std::vector<std::int64_t>{3, 3});
  CHECK(j.at("ranks") == std::vector<std::int64_t>{2});
  CHECK(j.at("betti") == std::vector<std::int64_t>{1, 1});
  CHECK(j.at("euler") == 0);
  CHECK_FALSE(j.contains("prime"));

  auto modp = betti(hollow_triangle(), RankMethod::ModPrime);
  auto j2 = nlohmann::json::parse(betti_report_to_json(modp));
  CHECK(j2.at("prime") == modp.prime_used);
}

TEST_CASE("face locator") {
  auto oct = octahedron_boundary();
  FaceLocator loc(oct.faces(2));
  CHECK(loc.size() == 8);
  for (std::int64_t i = 0; i < loc.size(); ++i) {
    auto idx = loc.index_of(loc.at(i));
    REQUIRE(idx.has_value());
    CHECK(*idx == i);
  }
  CHECK_FALSE(loc.index_of(Simplex{0, 1, 2}).has_value());
}
