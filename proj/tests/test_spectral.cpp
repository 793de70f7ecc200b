#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "sclab/betti.hpp"
#include "sclab/graph.hpp"
#include "sclab/rng.hpp"
#include "sclab/sampler.hpp"
#include "sclab/spectral.hpp"
#include "sclab/stats.hpp"

using namespace sclab;

namespace {

Graph random_graph(int m, double p, std::uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  rng::Stream s{seed};
  std::uint64_t t = 0;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (s.unit_at(t++) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(m, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction") {
  Graph g(4, {{2, 0}, {1, 3}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(g.degrees == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS(Graph(3, {{0, 0}}));
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph(3, {{0, 3}}));

  auto k4 = Graph::complete(4);
  CHECK(k4.edge_count() == 6);
  auto p3 = Graph::path(3);
  CHECK(p3.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  auto x = SimplicialComplex::from_facets(4, {Simplex{0, 1, 2}});
  auto g2 = Graph::from_skeleton(x);
  CHECK(g2.m == 4);
  CHECK(g2.edge_count() == 3);
}

TEST_CASE("components") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(g.component_labels() == std::vector<int>{0, 0, 0, 3, 3});
  CHECK(g.component_count() == 2);
  CHECK_FALSE(g.is_connected());

  CHECK(Graph::path(4).is_connected());
  CHECK_FALSE(Graph(0, {}).is_connected());
  CHECK(Graph(1, {}).is_connected());
  CHECK_FALSE(Graph(3, {}).is_connected());
  CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());  // vertex 2 isolated
}

TEST_CASE("normalized laplacian entries") {
  auto k2 = normalized_laplacian(Graph::complete(2));
  CHECK(k2(0, 0) == doctest::Approx(1.0));
  CHECK(k2(0, 1) == doctest::Approx(-1.0));
  CHECK(k2(1, 0) == doctest::Approx(-1.0));
  CHECK(k2(1, 1) == doctest::Approx(1.0));

  auto p3 = normalized_laplacian(Graph::path(3));
  const double r = -1.0 / std::sqrt(2.0);
  CHECK(p3(0, 0) == doctest::Approx(1.0));
  CHECK(p3(0, 1) == doctest::Approx(r));
  CHECK(p3(1, 2) == doctest::Approx(r));
  CHECK(p3(0, 2) == doctest::Approx(0.0));

  // isolated vertices are dropped; `kept` reports who stayed
  std::vector<int> kept;
  Graph g(3, {{0, 2}});
  auto l = normalized_laplacian(g, &kept);
  CHECK(kept == std::vector<int>{0, 2});
  CHECK(l.rows() == 2);
  CHECK(l(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("spectrum closed forms") {
  auto k2 = spectrum(Graph::complete(2));
  REQUIRE(k2.eigenvalues.size() == 2);
  CHECK(k2.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(k2.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(k2.connected);
  CHECK(k2.lambda2 == doctest::Approx(2.0).epsilon(1e-9));

  for (int m = 2; m <= 8; ++m) {
    auto r = spectrum(Graph::complete(m));
    CHECK(r.connected);
    const double expect = static_cast<double>(m) / static_cast<double>(m - 1);
    CHECK(std::abs(r.lambda2 - expect) < 1e-9);
    // the nonzero eigenvalue has multiplicity m-1
    for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
      CHECK(std::abs(r.eigenvalues[i] - expect) < 1e-9);
    }
  }

  auto p3 = spectrum(Graph::path(3));
  REQUIRE(p3.eigenvalues.size() == 3);
  CHECK(std::abs(p3.eigenvalues[0] - 0.0) < 1e-9);
  CHECK(std::abs(p3.eigenvalues[1] - 1.0) < 1e-9);
  CHECK(std::abs(p3.eigenvalues[2] - 2.0) < 1e-9);
  CHECK(p3.lambda2 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("spectrum of disconnected graphs") {
  auto two_edges = spectrum(Graph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(two_edges.connected);
  CHECK(two_edges.lambda2 == 0.0);  // disconnected: gap pinned to zero
  REQUIRE(two_edges.eigenvalues.size() == 4);
  CHECK(std::abs(two_edges.eigenvalues[1] - 0.0) < 1e-9);
  CHECK(std::abs(two_edges.eigenvalues[2] - 2.0) < 1e-9);

  auto isolated = spectrum(Graph(3, {}));
  CHECK_FALSE(isolated.connected);
  CHECK(isolated.eigenvalues.empty());
  CHECK(isolated.isolated_dropped == 3);

  auto partial = spectrum(Graph(3, {{0, 1}}));
  CHECK_FALSE(partial.connected);  // vertex 2 not in the component
  CHECK(partial.isolated_dropped == 1);
  CHECK(partial.lambda2 == 0.0);
}

TEST_CASE("spectrum sanity on random graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 4 + static_cast<int>(seed % 9);
    const double p = 0.15 + 0.08 * static_cast<double>(seed % 10);
    Graph g = random_graph(m, p, seed);
    auto r = spectrum(g);

    double sum = 0.0;
    int zeros = 0;
    for (double ev : r.eigenvalues) {
      CHECK(ev >= -1e-9);
      CHECK(ev <= 2.0 + 1e-9);
      sum += ev;
      if (std::abs(ev) < 1e-8) ++zeros;
    }
    // trace of the laplacian = number of non-isolated vertices
    const int kept = m - r.isolated_dropped;
    CHECK(sum == doctest::Approx(static_cast<double>(kept)).epsilon(1e-8));
    // zero multiplicity = components of the non-isolated part
    CHECK(zeros == g.component_count() - r.isolated_dropped);
  }
}

TEST_CASE("garland certificate on pinned complexes") {
  auto full2 = SimplicialComplex::from_facets(4, {Simplex{0, 1, 2, 3}}).skeleton(2);
  auto cert = garland_certificate(full2, 2);
  CHECK(cert.certified);
  CHECK(cert.pure);
  // every vertex link is K3 with gap 3/2
  CHECK(cert.worst_gap == doctest::Approx(1.5).epsilon(1e-9));
  CHECK_FALSE(cert.failing_face.has_value());

  auto hollow = SimplicialComplex::from_facets(
      3, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  auto cert2 = garland_certificate(hollow, 2);
  CHECK_FALSE(cert2.certified);
  CHECK_FALSE(cert2.pure);
  REQUIRE(cert2.failing_face.has_value());
  CHECK(*cert2.failing_face == Simplex{0, 1});

  auto two_full = SimplicialComplex::from_facets(6, {Simplex{0, 1, 2}, Simplex{3, 4, 5}});
  auto cert3 = garland_certificate(two_full, 2);
  CHECK(cert3.certified);
  CHECK(cert3.worst_gap == doctest::Approx(2.0).epsilon(1e-9));  // links are K2

  CHECK_THROWS(garland_certificate(full2, 1));
}

TEST_CASE("garland json") {
  auto full2 = SimplicialComplex::from_facets(4, {Simplex{0, 1, 2, 3}}).skeleton(2);
  auto j = nlohmann::json::parse(garland_to_json(garland_certificate(full2, 2)));
  CHECK(j.at("certified") == true);
  CHECK(j.at("worst_gap").get<double>() == doctest::Approx(1.5));
  CHECK(j.at("failing_face").is_null());

  auto hollow = SimplicialComplex::from_facets(
      3, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  auto j2 = nlohmann::json::parse(garland_to_json(garland_certificate(hollow, 2)));
  CHECK(j2.at("certified") == false);
  CHECK(j2.at("failing_face") == std::vector<int>{0, 1});
}

TEST_CASE("certificate implies vanishing betti") {
  // sparse regime: certificates are rare here, but any that fire must be sound
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto x = sample(SampleSpec{25, ProbabilitySchedule::power_law({0.2, 0.1}, 2), seed});
    auto cert = garland_certificate(x, 2);
    if (!cert.certified) continue;
    auto r = betti(x);
    CHECK(r.betti[1] == 0);
  }

  // dense regime: links are near-complete graphs, so the gap condition holds
  // often and both branches of the implication get exercised
  int certified = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto x = sample(SampleSpec{16, ProbabilitySchedule::explicit_probs({0.85, 0.9}, 2), seed});
    auto cert = garland_certificate(x, 2);
    if (!cert.certified) continue;
    ++certified;
    auto r = betti(x);
    CHECK(r.betti[1] == 0);
  }
  CHECK(certified > 0);
}

TEST_CASE("link statistics") {
  auto full2 = SimplicialComplex::from_facets(4, {Simplex{0, 1, 2, 3}}).skeleton(2);
  auto stats = link_statistics(full2, 2);
  REQUIRE(stats.size() == 4);
  for (const auto& st : stats) {
    CHECK(st.link_vertices == 3);
    CHECK(st.link_edges == 3);  // each vertex link is K3
  }

  auto hollow = SimplicialComplex::from_facets(
      3, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  auto stats2 = link_statistics(hollow, 2);
  REQUIRE(stats2.size() == 3);
  for (const auto& st : stats2) {
    CHECK(st.link_vertices == 2);
    CHECK(st.link_edges == 0);
  }

  CHECK_THROWS(link_statistics(hollow, 1));
}

TEST_CASE("link law monte carlo") {
  const int n = 30, trials = 60;
  const double p1 = 0.8, p2 = 0.8;
  auto schedule = ProbabilitySchedule::explicit_probs({p1, p2}, 2);

  std::vector<double> mean_l(trials);
  std::vector<double> edge_freq(trials);
  for (int t = 0; t < trials; ++t) {
    auto x = sample(SampleSpec{n, schedule, rng::mix(900, static_cast<std::uint64_t>(t))});
    auto stats = link_statistics(x, 2);
    double lsum = 0.0, esum = 0.0, pairs = 0.0;
    for (const auto& st : stats) {
      lsum += static_cast<double>(st.link_vertices);
      esum += static_cast<double>(st.link_edges);
      pairs += static_cast<double>(st.link_vertices * (st.link_vertices - 1)) / 2.0;
    }
    mean_l[static_cast<std::size_t>(t)] = lsum / static_cast<double>(stats.size());
    edge_freq[static_cast<std::size_t>(t)] = pairs > 0 ? esum / pairs : 0.0;
  }

  // vertices land in a link with probability p1; link edges appear with p1*p2
  const double expect_l = static_cast<double>(n - 1) * p1;
  CHECK(std::abs(mean(mean_l) - expect_l) <= 4.0 * standard_error(mean_l));
  const double expect_e = p1 * p2;
  CHECK(std::abs(mean(edge_freq) - expect_e) <= 4.0 * standard_error(edge_freq));
}
