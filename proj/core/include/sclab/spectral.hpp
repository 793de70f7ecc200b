#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sclab/complex.hpp"
#include "sclab/graph.hpp"

namespace sclab {

struct SpectrumReport {
  // Eigenvalues of the normalized Laplacian over the non-isolated vertices,
  // ascending; one per non-isolated vertex.
  std::vector<double> eigenvalues;
  // Second-smallest eigenvalue when the whole graph is connected, else 0.
  double lambda2 = 0.0;
  bool connected = false;
  int isolated_dropped = 0;
};

// L = I - D^{-1/2} A D^{-1/2} restricted to vertices of positive degree.
// When `kept` is non-null it receives the original ids of the retained
// vertices, in increasing order (= row/column order of the matrix).
Eigen::MatrixXd normalized_laplacian(const Graph& g, std::vector<int>* kept = nullptr);

SpectrumReport spectrum(const Graph& g);

struct GarlandCertificate {
  bool certified = false;
  // Purity of the k-skeleton: every face lies in a face of dimension k.
  bool pure = false;
  // Smallest link gap seen; 0 when a link is disconnected or there is no link.
  double worst_gap = 0.0;
  // First face failing the check: an uncovered face when purity fails,
  // otherwise the (k-2)-face whose link is disconnected or has a small gap.
  std::optional<Simplex> failing_face;
};

// Local-to-global vanishing check in dimension k-1: certified when the
// k-skeleton is pure and every (k-2)-face link is connected with
// lambda2 > 1 - 1/k. A certificate implies betti[k-1] == 0. k >= 2.
GarlandCertificate garland_certificate(const SimplicialComplex& complex, int k);

std::string garland_to_json(const GarlandCertificate& cert);

struct LinkStat {
  Simplex sigma;
  std::int64_t link_vertices = 0;
  std::int64_t link_edges = 0;
};

// One record per (k-2)-face of the k-skeleton. k >= 2.
std::vector<LinkStat> link_statistics(const SimplicialComplex& complex, int k);

}  // namespace sclab
