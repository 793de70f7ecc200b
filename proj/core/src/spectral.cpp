#include "sclab/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "json.hpp"

namespace sclab {

Eigen::MatrixXd normalized_laplacian(const Graph& g, std::vector<int>* kept) {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.m));
  std::vector<int> position(static_cast<std::size_t>(g.m), -1);
  for (int v = 0; v < g.m; ++v) {
    if (g.degrees[static_cast<std::size_t>(v)] > 0) {
      position[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  const auto dim = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(dim, dim);
  for (const auto& [u, v] : g.edges) {
    const int i = position[static_cast<std::size_t>(u)];
    const int j = position[static_cast<std::size_t>(v)];
    const double w = -1.0 / std::sqrt(static_cast<double>(g.degrees[static_cast<std::size_t>(u)]) *
                                      static_cast<double>(g.degrees[static_cast<std::size_t>(v)]));
    lap(i, j) = w;
    lap(j, i) = w;
  }
  if (kept != nullptr) *kept = std::move(keep);
  return lap;
}

SpectrumReport spectrum(const Graph& g) {
  SpectrumReport report;
  std::vector<int> kept;
  const Eigen::MatrixXd lap = normalized_laplacian(g, &kept);
  report.isolated_dropped = g.m - static_cast<int>(kept.size());
  report.connected = g.is_connected();

  if (lap.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("spectrum: eigensolver failed to converge");
    }
    report.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  }
  if (report.connected && report.eigenvalues.size() >= 2) {
    report.lambda2 = report.eigenvalues[1];
  }
  return report;
}

GarlandCertificate garland_certificate(const SimplicialComplex& complex, int k) {
  if (k < 2) throw std::invalid_argument("garland_certificate: k must be >= 2");

  GarlandCertificate cert;
  const SimplicialComplex sk = complex.skeleton(k);
  cert.pure = sk.is_pure(k);
  if (!cert.pure) {
    // witness: purity fails exactly when some level has a free face
    for (int j = 1; j <= k && !cert.failing_face; ++j) {
      const std::vector<Simplex> free = sk.free_faces(j);
      if (!free.empty()) cert.failing_face = free.front();
    }
  }

  const double threshold = 1.0 - 1.0 / static_cast<double>(k);
  double worst = std::numeric_limits<double>::infinity();
  bool gaps_ok = true;
  for (const Simplex& sigma : sk.faces(k - 2)) {
    const LinkResult link = sk.link(sigma);
    const SpectrumReport rep = spectrum(Graph::from_skeleton(link.complex));
    if (rep.lambda2 < worst) worst = rep.lambda2;
    if (!rep.connected || rep.lambda2 <= threshold) {
      gaps_ok = false;
      if (!cert.failing_face) cert.failing_face = sigma;
    }
  }
  cert.worst_gap = std::isfinite(worst) ? worst : 0.0;
  cert.certified = cert.pure && gaps_ok && !sk.faces(k - 2).empty();
  return cert;
}

std::string garland_to_json(const GarlandCertificate& cert) {
  nlohmann::json j;
  j["certified"] = cert.certified;
  j["worst_gap"] = cert.worst_gap;
  if (cert.failing_face) {
    j["failing_face"] = std::vector<int>(cert.failing_face->vertices().begin(),
                                         cert.failing_face->vertices().end());
  } else {
    j["failing_face"] = nullptr;
  }
  return j.dump(2);
}

std::vector<LinkStat> link_statistics(const SimplicialComplex& complex, int k) {
  if (k < 2) throw std::invalid_argument("link_statistics: k must be >= 2");
  const SimplicialComplex sk = complex.skeleton(k);
  std::vector<LinkStat> stats;
  stats.reserve(sk.faces(k - 2).size());
  for (const Simplex& sigma : sk.faces(k - 2)) {
    const LinkResult link = sk.link(sigma);
    LinkStat s;
    s.sigma = sigma;
    s.link_vertices = link.complex.vertex_count();
    s.link_edges = link.complex.face_count(1);
    stats.push_back(std::move(s));
  }
  return stats;
}

}  // namespace sclab
