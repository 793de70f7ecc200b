#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sclab/simplex.hpp"

namespace sclab {

struct LinkResult;

// Finite simplicial complex on the vertex set {0, ..., n-1}.
//
// Invariants:
//   * every vertex is a 0-face regardless of the facet list (isolated vertices
//     are real faces);
//   * faces are downward closed;
//   * within each dimension faces are stored sorted lexicographically, without
//     duplicates.  The position of a face in its level is its dense index.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the downward closure of the given facets. Vertex ids must lie in
  // [0, n). Re-adding a face that is already implied is a no-op.
  static SimplicialComplex from_facets(int n, const std::vector<Simplex>& facets);

  // Internal factory: levels[d] holds the d-faces, already closed, sorted and
  // unique, with levels[0] = all n singletons. Validated in debug builds only.
  static SimplicialComplex from_levels(int n, std::vector<std::vector<Simplex>> levels);

  int vertex_count() const noexcept { return n_; }

  // Largest d with at least one d-face; 0 for a complex of bare vertices,
  // -1 only when n == 0.
  int top_dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }

  const std::vector<Simplex>& faces(int d) const;
  std::int64_t face_count(int d) const;
  std::vector<std::int64_t> f_vector() const;

  bool contains(const Simplex& s) const;
  // Dense index of `s` within its dimension, if present.
  std::optional<std::int64_t> face_index(const Simplex& s) const;

  SimplicialComplex skeleton(int k) const;

  // Link of sigma (which must be a face): faces tau with tau ∪ sigma a face.
  // Vertices are relabeled densely in increasing order of their old ids.
  LinkResult link(const Simplex& sigma) const;

  // True iff every face lies in some D-face (and no face exceeds dimension D).
  bool is_pure(int D) const;

  // (k-1)-faces contained in no k-face, in lexicographic order. k >= 1.
  std::vector<Simplex> free_faces(int k) const;
  std::int64_t count_free_faces(int k) const;

  // Number of (k+1)-vertex sets spanning a fully present k-simplex boundary
  // whose k-simplex is absent and whose lexicographically first (k-1)-face is
  // free. k >= 1.
  std::int64_t unfilled_boundaries(int k) const;

  // Partition of the (k-1)-faces into strong components: the transitive
  // closure of "shares a (k-2)-dimensional intersection". Groups are ordered
  // by their lexicographically smallest member.
  std::vector<std::vector<Simplex>> strong_components(int k) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Simplex>> levels_;  // levels_[d] = sorted d-faces

  std::vector<bool> covered_flags(int k) const;  // (k-1)-faces lying in a k-face
};

struct LinkResult {
  SimplicialComplex complex;
  std::vector<int> old_to_new;  // indexed by old vertex id, -1 if absent
  std::vector<int> new_to_old;  // size = link vertex count
};

}  // namespace sclab
