#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sclab/complex.hpp"
#include "sclab/simplex.hpp"

namespace sclab {

// Dense index for the faces of one dimension, in lexicographic order.
// Wraps a level of a SimplicialComplex; the level must outlive the locator.
class FaceLocator {
 public:
  explicit FaceLocator(const std::vector<Simplex>& level) : level_(&level) {}

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(level_->size()); }
  std::optional<std::int64_t> index_of(const Simplex& s) const;
  const Simplex& at(std::int64_t i) const { return (*level_)[static_cast<std::size_t>(i)]; }

 private:
  const std::vector<Simplex>* level_;
};

// Sparse integer matrix with entries in {-1, +1}; coordinate list, one entry
// per (row, col) pair, ordered column-major by construction.
struct SignedSparseMatrix {
  struct Entry {
    std::int64_t row;
    std::int64_t col;
    int value;
  };
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Entry> entries;
};

// Boundary operator from d-chains to (d-1)-chains. Column j is the boundary of
// the j-th d-face (lex order); dropping the i-th vertex contributes (-1)^i at
// the row of that facet. d >= 1.
SignedSparseMatrix boundary_matrix(const SimplicialComplex& x, int d);

}  // namespace sclab
