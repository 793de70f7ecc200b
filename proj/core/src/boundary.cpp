#include "sclab/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclab {

std::optional<std::int64_t> FaceLocator::index_of(const Simplex& s) const {
  auto it = std::lower_bound(level_->begin(), level_->end(), s);
  if (it == level_->end() || *it != s) return std::nullopt;
  return static_cast<std::int64_t>(it - level_->begin());
}

SignedSparseMatrix boundary_matrix(const SimplicialComplex& x, int d) {
  if (d < 1) throw std::invalid_argument("boundary_matrix: d must be >= 1");
  const auto& rows_level = x.faces(d - 1);
  const auto& cols_level = x.faces(d);

  SignedSparseMatrix m;
  m.rows = static_cast<std::int64_t>(rows_level.size());
  m.cols = static_cast<std::int64_t>(cols_level.size());
  m.entries.reserve(cols_level.size() * static_cast<std::size_t>(d + 1));

  FaceLocator locator(rows_level);
  for (std::size_t j = 0; j < cols_level.size(); ++j) {
    const Simplex& g = cols_level[j];
    int sign = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto row = locator.index_of(g.facet(i));
      if (!row) throw std::logic_error("boundary_matrix: complex is not downward closed");
      m.entries.push_back({*row, static_cast<std::int64_t>(j), sign});
      sign = -sign;
    }
  }
  return m;
}

}  // namespace sclab
