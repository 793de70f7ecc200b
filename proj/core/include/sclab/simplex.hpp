#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sclab {

// A face: strictly increasing tuple of vertex ids. dim() = size - 1.
// Comparison is lexicographic on the vertex tuple.
class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    validate();
  }

  Simplex(std::initializer_list<int> vertices) : verts_(vertices) { validate(); }

  // Fast path for callers that already guarantee a strictly increasing tuple.
  static Simplex unchecked(std::vector<int> vertices) noexcept {
    Simplex s;
    s.verts_ = std::move(vertices);
    return s;
  }

  int dim() const noexcept { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const noexcept { return verts_.size(); }
  bool empty() const noexcept { return verts_.empty(); }

  int operator[](std::size_t i) const { return verts_[i]; }
  int back() const { return verts_.back(); }
  std::span<const int> vertices() const noexcept { return verts_; }
  const std::vector<int>& verts() const noexcept { return verts_; }

  // Face obtained by dropping the i-th vertex.
  Simplex facet(std::size_t drop) const {
    std::vector<int> v;
    v.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (i != drop) v.push_back(verts_[i]);
    }
    return unchecked(std::move(v));
  }

  // Superset test: does this face contain every vertex of `other`?
  bool contains(const Simplex& other) const noexcept {
    std::size_t i = 0;
    for (int v : other.verts_) {
      while (i < verts_.size() && verts_[i] < v) ++i;
      if (i == verts_.size() || verts_[i] != v) return false;
      ++i;
    }
    return true;
  }

  bool has_vertex(int v) const noexcept {
    for (int u : verts_) {
      if (u == v) return true;
      if (u > v) return false;
    }
    return false;
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] < 0) throw std::invalid_argument("Simplex: negative vertex id");
      if (i > 0 && verts_[i - 1] >= verts_[i]) {
        throw std::invalid_argument("Simplex: vertices must be strictly increasing");
      }
    }
  }

  std::vector<int> verts_;
};

}  // namespace sclab
