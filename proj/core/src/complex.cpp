#include "sclab/complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace sclab {

namespace {

std::vector<Simplex> singletons(int n) {
  std::vector<Simplex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.push_back(Simplex::unchecked({v}));
  return out;
}

// Disjoint-set over dense indices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Simplex>& facets) {
  if (n < 0) throw std::invalid_argument("from_facets: n must be non-negative");
  int top = 0;
  for (const Simplex& f : facets) {
    if (f.empty()) throw std::invalid_argument("from_facets: empty facet");
    if (f.back() >= n) throw std::invalid_argument("from_facets: vertex id out of range");
    top = std::max(top, f.dim());
  }

  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(top) + 1);
  if (n > 0) levels[0] = singletons(n);

  // Enumerate all non-empty vertex subsets of each facet.
  std::vector<int> scratch;
  for (const Simplex& f : facets) {
    const auto verts = f.vertices();
    const std::size_t m = verts.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      scratch.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1u << i)) scratch.push_back(verts[i]);
      }
      if (scratch.size() <= 1) continue;  // vertices are seeded above
      levels[scratch.size() - 1].push_back(Simplex::unchecked(scratch));
    }
  }
  for (auto& level : levels) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
  if (n == 0) levels.clear();

  SimplicialComplex x;
  x.n_ = n;
  x.levels_ = std::move(levels);
  return x;
}

SimplicialComplex SimplicialComplex::from_levels(int n, std::vector<std::vector<Simplex>> levels) {
  while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
#ifndef NDEBUG
  if (n > 0) {
    assert(!levels.empty() && levels[0].size() == static_cast<std::size_t>(n));
    for (std::size_t d = 0; d < levels.size(); ++d) {
      assert(std::is_sorted(levels[d].begin(), levels[d].end()));
      for (const Simplex& s : levels[d]) {
        assert(s.dim() == static_cast<int>(d));
        assert(s.back() < n);
      }
    }
  }
#endif
  SimplicialComplex x;
  x.n_ = n;
  x.levels_ = std::move(levels);
  return x;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  static const std::vector<Simplex> kEmpty;
  if (d < 0 || d >= static_cast<int>(levels_.size())) return kEmpty;
  return levels_[static_cast<std::size_t>(d)];
}

std::int64_t SimplicialComplex::face_count(int d) const {
  return static_cast<std::int64_t>(faces(d).size());
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f;
  f.reserve(levels_.size());
  for (const auto& level : levels_) f.push_back(static_cast<std::int64_t>(level.size()));
  if (f.empty()) f.push_back(0);
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return face_index(s).has_value();
}

std::optional<std::int64_t> SimplicialComplex::face_index(const Simplex& s) const {
  const auto& level = faces(s.dim());
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::int64_t>(it - level.begin());
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  if (k < 0) throw std::invalid_argument("skeleton: k must be non-negative");
  if (k >= top_dim()) return *this;
  std::vector<std::vector<Simplex>> levels(levels_.begin(),
                                           levels_.begin() + static_cast<std::size_t>(k) + 1);
  return from_levels(n_, std::move(levels));
}

LinkResult SimplicialComplex::link(const Simplex& sigma) const {
  if (!contains(sigma)) throw std::invalid_argument("link: sigma is not a face");

  std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
  std::vector<int> new_to_old;

  // Link vertices come from cofaces of sigma one dimension up.
  for (const Simplex& g : faces(sigma.dim() + 1)) {
    if (!g.contains(sigma)) continue;
    for (int v : g.vertices()) {
      if (!sigma.has_vertex(v)) {
        if (old_to_new[static_cast<std::size_t>(v)] == -1) {
          old_to_new[static_cast<std::size_t>(v)] = 0;  // placeholder
          new_to_old.push_back(v);
        }
      }
    }
  }
  std::sort(new_to_old.begin(), new_to_old.end());
  for (std::size_t i = 0; i < new_to_old.size(); ++i) {
    old_to_new[static_cast<std::size_t>(new_to_old[i])] = static_cast<int>(i);
  }

  const int link_n = static_cast<int>(new_to_old.size());
  std::vector<std::vector<Simplex>> levels;
  if (link_n > 0) {
    levels.resize(1);
    levels[0] = singletons(link_n);
  }

  std::vector<int> scratch;
  for (int d = sigma.dim() + 2; d <= top_dim(); ++d) {
    for (const Simplex& g : faces(d)) {
      if (!g.contains(sigma)) continue;
      scratch.clear();
      for (int v : g.vertices()) {
        if (!sigma.has_vertex(v)) scratch.push_back(old_to_new[static_cast<std::size_t>(v)]);
      }
      // relabeling is monotone, so scratch is already increasing
      const std::size_t dim = scratch.size() - 1;
      if (levels.size() <= dim) levels.resize(dim + 1);
      levels[dim].push_back(Simplex::unchecked(scratch));
    }
  }
  for (std::size_t d = 1; d < levels.size(); ++d) {
    std::sort(levels[d].begin(), levels[d].end());
  }

  LinkResult r;
  r.complex = from_levels(link_n, std::move(levels));
  r.old_to_new = std::move(old_to_new);
  r.new_to_old = std::move(new_to_old);
  return r;
}

bool SimplicialComplex::is_pure(int D) const {
  if (D < 0) throw std::invalid_argument("is_pure: D must be non-negative");
  if (top_dim() > D) return false;
  if (top_dim() < D) return false;  // no D-faces at all, so nothing covers the vertices
  // March downward: a d-face is covered iff it is a facet of a covered (d+1)-face.
  std::vector<bool> covered(faces(D).size(), true);
  for (int d = D - 1; d >= 0; --d) {
    const auto& level = faces(d);
    std::vector<bool> next(level.size(), false);
    const auto& above = faces(d + 1);
    for (std::size_t j = 0; j < above.size(); ++j) {
      if (!covered[j]) continue;
      for (std::size_t i = 0; i < above[j].size(); ++i) {
        auto idx = face_index(above[j].facet(i));
        next[static_cast<std::size_t>(*idx)] = true;
      }
    }
    for (bool c : next) {
      if (!c) return false;
    }
    covered = std::move(next);
  }
  return true;
}

std::vector<bool> SimplicialComplex::covered_flags(int k) const {
  const auto& level = faces(k - 1);
  std::vector<bool> covered(level.size(), false);
  for (const Simplex& g : faces(k)) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto idx = face_index(g.facet(i));
      covered[static_cast<std::size_t>(*idx)] = true;
    }
  }
  return covered;
}

std::vector<Simplex> SimplicialComplex::free_faces(int k) const {
  if (k < 1) throw std::invalid_argument("free_faces: k must be >= 1");
  const auto& level = faces(k - 1);
  const std::vector<bool> covered = covered_flags(k);
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (!covered[i]) out.push_back(level[i]);
  }
  return out;
}

std::int64_t SimplicialComplex::count_free_faces(int k) const {
  if (k < 1) throw std::invalid_argument("count_free_faces: k must be >= 1");
  const std::vector<bool> covered = covered_flags(k);
  std::int64_t n_free = 0;
  for (bool c : covered) {
    if (!c) ++n_free;
  }
  return n_free;
}

std::int64_t SimplicialComplex::unfilled_boundaries(int k) const {
  if (k < 1) throw std::invalid_argument("unfilled_boundaries: k must be >= 1");
  const auto& level = faces(k - 1);
  if (level.empty()) return 0;
  const std::vector<bool> covered = covered_flags(k);

  // Candidate (k+1)-sets are built as f ∪ {w} with f a (k-1)-face and
  // w > max(f); the lexicographically first (k-1)-face of the candidate is
  // then exactly f, so the free-face condition prunes on f directly.
  std::int64_t count = 0;
  std::vector<int> scratch;
  for (std::size_t fi = 0; fi < level.size(); ++fi) {
    if (covered[fi]) continue;
    const Simplex& f = level[fi];
    for (int w = f.back() + 1; w < n_; ++w) {
      bool boundary_complete = true;
      for (std::size_t drop = 0; drop < f.size() && boundary_complete; ++drop) {
        scratch.clear();
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != drop) scratch.push_back(f[i]);
        }
        scratch.push_back(w);
        if (!contains(Simplex::unchecked(scratch))) boundary_complete = false;
      }
      if (!boundary_complete) continue;
      scratch.assign(f.vertices().begin(), f.vertices().end());
      scratch.push_back(w);
      if (contains(Simplex::unchecked(scratch))) continue;  // the k-simplex got filled
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<Simplex>> SimplicialComplex::strong_components(int k) const {
  if (k < 1) throw std::invalid_argument("strong_components: k must be >= 1");
  const auto& level = faces(k - 1);
  if (level.empty()) return {};

  UnionFind uf(level.size());
  // Two (k-1)-faces are adjacent iff they share k-1 vertices; group faces by
  // each of their (k-2)-subfaces and unite within a group.
  std::map<std::vector<int>, int> first_seen;
  std::vector<int> sub;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const Simplex& f = level[i];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != drop) sub.push_back(f[j]);
      }
      auto [it, inserted] = first_seen.try_emplace(sub, static_cast<int>(i));
      if (!inserted) uf.unite(it->second, static_cast<int>(i));
    }
  }

  std::map<int, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < level.size(); ++i) {
    groups[uf.find(static_cast<int>(i))].push_back(level[i]);
  }
  std::vector<std::vector<Simplex>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace sclab
