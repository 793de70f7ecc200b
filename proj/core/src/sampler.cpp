#include "sclab/sampler.hpp"

#include <algorithm>
#include <bit>
#include <iostream>
#include <stdexcept>
#include <vector>

#include "sclab/rng.hpp"

namespace sclab {

namespace {

// Row-per-vertex adjacency bitset; words laid out contiguously.
struct AdjacencyBits {
  int n;
  int words;
  std::vector<std::uint64_t> bits;

  explicit AdjacencyBits(int vertex_count)
      : n(vertex_count), words((vertex_count + 63) / 64),
        bits(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(words), 0) {}

  void set(int u, int v) {
    bits[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v >> 6)] |=
        1ull << (v & 63);
  }
  const std::uint64_t* row(int u) const {
    return &bits[static_cast<std::size_t>(u) * words];
  }
};

}  // namespace

SimplicialComplex sample(const SampleSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  const int d_max = spec.schedule.d_max;
  if (d_max < 1) throw std::invalid_argument("sample: d_max must be >= 1");

  bool warned_clamp = false;
  auto prob_for = [&](int d) {
    const double raw = spec.schedule.prob_at_raw(d, n);
    if (raw > 1.0 && !warned_clamp) {
      std::cerr << "sample: schedule exceeds 1 at dimension " << d << " (n=" << n
                << "), clamping\n";
      warned_clamp = true;
    }
    return raw > 1.0 ? 1.0 : raw;
  };

  std::vector<std::vector<Simplex>> levels(1);
  levels[0].reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) levels[0].push_back(Simplex::unchecked({v}));

  // Dimension 1: every pair is a candidate; t is the pair's lex index.
  AdjacencyBits adj(n);
  {
    const double p1 = prob_for(1);
    const rng::Stream stream{rng::mix(spec.seed, 1)};
    std::vector<Simplex> edges;
    std::uint64_t t = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++t) {
        if (p1 <= 0.0) continue;
        if (p1 >= 1.0 || stream.unit_at(t) < p1) {
          edges.push_back(Simplex::unchecked({u, v}));
          adj.set(u, v);
          adj.set(v, u);
        }
      }
    }
    levels.push_back(std::move(edges));
  }

  const int words = adj.words;
  std::vector<int> scratch;
  for (int d = 2; d <= d_max; ++d) {
    const double pd = prob_for(d);
    if (levels[static_cast<std::size_t>(d - 1)].empty()) break;
    if (pd <= 0.0) {
      // no simplex can enter; candidates would consume indexed draws that
      // nothing else observes, so the enumeration is skipped outright
      break;
    }
    const rng::Stream stream{rng::mix(spec.seed, static_cast<std::uint64_t>(d))};
    const auto& below = levels[static_cast<std::size_t>(d - 1)];
    std::vector<Simplex> added;
    std::uint64_t t = 0;

    if (d == 2) {
      // candidates over each edge (u,v): common neighbours w > v
      for (const Simplex& e : below) {
        const int u = e[0];
        const int v = e[1];
        const std::uint64_t* ru = adj.row(u);
        const std::uint64_t* rv = adj.row(v);
        const int first_word = (v + 1) >> 6;
        for (int w0 = first_word; w0 < words; ++w0) {
          std::uint64_t m = ru[w0] & rv[w0];
          if (w0 == first_word) {
            const int shift = (v + 1) & 63;
            if (shift != 0) m &= ~((1ull << shift) - 1);
          }
          while (m != 0) {
            const int w = (w0 << 6) + std::countr_zero(m);
            m &= m - 1;
            if (pd >= 1.0 || stream.unit_at(t) < pd) {
              added.push_back(Simplex::unchecked({u, v, w}));
            }
            ++t;
          }
        }
      }
    } else {
      // candidates over each (d-1)-face f: vertices w > max(f) closing every
      // facet-with-w; membership checked against the sorted level below
      for (const Simplex& f : below) {
        for (int w = f.back() + 1; w < n; ++w) {
          bool complete = true;
          for (std::size_t drop = 0; drop < f.size() && complete; ++drop) {
            scratch.clear();
            for (std::size_t i = 0; i < f.size(); ++i) {
              if (i != drop) scratch.push_back(f[i]);
            }
            scratch.push_back(w);
            const Simplex probe = Simplex::unchecked(scratch);
            if (!std::binary_search(below.begin(), below.end(), probe)) complete = false;
          }
          if (!complete) continue;
          if (pd >= 1.0 || stream.unit_at(t) < pd) {
            scratch.assign(f.vertices().begin(), f.vertices().end());
            scratch.push_back(w);
            added.push_back(Simplex::unchecked(scratch));
          }
          ++t;
        }
      }
      // enumeration is lex by construction: faces ascend, then w ascends
    }
    if (added.empty()) {
      break;
    }
    levels.push_back(std::move(added));
  }

  return SimplicialComplex::from_levels(n, std::move(levels));
}

SimplicialComplex sample_erdos_renyi(int n, int d_max, double p, std::uint64_t seed) {
  SampleSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.schedule = ProbabilitySchedule::explicit_probs({p}, d_max);
  return sample(spec);
}

SimplicialComplex sample_linial_meshulam(int n, int d_max, int k, double p, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_linial_meshulam: k must be >= 1");
  if (d_max < k) throw std::invalid_argument("sample_linial_meshulam: d_max must be >= k");
  std::vector<double> probs(static_cast<std::size_t>(k), 1.0);
  probs.back() = p;
  SampleSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.schedule = ProbabilitySchedule::explicit_probs(std::move(probs), d_max);
  return sample(spec);
}

SimplicialComplex sample_clique(int n, int d_max, double p, std::uint64_t seed) {
  std::vector<double> probs(static_cast<std::size_t>(d_max), 1.0);
  probs.front() = p;
  SampleSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.schedule = ProbabilitySchedule::explicit_probs(std::move(probs), d_max);
  return sample(spec);
}

}  // namespace sclab
