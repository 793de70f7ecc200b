#pragma once

#include <cstdint>

// Counter-based randomness used everywhere in this project.
//
// The generator is splitmix64 evaluated in counter form: the t-th word of a
// stream with seed s is  finalize(s + (t+1)*GAMMA).  Because each word is a
// pure function of (s, t), consumers can skip draws or evaluate them in any
// order without perturbing other draws.
//
// Derivation conventions (relied on by tests and by the experiment harness):
//   stream for dimension d of a sampled complex:  seed = mix(master_seed, d)
//   per-trial seed in an experiment:              mix(mix(master_seed, n), trial)
// mix(s, i) is the same function as word_at: finalize(s + (i+1)*GAMMA).

namespace sclab::rng {

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t index) noexcept {
  return finalize(seed + kGamma * (index + 1));
}

// Uniform in [0, 1): top 53 bits of the word.
constexpr double to_unit(std::uint64_t word) noexcept {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

struct Stream {
  std::uint64_t seed = 0;

  constexpr std::uint64_t word_at(std::uint64_t t) const noexcept {
    return mix(seed, t);
  }
  constexpr double unit_at(std::uint64_t t) const noexcept {
    return to_unit(word_at(t));
  }
};

}  // namespace sclab::rng
