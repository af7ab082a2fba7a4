#pragma once

// Seeded generators for rays, frames and lattice elements.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded integers are drawn by rejection sampling on the
// raw 64-bit output (std::uniform_int_distribution is implementation
// defined), so every generator here is bit-reproducible across platforms.

#include "weakorder/lattice.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace weakorder {

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t ambient_dim = 2;
  std::int64_t coefficient_bound = 20;

  /// Throws DegenerateInput on ambient_dim < 1 or coefficient_bound < 1.
  void validate() const;
};

/// SplitMix64 finalizer; derives independent stream seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

Ray random_ray(const GenSpec& spec);
Ray random_ray(Rng& rng, std::size_t dim, std::int64_t bound);
/// Primitive nonzero ray inside `sub`, drawn as a bounded integer
/// combination of its basis.
Ray random_ray_in(Rng& rng, const Subspace& sub, std::int64_t bound);

/// Linearly independent bounded integer vectors (full dimension).
std::vector<IntVector> random_basis(Rng& rng, std::size_t dim, std::int64_t bound);

Frame random_frame(const GenSpec& spec);
Frame random_frame(Rng& rng, std::size_t dim, std::int64_t bound);

/// Reference E_std(dim), cone = random_frame.
LatticeElement random_element(const GenSpec& spec);
LatticeElement random_element(Rng& rng, std::size_t dim, std::int64_t bound);

/// Mixture used by the property suites: generic random elements plus the
/// degenerate shapes the join dispatch treats specially (elements inside
/// the reference hyperplane, elements containing the open positive
/// hemisphere, signed permutations, small-coefficient frames that produce
/// coincident boundary traces).
LatticeElement random_structured_element(Rng& rng, std::size_t dim, std::int64_t bound);

/// Cone frame whose i-th vector is signs[i] * e_{perm[i]}; perm is a
/// permutation of 1..d.
LatticeElement signed_permutation_element(std::span<const std::size_t> perm,
                                          std::span<const int> signs);

}  // namespace weakorder
