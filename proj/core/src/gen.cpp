#include "weakorder/gen.hpp"

#include <limits>
#include <string>

namespace weakorder {

namespace {

constexpr int kMaxFrameAttempts = 1000;

}  // namespace

void GenSpec::validate() const {
  if (ambient_dim < 1) throw DegenerateInput("GenSpec: ambient_dim must be >= 1");
  if (coefficient_bound < 1) throw DegenerateInput("GenSpec: coefficient_bound must be >= 1");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Ray random_ray(Rng& rng, std::size_t dim, std::int64_t bound) {
  IntVector v(dim);
  do {
    for (auto& c : v) c = static_cast<long>(rng.uniform(-bound, bound));
  } while (v.is_zero());
  return primitive(v);
}

Ray random_ray(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_ray(rng, spec.ambient_dim, spec.coefficient_bound);
}

Ray random_ray_in(Rng& rng, const Subspace& sub, std::int64_t bound) {
  if (sub.dim() == 0) throw DegenerateInput("random_ray_in: trivial subspace");
  IntVector v(sub.ambient_dim());
  do {
    for (auto& c : v) c = 0;
    for (const auto& b : sub.basis()) {
      Integer k = static_cast<long>(rng.uniform(-bound, bound));
      for (std::size_t i = 0; i < v.dim(); ++i) v[i] += k * b[i];
    }
  } while (v.is_zero());
  return primitive(v);
}

std::vector<IntVector> random_basis(Rng& rng, std::size_t dim, std::int64_t bound) {
  for (int attempt = 0; attempt < kMaxFrameAttempts; ++attempt) {
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector v(dim);
      for (auto& c : v) c = static_cast<long>(rng.uniform(-bound, bound));
      basis.push_back(std::move(v));
    }
    if (Subspace::spanned_by(dim, basis).dim() == dim) return basis;
  }
  throw DegenerateInput("random_basis: no independent basis after " +
                        std::to_string(kMaxFrameAttempts) + " attempts");
}

Frame random_frame(Rng& rng, std::size_t dim, std::int64_t bound) {
  auto basis = random_basis(rng, dim, bound);
  return Frame(dim, orthogonalize(std::span<const IntVector>(basis)));
}

Frame random_frame(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return random_frame(rng, spec.ambient_dim, spec.coefficient_bound);
}

LatticeElement random_element(Rng& rng, std::size_t dim, std::int64_t bound) {
  return standard_element(random_frame(rng, dim, bound));
}

LatticeElement random_element(const GenSpec& spec) {
  return standard_element(random_frame(spec));
}

namespace {

// Random frame of the first dim-1 coordinates followed by +-e_dim.
LatticeElement split_element(Rng& rng, std::size_t dim, std::int64_t bound, int last_sign) {
  auto base = random_frame(rng, dim - 1, bound);
  std::vector<IntVector> rows;
  for (const auto& v : base.vectors()) {
    IntVector w(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) w[i] = v[i];
    w[dim - 1] = 0;
    rows.push_back(std::move(w));
  }
  rows.push_back(unit_vector(dim, dim - 1, last_sign));
  return standard_element(Frame(dim, std::move(rows)));
}

LatticeElement random_signed_permutation(Rng& rng, std::size_t dim) {
  std::vector<std::size_t> perm(dim);
  std::vector<int> signs(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i + 1;
  for (std::size_t i = dim; i-- > 1;) {
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)));
    std::swap(perm[i], perm[j]);
  }
  for (auto& s : signs) s = rng.uniform(0, 1) ? 1 : -1;
  return signed_permutation_element(perm, signs);
}

}  // namespace

LatticeElement random_structured_element(Rng& rng, std::size_t dim, std::int64_t bound) {
  auto roll = rng.uniform(0, 99);
  if (dim >= 2 && roll < 12) return split_element(rng, dim, bound, 1);
  if (dim >= 2 && roll < 22) return split_element(rng, dim, bound, -1);
  if (roll < 32) return random_signed_permutation(rng, dim);
  if (roll < 55) return random_element(rng, dim, 2);
  if (roll < 62) {
    auto x = random_element(rng, dim, bound);
    auto y = random_element(rng, dim, bound);
    return rng.uniform(0, 1) ? join(x, y) : meet(x, y);
  }
  return random_element(rng, dim, bound);
}

LatticeElement signed_permutation_element(std::span<const std::size_t> perm,
                                          std::span<const int> signs) {
  const std::size_t d = perm.size();
  if (d == 0) throw DegenerateInput("signed permutation: empty permutation");
  if (signs.size() != d) throw DegenerateInput("signed permutation: signs length mismatch");
  std::vector<bool> seen(d, false);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    if (perm[i] < 1 || perm[i] > d || seen[perm[i] - 1])
      throw DegenerateInput("signed permutation: not a permutation of 1.." + std::to_string(d));
    if (signs[i] != 1 && signs[i] != -1)
      throw DegenerateInput("signed permutation: signs must be +1 or -1");
    seen[perm[i] - 1] = true;
    rows.push_back(unit_vector(d, perm[i] - 1, signs[i]));
  }
  return standard_element(Frame(d, std::move(rows)));
}

}  // namespace weakorder
