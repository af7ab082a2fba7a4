#pragma once

// Scalar kernels the cone and lattice algorithms are written against.
//
// ExactKernel works on primitive integer vectors with GMP arithmetic and is
// the only backend the verification suites use. FloatKernel runs the same
// algorithms in binary64 on unit vectors with an absolute zero tolerance
// (relative, since every vector it compares is normalized) and exists for
// benchmarking against the exact path.

#include "weakorder/arith.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace weakorder {

struct ExactKernel {
  using Vec = IntVector;
  using Scalar = Integer;

  static std::size_t dim(const Vec& v) { return v.dim(); }
  static Scalar dot(const Vec& a, const Vec& b) { return weakorder::dot(a, b); }
  static int sign(const Scalar& s) { return sgn(s); }
  static bool is_zero(const Vec& v) { return v.is_zero(); }
  static bool same(const Vec& a, const Vec& b) { return a == b; }
  static Vec negated(const Vec& v);
  static Vec unit(std::size_t dim, std::size_t index, int sign) {
    return unit_vector(dim, index, sign);
  }
  /// Primitive representative; throws DegenerateInput on zero.
  static Vec normalize(const Vec& v) { return primitive(v); }
  /// Positive multiple of v - (<v,u>/<u,u>) u. Zero stays zero.
  static Vec reject(const Vec& v, const Vec& u);
  /// Normalized direction of the orthogonal projection of v onto
  /// span(basis), or the zero vector. `basis` must be pairwise orthogonal.
  static Vec project_direction(const Vec& v, std::span<const Vec> basis);
  static std::size_t bits(const Vec& v) { return max_bits(v); }
  static bool is_normalized(const Vec& v) { return is_primitive(v); }
};

using FloatVector = std::vector<double>;

struct FloatKernel {
  using Vec = FloatVector;
  using Scalar = double;

  static constexpr double kTolerance = 1e-9;

  static std::size_t dim(const Vec& v) { return v.size(); }
  static Scalar dot(const Vec& a, const Vec& b);
  static int sign(Scalar s) { return s > kTolerance ? 1 : (s < -kTolerance ? -1 : 0); }
  static bool is_zero(const Vec& v);
  static bool same(const Vec& a, const Vec& b);
  static Vec negated(const Vec& v);
  static Vec unit(std::size_t dim, std::size_t index, int sign);
  /// Unit vector; throws DegenerateInput when the norm is below tolerance.
  static Vec normalize(const Vec& v);
  static Vec reject(const Vec& v, const Vec& u);
  static Vec project_direction(const Vec& v, std::span<const Vec> basis);
  static std::size_t bits(const Vec&) { return 0; }
  static bool is_normalized(const Vec& v);
};

FloatVector to_float(const IntVector& v);

}  // namespace weakorder
