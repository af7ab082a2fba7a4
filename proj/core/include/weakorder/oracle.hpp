#pragma once

// Independent ground truth.
//
// In the plane every element of the weak order is one of
//
//   EMPTY, FULL = [0, 180),
//   INIT: [0, b) or [0, b]      (starts at the e_1 ray),
//   TAIL: [b, 180) or (b, 180)  (runs up to, not including, the -e_1 ray),
//
// where angles are measured counterclockwise from e_1 and b is a primitive
// direction in the positive half circle [0, 180). The arc operations below
// work on this classification with exact 2x2 determinant signs and never
// touch the recursive join.
//
// Above the plane the only oracle is a membership sampler that looks for a
// ray of X outside Y.

#include "weakorder/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace weakorder {

struct ArcClass {
  enum class Kind { Empty, Full, Init, Tail };

  Kind kind = Kind::Empty;
  /// Primitive direction in [0, 180); meaningful for Init and Tail.
  IntVector boundary;
  /// Whether the boundary ray itself belongs to the arc.
  bool closed = false;

  static ArcClass empty() { return {Kind::Empty, {}, false}; }
  static ArcClass full() { return {Kind::Full, {}, false}; }
  static ArcClass init(IntVector b, bool closed);
  static ArcClass tail(IntVector b, bool closed);

  friend bool operator==(const ArcClass& a, const ArcClass& b);
};

std::string to_string(const ArcClass& arc);

/// True iff x lies on the positive half circle [0, 180).
bool in_positive_half(const IntVector& x);

/// Reads the arc off a planar element's cone frame (v1, v2): the element is
/// { x in [0,180) : <x,v2> < 0 } together with the ray of -v1 when that ray
/// is positive. Requires the standard planar reference.
ArcClass classify(const LatticeElement& x);

bool arc_contains(const ArcClass& arc, const Ray& x);
ArcClass arc_join(const ArcClass& a, const ArcClass& b);
ArcClass arc_meet(const ArcClass& a, const ArcClass& b);
ArcClass arc_complement(const ArcClass& a);
bool arc_leq(const ArcClass& a, const ArcClass& b);

/// Draws n_samples rays from the span of the reference and returns the
/// first one that is a member of x but not of y; nullopt means the
/// inclusion survived sampling.
std::optional<Ray> subset_falsifier(const LatticeElement& x, const LatticeElement& y,
                                    std::size_t n_samples, std::uint64_t seed,
                                    std::int64_t bound = 20);

}  // namespace weakorder
