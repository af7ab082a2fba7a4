#pragma once

// The weak order on maximal pointed convex cones.
//
// An element is a pair (reference E, cone D) of frames over the same
// subspace V. It denotes the set of rays of D n D(E); D(E) plays the role of
// the positive system. At top level E is the standard frame, and the
// elements are exactly the inversion sets D n Phi+ ordered by inclusion.
// Recursive joins run in sublattices whose reference is a restriction of E,
// so the same type covers both.
//
// Throughout, e* is the last reference vector (the support normal of the
// positive cone) and a = -e*. A cone whose last vector is a lies inside the
// reference hyperplane H(e*); one whose last vector is e* contains the open
// positive hemisphere.

#include "weakorder/cone.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace weakorder {

template <class K>
struct LatticeOps;

template <class K>
class BasicElement {
 public:
  using Frame = BasicFrame<K>;

  /// Throws ReferenceMismatch unless both frames span the same subspace.
  BasicElement(Frame reference, Frame cone)
      : reference_(std::move(reference)), cone_(std::move(cone)) {
    if (reference_.ambient_dim() != cone_.ambient_dim())
      throw DimensionMismatch("reference and cone live in different ambient spaces");
    if (reference_.rank() != cone_.rank() ||
        !BasicSubspace<K>::span_of(reference_).contains(BasicSubspace<K>::span_of(cone_)))
      throw ReferenceMismatch("reference and cone frames span different subspaces");
  }

  const Frame& reference() const { return reference_; }
  const Frame& cone() const { return cone_; }
  std::size_t ambient_dim() const { return cone_.ambient_dim(); }
  std::size_t rank() const { return cone_.rank(); }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.reference_ == b.reference_ && a.cone_ == b.cone_;
  }

 private:
  struct Trusted {};
  BasicElement(Trusted, Frame reference, Frame cone)
      : reference_(std::move(reference)), cone_(std::move(cone)) {}

  template <class>
  friend struct LatticeOps;

  Frame reference_;
  Frame cone_;
};

/// Optional instrumentation for join: coefficient size per recursion depth.
struct JoinTrace {
  std::size_t calls = 0;
  std::vector<std::size_t> max_bits_by_depth;

  void record(std::size_t depth, std::size_t bits) {
    if (max_bits_by_depth.size() <= depth) max_bits_by_depth.resize(depth + 1, 0);
    if (bits > max_bits_by_depth[depth]) max_bits_by_depth[depth] = bits;
  }
};

template <class K>
struct LatticeOps {
  using Vec = typename K::Vec;
  using Frame = BasicFrame<K>;
  using Subspace = BasicSubspace<K>;
  using Element = BasicElement<K>;

  static Element make(Frame reference, Frame cone) {
    return Element(typename Element::Trusted{}, std::move(reference), std::move(cone));
  }

  static Element top(const Frame& reference) { return make(reference, reference); }
  static Element bottom(const Frame& reference) { return make(reference, negate<K>(reference)); }

  static bool is_top(const Element& x) { return x.cone() == x.reference(); }
  static bool is_bottom(const Element& x) { return x.cone() == negate<K>(x.reference()); }

  static bool member(const Vec& ray, const Element& x) {
    if (K::dim(ray) != x.ambient_dim()) throw DimensionMismatch("ray has wrong dimension");
    if (K::is_zero(ray)) throw DegenerateInput("member: zero ray");
    return cone_contains<K>(x.cone(), ray) && cone_contains<K>(x.reference(), ray);
  }

  static Element complement(const Element& x) { return make(x.reference(), negate<K>(x.cone())); }

  static Element restrict(const Element& x, const Subspace& sub) {
    return make(weakorder::restrict<K>(x.reference(), sub), weakorder::restrict<K>(x.cone(), sub));
  }

  // Restriction to the reference hyperplane H(e*); its reference is E minus
  // its last vector.
  static Element restrict_to_base(const Element& x) {
    const auto& ref = x.reference();
    auto base_ref = ref.prefix(ref.rank() - 1);
    return make(base_ref,
                detail::restrict_impl<K>(x.cone(), Subspace::span_of(base_ref)));
  }

  static void require_same_reference(const Element& x, const Element& y) {
    if (!(x.reference() == y.reference()))
      throw ReferenceMismatch("elements have different reference frames");
  }

  /// Whether closure(X) is contained in the halfspace H_v = {<x,v> <= 0}.
  static bool closure_contains_halfspace(const Element& x, const Vec& v) {
    if (K::dim(v) != x.ambient_dim()) throw DimensionMismatch("normal has wrong dimension");
    auto w = Subspace::span_of(x.reference()).project_direction(v);
    if (K::is_zero(w) || is_bottom(x)) return true;
    const auto& u = x.cone().last();
    const auto& estar = x.reference().last();
    // Closure is the whole closed positive hemisphere.
    if (K::same(u, estar)) return K::same(w, estar);
    // X lies in H(e*): decide inside the base sublattice.
    if (K::same(u, K::negated(estar))) return closure_contains_halfspace(restrict_to_base(x), w);
    // Otherwise closure(X) = H_u n H_e* on the sphere.
    return halfspace_pair_contains<K>(u, estar, w);
  }

  /// Whether closure(X) is contained in closure(Y).
  static bool closure_contains(const Element& x, const Element& y) {
    require_same_reference(x, y);
    if (is_bottom(x)) return true;
    if (is_bottom(y)) return false;
    const auto& uy = y.cone().last();
    const auto& estar = x.reference().last();
    if (K::same(uy, estar)) return true;
    auto a = K::negated(estar);
    if (K::same(uy, a)) {
      if (!K::same(x.cone().last(), a)) return false;
      return closure_contains(restrict_to_base(x), restrict_to_base(y));
    }
    return closure_contains_halfspace(x, uy);
  }

  static Element join(const Element& x, const Element& y, JoinTrace* trace = nullptr,
                      std::size_t depth = 0) {
    require_same_reference(x, y);
    if (trace) {
      ++trace->calls;
      std::size_t bits = 0;
      for (const auto& v : x.cone().vectors()) bits = std::max(bits, K::bits(v));
      for (const auto& v : y.cone().vectors()) bits = std::max(bits, K::bits(v));
      trace->record(depth, bits);
    }
    if (is_bottom(x)) return y;
    if (is_bottom(y)) return x;
    if (is_top(x)) return x;
    if (is_top(y)) return y;

    // Nested closures: the join agrees with the larger one off its boundary
    // hyperplane, and is the sublattice join on it.
    if (closure_contains(x, y)) return join_on_boundary(x, y, trace, depth);
    if (closure_contains(y, x)) return join_on_boundary(y, x, trace, depth);

    // Every other configuration forces the upper bound to be split by H(e*):
    // join the traces on H(e*) and extend by the open positive side, unless
    // both elements already live inside H(e*).
    const auto& estar = x.reference().last();
    auto a = K::negated(estar);
    auto base = join(restrict_to_base(x), restrict_to_base(y), trace, depth + 1);
    bool both_flat = K::same(x.cone().last(), a) && K::same(y.cone().last(), a);
    return make(x.reference(), base.cone().appended(both_flat ? a : estar));
  }

  static Element meet(const Element& x, const Element& y) {
    return complement(join(complement(x), complement(y)));
  }

  static bool leq(const Element& x, const Element& y) { return join(x, y) == y; }

  static Element join_all(const Frame& reference, std::span<const Element> xs) {
    Element acc = bottom(reference);
    for (const auto& x : xs) {
      if (!(x.reference() == reference))
        throw ReferenceMismatch("join_all: element has a different reference frame");
      acc = join(acc, x);
    }
    return acc;
  }

  static Element meet_all(const Frame& reference, std::span<const Element> xs) {
    Element acc = top(reference);
    for (const auto& x : xs) {
      if (!(x.reference() == reference))
        throw ReferenceMismatch("meet_all: element has a different reference frame");
      acc = meet(acc, x);
    }
    return acc;
  }

 private:
  // closure(X) within closure(Y): restrict everything to H(u_Y), join
  // there, and re-attach u_Y as the last cone vector.
  static Element join_on_boundary(const Element& x, const Element& y, JoinTrace* trace,
                                  std::size_t depth) {
    const auto& uy = y.cone().last();
    auto boundary = Subspace::span_of(y.reference()).hyperplane(uy);
    auto sub_ref = detail::restrict_impl<K>(x.reference(), boundary);
    auto xs = make(sub_ref, detail::restrict_impl<K>(x.cone(), boundary));
    auto ys = make(sub_ref, detail::restrict_impl<K>(y.cone(), boundary));
    auto z = join(xs, ys, trace, depth + 1);
    return make(x.reference(), z.cone().appended(uy));
  }
};

using LatticeElement = BasicElement<ExactKernel>;
using FloatElement = BasicElement<FloatKernel>;
using Lattice = LatticeOps<ExactKernel>;
using FloatLattice = LatticeOps<FloatKernel>;

// Exact-backend free functions.

inline LatticeElement top(const Frame& reference) { return Lattice::top(reference); }
inline LatticeElement bottom(const Frame& reference) { return Lattice::bottom(reference); }
inline bool is_top(const LatticeElement& x) { return Lattice::is_top(x); }
inline bool is_bottom(const LatticeElement& x) { return Lattice::is_bottom(x); }
inline bool member(const Ray& ray, const LatticeElement& x) { return Lattice::member(ray, x); }
inline LatticeElement complement(const LatticeElement& x) { return Lattice::complement(x); }
inline LatticeElement restrict(const LatticeElement& x, const Subspace& sub) {
  return Lattice::restrict(x, sub);
}
inline bool closure_contains_halfspace(const LatticeElement& x, const IntVector& v) {
  return Lattice::closure_contains_halfspace(x, v);
}
bool closure_contains_halfspace(const LatticeElement& x, const Vector& v);
inline bool closure_contains(const LatticeElement& x, const LatticeElement& y) {
  return Lattice::closure_contains(x, y);
}
inline LatticeElement join(const LatticeElement& x, const LatticeElement& y,
                           JoinTrace* trace = nullptr) {
  return Lattice::join(x, y, trace);
}
inline LatticeElement meet(const LatticeElement& x, const LatticeElement& y) {
  return Lattice::meet(x, y);
}
inline bool leq(const LatticeElement& x, const LatticeElement& y) { return Lattice::leq(x, y); }
inline LatticeElement join_all(const Frame& reference, std::span<const LatticeElement> xs) {
  return Lattice::join_all(reference, xs);
}
inline LatticeElement meet_all(const Frame& reference, std::span<const LatticeElement> xs) {
  return Lattice::meet_all(reference, xs);
}

/// Element over the standard reference E_std(dim) with the given cone.
LatticeElement standard_element(Frame cone);

FloatElement to_float(const LatticeElement& x);

}  // namespace weakorder
