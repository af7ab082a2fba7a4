#pragma once

// Maximal pointed convex cones represented by canonical frames.
//
// A frame (v_1, ..., v_k) of pairwise orthogonal normalized vectors denotes
//
//   D(F) = { sum c_i v_i : c_m < 0 for m = max{i | c_i != 0} } u {0}
//
// inside span(F). With ExactKernel the vectors are primitive integer
// vectors, which makes the frame a unique representative of its cone:
// two cones are equal iff their frames are equal componentwise.

#include "weakorder/error.hpp"
#include "weakorder/kernel.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace weakorder {

enum class LexSign { Negative = -1, Zero = 0, Positive = 1, OutsideSpan = 2 };

template <class K>
class BasicSubspace;

template <class K>
class BasicFrame {
 public:
  using Vec = typename K::Vec;
  struct Unchecked {};

  /// Validates every frame invariant; throws InvalidFrame naming the
  /// offending vector (or pair of vectors).
  BasicFrame(std::size_t ambient_dim, std::vector<Vec> vectors)
      : ambient_(ambient_dim), vectors_(std::move(vectors)) {
    validate();
  }
  BasicFrame(Unchecked, std::size_t ambient_dim, std::vector<Vec> vectors)
      : ambient_(ambient_dim), vectors_(std::move(vectors)) {}

  /// (-e_1, ..., -e_d): the cone of positive roots.
  static BasicFrame standard(std::size_t dim) {
    std::vector<Vec> vs;
    vs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) vs.push_back(K::unit(dim, i, -1));
    return BasicFrame(Unchecked{}, dim, std::move(vs));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return vectors_.size(); }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const Vec& operator[](std::size_t i) const { return vectors_[i]; }
  const Vec& last() const { return vectors_.back(); }

  /// First k vectors (1 <= k <= rank()).
  BasicFrame prefix(std::size_t k) const {
    if (k == 0 || k > rank()) throw InvalidFrame("prefix length out of range");
    return BasicFrame(Unchecked{}, ambient_,
                      std::vector<Vec>(vectors_.begin(), vectors_.begin() + k));
  }

  /// This frame with v appended; v must be normalized and orthogonal to
  /// every existing vector.
  BasicFrame appended(const Vec& v) const {
    if (K::dim(v) != ambient_) throw DimensionMismatch("appended vector has wrong dimension");
    for (std::size_t i = 0; i < rank(); ++i)
      if (K::sign(K::dot(vectors_[i], v)) != 0)
        throw InvalidFrame("appended vector is not orthogonal to frame vector " +
                           std::to_string(i));
    auto vs = vectors_;
    vs.push_back(v);
    return BasicFrame(Unchecked{}, ambient_, std::move(vs));
  }

  /// Throws InvalidFrame unless every invariant holds.
  void validate() const {
    if (ambient_ == 0) throw InvalidFrame("ambient dimension must be positive");
    if (vectors_.empty()) throw InvalidFrame("frame has no vectors");
    if (vectors_.size() > ambient_) throw InvalidFrame("frame has more vectors than dimensions");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      const auto& v = vectors_[i];
      if (K::dim(v) != ambient_)
        throw InvalidFrame("row " + std::to_string(i) + " has wrong length");
      if (K::is_zero(v)) throw InvalidFrame("row " + std::to_string(i) + " is zero");
      if (!K::is_normalized(v))
        throw InvalidFrame("row " + std::to_string(i) + " is not primitive");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i)
      for (std::size_t j = i + 1; j < vectors_.size(); ++j)
        if (K::sign(K::dot(vectors_[i], vectors_[j])) != 0)
          throw InvalidFrame("rows " + std::to_string(i) + " and " + std::to_string(j) +
                             " are not orthogonal");
  }

  bool is_valid() const {
    try {
      validate();
      return true;
    } catch (const InvalidFrame&) {
      return false;
    }
  }

  friend bool operator==(const BasicFrame& a, const BasicFrame& b) {
    if (a.ambient_ != b.ambient_ || a.rank() != b.rank()) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (!K::same(a.vectors_[i], b.vectors_[i])) return false;
    return true;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> vectors_;
};

/// A linear subspace held as a pairwise orthogonal normalized basis.
template <class K>
class BasicSubspace {
 public:
  using Vec = typename K::Vec;

  /// Span of arbitrary vectors (dependent ones are dropped). May be {0}.
  static BasicSubspace spanned_by(std::size_t ambient_dim, std::span<const Vec> vectors) {
    BasicSubspace s(ambient_dim);
    for (const auto& v : vectors) s.try_extend(v);
    return s;
  }
  static BasicSubspace span_of(const BasicFrame<K>& frame) {
    BasicSubspace s(frame.ambient_dim());
    s.basis_ = frame.vectors();
    return s;
  }
  static BasicSubspace whole(std::size_t ambient_dim) {
    return span_of(BasicFrame<K>::standard(ambient_dim));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool orthogonal_to(const Vec& v) const {
    for (const auto& b : basis_)
      if (K::sign(K::dot(b, v)) != 0) return false;
    return true;
  }

  bool contains(const Vec& v) const {
    Vec r = v;
    for (const auto& b : basis_) r = K::reject(r, b);
    return K::is_zero(r);
  }

  bool contains(const BasicSubspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  /// Normalized direction of the projection of v, or zero.
  Vec project_direction(const Vec& v) const {
    return K::project_direction(v, std::span<const Vec>(basis_));
  }

  /// This subspace intersected with the hyperplane orthogonal to w, for w
  /// a nonzero vector of this subspace.
  BasicSubspace hyperplane(const Vec& w) const {
    BasicSubspace s(ambient_);
    s.try_extend(w);
    for (const auto& b : basis_) s.try_extend(b);
    s.basis_.erase(s.basis_.begin());
    return s;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  explicit BasicSubspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  void try_extend(const Vec& v) {
    if (K::dim(v) != ambient_) throw DimensionMismatch("subspace vector has wrong dimension");
    Vec r = v;
    for (const auto& b : basis_) r = K::reject(r, b);
    if (!K::is_zero(r)) basis_.push_back(K::normalize(r));
  }

  std::size_t ambient_;
  std::vector<Vec> basis_;
};

/// Sign of the last nonzero coordinate of x in the frame's basis, or
/// OutsideSpan when x is not in span(F).
template <class K>
LexSign lex_sign(const typename K::Vec& x, const BasicFrame<K>& frame) {
  if (K::dim(x) != frame.ambient_dim()) throw DimensionMismatch("ray has wrong dimension");
  if (K::is_zero(x)) throw DegenerateInput("lex_sign: zero ray");
  const auto& vs = frame.vectors();
  if (frame.rank() < frame.ambient_dim()) {
    typename K::Vec r = x;
    for (const auto& v : vs) r = K::reject(r, v);
    if (!K::is_zero(r)) return LexSign::OutsideSpan;
  }
  // Coordinate i is <x,v_i>/<v_i,v_i>; only its sign matters.
  for (std::size_t i = vs.size(); i-- > 0;) {
    int s = K::sign(K::dot(x, vs[i]));
    if (s != 0) return s < 0 ? LexSign::Negative : LexSign::Positive;
  }
  return LexSign::Zero;
}

template <class K>
bool cone_contains(const BasicFrame<K>& frame, const typename K::Vec& x) {
  return lex_sign<K>(x, frame) == LexSign::Negative;
}

/// Normal of the unique supporting halfspace: the closure of D(F) is
/// { x in span(F) : <x, v_k> <= 0 }.
template <class K>
const typename K::Vec& support_normal(const BasicFrame<K>& frame) {
  return frame.last();
}

/// Frame of -D(F).
template <class K>
BasicFrame<K> negate(const BasicFrame<K>& frame) {
  std::vector<typename K::Vec> vs;
  vs.reserve(frame.rank());
  for (const auto& v : frame.vectors()) vs.push_back(K::negated(v));
  return BasicFrame<K>(typename BasicFrame<K>::Unchecked{}, frame.ambient_dim(), std::move(vs));
}

namespace detail {

template <class K>
BasicFrame<K> restrict_impl(const BasicFrame<K>& frame, const BasicSubspace<K>& sub) {
  if (sub.dim() == frame.rank()) return frame;
  const auto& last = frame.last();
  if (sub.orthogonal_to(last)) return restrict_impl<K>(frame.prefix(frame.rank() - 1), sub);
  // The closure of D(F) n S is the halfspace of S cut out by the projected
  // support normal; recurse on the boundary hyperplane inside S.
  auto w = sub.project_direction(last);
  auto boundary = sub.hyperplane(w);
  if (boundary.dim() == 0)
    return BasicFrame<K>(typename BasicFrame<K>::Unchecked{}, frame.ambient_dim(), {w});
  return restrict_impl<K>(frame, boundary).appended(w);
}

}  // namespace detail

/// Canonical frame of D(F) n S for a nonzero subspace S of span(F).
template <class K>
BasicFrame<K> restrict(const BasicFrame<K>& frame, const BasicSubspace<K>& sub) {
  if (sub.ambient_dim() != frame.ambient_dim())
    throw DimensionMismatch("restrict: subspace lives in a different ambient space");
  if (sub.dim() == 0) throw DegenerateInput("restrict: trivial subspace");
  if (!BasicSubspace<K>::span_of(frame).contains(sub))
    throw NotInSpan("restrict: subspace is not contained in the frame's span");
  return detail::restrict_impl<K>(frame, sub);
}

/// Whether H_u n H_e is contained in H_v, where H_w = { x : <x,w> <= 0 }.
/// u and e must be linearly independent.
template <class K>
bool halfspace_pair_contains(const typename K::Vec& u, const typename K::Vec& e,
                             const typename K::Vec& v) {
  if (K::is_zero(v)) return true;
  using Scalar = typename K::Scalar;
  Scalar uu = K::dot(u, u);
  Scalar ee = K::dot(e, e);
  Scalar ue = K::dot(u, e);
  if (K::sign(Scalar(uu * ee - ue * ue)) == 0)
    throw DegenerateInput("halfspace_pair_contains: normals are linearly dependent");
  // v must lie in span(u, e); otherwise some x in H_u n H_e has <x,v> > 0.
  auto e_perp = K::reject(e, u);
  if (!K::is_zero(K::reject(K::reject(v, u), e_perp))) return false;
  // v = alpha u + beta e; the Gram determinant is positive.
  Scalar vu = K::dot(v, u);
  Scalar ve = K::dot(v, e);
  Scalar alpha = vu * ee - ve * ue;
  Scalar beta = uu * ve - ue * vu;
  return K::sign(alpha) >= 0 && K::sign(beta) >= 0;
}

using Frame = BasicFrame<ExactKernel>;
using Subspace = BasicSubspace<ExactKernel>;
using FloatFrame = BasicFrame<FloatKernel>;
using FloatSubspace = BasicSubspace<FloatKernel>;

/// Exact convenience overload accepting rational vectors.
bool halfspace_pair_contains(const Vector& u, const Vector& e, const Vector& v);

/// Frame generated by an arbitrary ordered basis (same cone, canonical form).
Frame frame_from_basis(std::span<const Vector> basis);
Frame frame_from_basis(std::span<const IntVector> basis);

/// Leading-coefficient sign of x with respect to an arbitrary (not
/// necessarily orthogonal) ordered basis, by solving the linear system
/// exactly. Independent of the frame machinery; used as a test oracle.
LexSign basis_lex_sign(const IntVector& x, std::span<const IntVector> basis);

FloatFrame to_float(const Frame& frame);

}  // namespace weakorder
