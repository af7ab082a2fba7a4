#include "weakorder/oracle.hpp"

#include "weakorder/gen.hpp"

namespace weakorder {

namespace {

Integer cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Sign of angle(a) - angle(b) for directions on [0, 180).
int compare_angle(const IntVector& a, const IntVector& b) { return -sgn(cross(a, b)); }

void check_boundary(const IntVector& b) {
  if (b.dim() != 2 || !is_primitive(b) || !in_positive_half(b))
    throw DegenerateInput("arc boundary must be a primitive direction in [0, 180)");
}

bool is_zero_angle(const IntVector& b) { return b[1] == 0; }

// Whether the upper end of INIT a lies at or below the upper end of INIT b;
// [0,b) sits just below [0,b].
bool init_within(const ArcClass& a, const ArcClass& b) {
  int c = compare_angle(a.boundary, b.boundary);
  return c < 0 || (c == 0 && (!a.closed || b.closed));
}

bool tail_within(const ArcClass& a, const ArcClass& b) {
  int c = compare_angle(a.boundary, b.boundary);
  return c > 0 || (c == 0 && (!a.closed || b.closed));
}

}  // namespace

ArcClass ArcClass::init(IntVector b, bool closed) {
  check_boundary(b);
  if (!closed && is_zero_angle(b)) throw DegenerateInput("[0, 0) is empty; use ArcClass::empty");
  return {Kind::Init, std::move(b), closed};
}

ArcClass ArcClass::tail(IntVector b, bool closed) {
  check_boundary(b);
  if (closed && is_zero_angle(b)) throw DegenerateInput("[0, 180) is full; use ArcClass::full");
  return {Kind::Tail, std::move(b), closed};
}

bool operator==(const ArcClass& a, const ArcClass& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ArcClass::Kind::Empty || a.kind == ArcClass::Kind::Full) return true;
  return a.boundary == b.boundary && a.closed == b.closed;
}

std::string to_string(const ArcClass& arc) {
  switch (arc.kind) {
    case ArcClass::Kind::Empty: return "EMPTY";
    case ArcClass::Kind::Full: return "FULL";
    case ArcClass::Kind::Init:
      return "INIT[0," + to_string(arc.boundary) + (arc.closed ? "]" : ")");
    case ArcClass::Kind::Tail:
      return std::string("TAIL") + (arc.closed ? "[" : "(") + to_string(arc.boundary) + ",180)";
  }
  return "?";
}

bool in_positive_half(const IntVector& x) { return x[1] > 0 || (x[1] == 0 && x[0] > 0); }

ArcClass classify(const LatticeElement& x) {
  if (x.ambient_dim() != 2 || !(x.reference() == Frame::standard(2)))
    throw DimensionMismatch("classify: needs a planar element over the standard reference");
  const auto& v1 = x.cone()[0];
  const auto& v2 = x.cone()[1];
  IntVector minus_v1{-v1[0], -v1[1]};
  const Integer& p = v2[0];
  const Integer& q = v2[1];

  if (p == 0) {
    // v2 = (0, -1): open part is (0, 180). v2 = (0, 1): open part is empty.
    IntVector zero_dir{1, 0};
    bool has_zero = minus_v1 == zero_dir;
    if (q < 0) return has_zero ? ArcClass::full() : ArcClass::tail(zero_dir, false);
    return has_zero ? ArcClass::init(zero_dir, true) : ArcClass::empty();
  }
  // d spans the boundary line of { <x,v2> < 0 } and lies in (0, 180).
  IntVector d = p < 0 ? IntVector{q, -p} : IntVector{-q, p};
  bool closed = minus_v1 == d;
  // p < 0: the e_1 ray is inside the open halfplane, so the arc starts at 0.
  return p < 0 ? ArcClass::init(d, closed) : ArcClass::tail(d, closed);
}

bool arc_contains(const ArcClass& arc, const Ray& x) {
  if (x.dim() != 2 || x.is_zero()) throw DegenerateInput("arc_contains: need a nonzero planar ray");
  if (!in_positive_half(x)) return false;
  switch (arc.kind) {
    case ArcClass::Kind::Empty: return false;
    case ArcClass::Kind::Full: return true;
    case ArcClass::Kind::Init: {
      int c = compare_angle(x, arc.boundary);
      return c < 0 || (c == 0 && arc.closed);
    }
    case ArcClass::Kind::Tail: {
      int c = compare_angle(x, arc.boundary);
      return c > 0 || (c == 0 && arc.closed);
    }
  }
  return false;
}

ArcClass arc_join(const ArcClass& a, const ArcClass& b) {
  using K = ArcClass::Kind;
  if (a.kind == K::Empty) return b;
  if (b.kind == K::Empty) return a;
  if (a.kind == K::Full || b.kind == K::Full) return ArcClass::full();
  if (a.kind != b.kind) return ArcClass::full();
  if (a.kind == K::Init) return init_within(a, b) ? b : a;
  return tail_within(a, b) ? b : a;
}

ArcClass arc_complement(const ArcClass& a) {
  switch (a.kind) {
    case ArcClass::Kind::Empty: return ArcClass::full();
    case ArcClass::Kind::Full: return ArcClass::empty();
    case ArcClass::Kind::Init: return ArcClass::tail(a.boundary, !a.closed);
    case ArcClass::Kind::Tail: return ArcClass::init(a.boundary, !a.closed);
  }
  return a;
}

ArcClass arc_meet(const ArcClass& a, const ArcClass& b) {
  return arc_complement(arc_join(arc_complement(a), arc_complement(b)));
}

bool arc_leq(const ArcClass& a, const ArcClass& b) {
  using K = ArcClass::Kind;
  if (a.kind == K::Empty || b.kind == K::Full) return true;
  if (b.kind == K::Empty || a.kind == K::Full) return false;
  if (a.kind != b.kind) return false;
  return a.kind == K::Init ? init_within(a, b) : tail_within(a, b);
}

std::optional<Ray> subset_falsifier(const LatticeElement& x, const LatticeElement& y,
                                    std::size_t n_samples, std::uint64_t seed,
                                    std::int64_t bound) {
  Lattice::require_same_reference(x, y);
  Rng rng(seed);
  auto span = Subspace::span_of(x.reference());
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto ray = random_ray_in(rng, span, bound);
    if (member(ray, x) && !member(ray, y)) return ray;
  }
  return std::nullopt;
}

}  // namespace weakorder
