#include "weakorder/lattice.hpp"

namespace weakorder {

bool closure_contains_halfspace(const LatticeElement& x, const Vector& v) {
  if (v.is_zero()) return true;
  return Lattice::closure_contains_halfspace(x, primitive(v));
}

LatticeElement standard_element(Frame cone) {
  auto dim = cone.ambient_dim();
  return LatticeElement(Frame::standard(dim), std::move(cone));
}

FloatElement to_float(const LatticeElement& x) {
  return FloatElement(to_float(x.reference()), to_float(x.cone()));
}

}  // namespace weakorder
