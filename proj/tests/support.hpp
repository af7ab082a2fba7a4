#pragma once

#include "weakorder/lattice.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace weakorder::test {

inline IntVector iv(std::initializer_list<long> xs) {
  std::vector<Integer> c;
  for (long x : xs) c.emplace_back(x);
  return IntVector(std::move(c));
}

inline Vector qv(std::initializer_list<const char*> xs) {
  std::vector<Rational> c;
  for (const char* x : xs) c.push_back(parse_rational(x));
  return Vector(std::move(c));
}

inline Frame fr(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> v;
  for (auto r : rows) v.push_back(iv(r));
  return Frame(dim, std::move(v));
}

// Planar element over the standard reference.
inline LatticeElement el2(std::initializer_list<long> v1, std::initializer_list<long> v2) {
  return standard_element(Frame(2, {iv(v1), iv(v2)}));
}

// Arcs used throughout: [0,90), [45,180), [0,45), [90,180).
inline LatticeElement arc_0_90() { return el2({0, 1}, {-1, 0}); }
inline LatticeElement arc_45_180() { return el2({-1, -1}, {1, -1}); }
inline LatticeElement arc_0_45() { return el2({1, 1}, {-1, 1}); }
inline LatticeElement arc_90_180() { return el2({0, -1}, {1, 0}); }

}  // namespace weakorder::test
