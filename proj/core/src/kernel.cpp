#include "weakorder/kernel.hpp"

#include "weakorder/error.hpp"

#include <cmath>

namespace weakorder {

ExactKernel::Vec ExactKernel::negated(const Vec& v) {
  Vec out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = -v[i];
  return out;
}

ExactKernel::Vec ExactKernel::reject(const Vec& v, const Vec& u) {
  Integer vu = dot(v, u);
  if (vu == 0) return v;
  Integer uu = dot(u, u);
  if (uu == 0) throw DegenerateInput("reject: zero direction");
  Vec out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = uu * v[i] - vu * u[i];
  if (out.is_zero()) return out;
  return primitive(out);
}

ExactKernel::Vec ExactKernel::project_direction(const Vec& v, std::span<const Vec> basis) {
  Vector acc(v.dim());
  for (const auto& b : basis) {
    Integer vb = dot(v, b);
    if (vb == 0) continue;
    Rational c = make_rational(vb, dot(b, b));
    for (std::size_t i = 0; i < acc.dim(); ++i) acc[i] += c * b[i];
  }
  if (acc.is_zero()) return Vec(std::vector<Integer>(v.dim(), Integer(0)));
  return primitive(acc);
}

double FloatKernel::dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool FloatKernel::is_zero(const Vec& v) { return std::sqrt(dot(v, v)) <= kTolerance; }

bool FloatKernel::same(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e3 * kTolerance) return false;
  return true;
}

FloatKernel::Vec FloatKernel::negated(const Vec& v) {
  Vec out(v);
  for (auto& c : out) c = -c;
  return out;
}

FloatKernel::Vec FloatKernel::unit(std::size_t dim, std::size_t index, int sign) {
  Vec e(dim, 0.0);
  e[index] = sign;
  return e;
}

FloatKernel::Vec FloatKernel::normalize(const Vec& v) {
  double n = std::sqrt(dot(v, v));
  if (n <= kTolerance) throw DegenerateInput("normalize: zero vector");
  Vec out(v);
  for (auto& c : out) c /= n;
  return out;
}

FloatKernel::Vec FloatKernel::reject(const Vec& v, const Vec& u) {
  double uu = dot(u, u);
  if (uu <= kTolerance * kTolerance) throw DegenerateInput("reject: zero direction");
  double c = dot(v, u) / uu;
  Vec out(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * u[i];
  return out;
}

FloatKernel::Vec FloatKernel::project_direction(const Vec& v, std::span<const Vec> basis) {
  Vec acc(v.size(), 0.0);
  for (const auto& b : basis) {
    double c = dot(v, b) / dot(b, b);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * b[i];
  }
  double vn = std::sqrt(dot(v, v));
  if (std::sqrt(dot(acc, acc)) <= kTolerance * std::max(1.0, vn)) return Vec(v.size(), 0.0);
  return normalize(acc);
}

bool FloatKernel::is_normalized(const Vec& v) {
  return std::abs(std::sqrt(dot(v, v)) - 1.0) <= 1e3 * kTolerance;
}

FloatVector to_float(const IntVector& v) {
  FloatVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].get_d();
  return FloatKernel::normalize(out);
}

}  // namespace weakorder
