#pragma once

// Exact scalar and vector kernel over GMP integers and rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weakorder {

using Integer = mpz_class;
/// Always canonical (reduced, positive denominator) as long as it is built
/// through the helpers below or gmpxx arithmetic.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

namespace detail {

template <class T>
class CoordVector {
 public:
  using value_type = T;

  CoordVector() = default;
  explicit CoordVector(std::size_t dim) : coords_(dim) {}
  explicit CoordVector(std::vector<T> coords) : coords_(std::move(coords)) {}
  CoordVector(std::initializer_list<T> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (sgn(c) != 0) return false;
    return true;
  }

  friend bool operator==(const CoordVector& a, const CoordVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<T> coords_;
};

}  // namespace detail

/// Coordinate vector with rational entries.
using Vector = detail::CoordVector<Rational>;
/// Coordinate vector with integer entries. Frame vectors and rays are
/// nonzero primitive IntVectors.
using IntVector = detail::CoordVector<Integer>;
/// A point of the sphere up to positive scaling.
using Ray = IntVector;

Vector to_rational(const IntVector& v);

Integer dot(const IntVector& u, const IntVector& v);
Rational dot(const Vector& u, const Vector& v);
Rational dot(const Vector& u, const IntVector& v);
Rational dot(const IntVector& u, const Vector& v);

/// v - (<v,u>/<u,u>) u, exactly orthogonal to u.
Vector project_off(const Vector& v, const Vector& u);

/// The unique primitive integer vector on the ray through v.
IntVector primitive(const Vector& v);
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

/// Order-preserving Gram-Schmidt. Output k is a positive multiple of
/// input k minus a combination of inputs 0..k-1, made primitive.
std::vector<IntVector> orthogonalize(std::span<const Vector> basis);
std::vector<IntVector> orthogonalize(std::span<const IntVector> basis);

/// Largest bit length among the coordinates.
std::size_t max_bits(const IntVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const Vector& v);

IntVector unit_vector(std::size_t dim, std::size_t index, int sign = 1);

}  // namespace weakorder
