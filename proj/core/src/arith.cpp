#include "weakorder/arith.hpp"

#include "weakorder/error.hpp"

#include <algorithm>
#include <cctype>

namespace weakorder {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) +
                            " vs " + std::to_string(b));
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DegenerateInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  if (!valid_integer_text(text))
    throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Vector to_rational(const IntVector& v) {
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(v[i]);
  return out;
}

Integer dot(const IntVector& u, const IntVector& v) {
  require_same_dim(u.dim(), v.dim());
  Integer s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Rational dot(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Rational dot(const Vector& u, const IntVector& v) {
  require_same_dim(u.dim(), v.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Rational dot(const IntVector& u, const Vector& v) { return dot(v, u); }

Vector project_off(const Vector& v, const Vector& u) {
  require_same_dim(v.dim(), u.dim());
  Rational uu = dot(u, u);
  if (uu == 0) throw DegenerateInput("project_off: zero direction");
  Rational c = dot(v, u) / uu;
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] - c * u[i];
  return out;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw DegenerateInput("primitive: zero vector");
  IntVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(const Vector& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntVector scaled(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    scaled[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(scaled);
}

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 1;
}

std::vector<IntVector> orthogonalize(std::span<const IntVector> basis) {
  std::vector<IntVector> out;
  out.reserve(basis.size());
  for (const auto& b : basis) {
    if (!out.empty()) require_same_dim(b.dim(), out.front().dim());
    IntVector r = b;
    // <o,o> r - <r,o> o is a positive multiple of r minus its o-component.
    for (const auto& o : out) {
      Integer ro = dot(r, o);
      if (ro == 0) continue;
      Integer oo = dot(o, o);
      for (std::size_t i = 0; i < r.dim(); ++i) r[i] = oo * r[i] - ro * o[i];
      if (!r.is_zero()) r = primitive(r);
    }
    if (r.is_zero()) throw DegenerateInput("orthogonalize: linearly dependent input");
    out.push_back(primitive(r));
  }
  return out;
}

std::vector<IntVector> orthogonalize(std::span<const Vector> basis) {
  std::vector<IntVector> ints;
  ints.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) throw DegenerateInput("orthogonalize: linearly dependent input");
    ints.push_back(primitive(b));
  }
  return orthogonalize(std::span<const IntVector>(ints));
}

std::size_t max_bits(const IntVector& v) {
  std::size_t bits = 0;
  for (const auto& c : v)
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

IntVector unit_vector(std::size_t dim, std::size_t index, int sign) {
  IntVector e(dim);
  for (auto& c : e) c = 0;
  e[index] = sign;
  return e;
}

}  // namespace weakorder
