#include "weakorder/cone.hpp"

namespace weakorder {

namespace {

// Positive integer multiple of a rational vector; zero stays zero.
IntVector scaled_to_integers(const Vector& v) {
  if (v.is_zero()) return IntVector(std::vector<Integer>(v.dim(), Integer(0)));
  return primitive(v);
}

}  // namespace

bool halfspace_pair_contains(const Vector& u, const Vector& e, const Vector& v) {
  if (u.is_zero() || e.is_zero())
    throw DegenerateInput("halfspace_pair_contains: normals are linearly dependent");
  return halfspace_pair_contains<ExactKernel>(scaled_to_integers(u), scaled_to_integers(e),
                                              scaled_to_integers(v));
}

Frame frame_from_basis(std::span<const Vector> basis) {
  if (basis.empty()) throw DegenerateInput("frame_from_basis: empty basis");
  auto dim = basis.front().dim();
  return Frame(dim, orthogonalize(basis));
}

Frame frame_from_basis(std::span<const IntVector> basis) {
  if (basis.empty()) throw DegenerateInput("frame_from_basis: empty basis");
  auto dim = basis.front().dim();
  return Frame(dim, orthogonalize(basis));
}

LexSign basis_lex_sign(const IntVector& x, std::span<const IntVector> basis) {
  const std::size_t n = x.dim();
  const std::size_t k = basis.size();
  // Augmented system [b_1 ... b_k | x] (n rows), Gauss-Jordan over Q.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (basis[c].dim() != n) throw DimensionMismatch("basis_lex_sign: dimension mismatch");
      m[r][c] = basis[c][r];
    }
    m[r][k] = x[r];
  }
  std::vector<std::size_t> pivot_row(k, n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw DegenerateInput("basis_lex_sign: dependent basis");
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (std::size_t j = c; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][k] != 0) return LexSign::OutsideSpan;
  for (std::size_t c = k; c-- > 0;) {
    const auto& pr = m[pivot_row[c]];
    int s = sgn(pr[k]) * sgn(pr[c]);
    if (s != 0) return s < 0 ? LexSign::Negative : LexSign::Positive;
  }
  return LexSign::Zero;
}

FloatFrame to_float(const Frame& frame) {
  std::vector<FloatVector> vs;
  vs.reserve(frame.rank());
  for (const auto& v : frame.vectors()) vs.push_back(to_float(v));
  return FloatFrame(FloatFrame::Unchecked{}, frame.ambient_dim(), std::move(vs));
}

}  // namespace weakorder
