#ifndef SCORONA_LINALG_HPP
#define SCORONA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "scorona/matrix.hpp"
#include "scorona/polynomial.hpp"
#include "scorona/rational_function.hpp"

namespace scorona {

/// Determinant by Gaussian elimination over a field (Rational or
/// RationalFunction). Pivot is the first nonzero entry of the column.
template <typename Field>
Field determinant(Matrix<Field> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Field det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return Field(0);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    const Field pivot = m(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const Field factor = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

/// Solves a x = b over a field; empty when a is singular.
template <typename Field>
std::optional<std::vector<Field>> solve(Matrix<Field> a, std::vector<Field> b) {
  if (!a.is_square() || a.rows() != b.size()) throw DimensionMismatch("solve: shape mismatch");
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      a.swap_rows(p, k);
      std::swap(b[p], b[k]);
    }
    const Field pivot_inv = Field(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Field factor = a(i, k) * pivot_inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  std::vector<Field> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Field acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

/// det(x I - m) for a square rational matrix.
///
/// The matrix is first brought to upper Hessenberg form by elementary
/// similarity transforms; the characteristic polynomial of a Hessenberg
/// matrix H then follows from the recurrence
///   p_0 = 1,
///   p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (h_{m,m-1} ... h_{i+1,i}) p_{i-1}.
/// O(n^3) field operations.
inline Polynomial char_poly(const Matrix<Rational>& m) {
  if (!m.is_square()) throw DimensionMismatch("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> h = m;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && h(i, col).is_zero()) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      h.swap_rows(i, piv_row);
      h.swap_cols(i, piv_row);
    }
    const Rational t = h(piv_row, col);
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const Rational u = h(r, col) / t;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(piv_row, j);
      for (std::size_t j = 0; j < n; ++j) h(j, piv_row) += u * h(j, r);
    }
  }

  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.emplace_back(1L);
  const Polynomial x = Polynomial::x();
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial(h(k - 1, k - 1))) * p[k - 1];
    Rational sub_product(1);
    for (std::size_t i = k - 1; i >= 1; --i) {
      sub_product *= h(i, i - 1);
      if (sub_product.is_zero()) break;
      const Rational& hik = h(i - 1, k - 1);
      if (!hik.is_zero()) next -= Polynomial(hik * sub_product) * p[i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

/// Fraction-free (Bareiss) determinant over Q[x]. Every division is exact.
inline Polynomial bareiss_determinant(Matrix<Polynomial> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1L);
  bool negate = false;
  Polynomial prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Exact determinant of a matrix over Q(x): each column is scaled by the lcm
/// of its denominators, the resulting polynomial matrix goes through Bareiss,
/// and the product of the column scales is divided back out.
inline RationalFunction ratfun_matrix_det(const Matrix<RationalFunction>& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Polynomial> cleared(n, n);
  Polynomial scale(1L);
  for (std::size_t c = 0; c < n; ++c) {
    Polynomial col_lcm(1L);
    for (std::size_t r = 0; r < n; ++r) col_lcm = lcm(col_lcm, m(r, c).den());
    for (std::size_t r = 0; r < n; ++r) cleared(r, c) = m(r, c).num() * exact_div(col_lcm, m(r, c).den());
    scale *= col_lcm;
  }
  return {bareiss_determinant(std::move(cleared)), scale};
}

/// x I - m as a polynomial-entry matrix lifted into Q(x).
inline Matrix<RationalFunction> characteristic_matrix(const Matrix<Rational>& m) {
  Matrix<RationalFunction> out = m.map<RationalFunction>([](const Rational& v) { return RationalFunction(-v); });
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += RationalFunction(Polynomial::x());
  return out;
}

}  // namespace scorona

#endif  // SCORONA_LINALG_HPP
