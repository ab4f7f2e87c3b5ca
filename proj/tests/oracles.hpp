// Independent reference computations used only by the tests. Nothing here
// calls into the routines it is meant to check.
#ifndef SCORONA_TESTS_ORACLES_HPP
#define SCORONA_TESTS_ORACLES_HPP

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "scorona/balance_stats.hpp"
#include "scorona/corona.hpp"
#include "scorona/coronal.hpp"
#include "scorona/matrix.hpp"
#include "scorona/polynomial.hpp"
#include "scorona/signed_graph.hpp"

namespace scorona {

// Readable values in test failure messages.
inline void PrintTo(const SignedEdge& e, std::ostream* os) { *os << e.u << '-' << e.v << to_char(e.sign); }
inline void PrintTo(const EdgeStats& s, std::ostream* os) {
  *os << "{total " << s.total << ", +" << s.positive << ", -" << s.negative << "}";
}
inline void PrintTo(const TriadCensus& c, std::ostream* os) {
  *os << "(" << c.t0 << "," << c.t1 << "," << c.t2 << "," << c.t3 << ")";
}
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& r, std::ostream* os) { *os << r.to_string(); }

}  // namespace scorona

namespace oracle {

using scorona::Matrix;
using scorona::Polynomial;
using scorona::Rational;
using scorona::Sign;
using scorona::SignedGraph;

/// Laplace expansion along the first row; fine up to dimension 8.
inline Rational det_cofactor(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// det(rI - M).
inline Rational char_value(const Matrix<Rational>& m, const Rational& r) {
  Matrix<Rational> a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? r : Rational(0)) - m(i, j);
  return det_cofactor(a);
}

/// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
inline Polynomial char_poly_leverrier(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix<Rational> mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const Matrix<Rational> am = a * mk;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return Polynomial(std::vector<Rational>(c.begin(), c.end()));
}

/// Gauss-Jordan solve of a nonsingular system; empty result when singular.
inline std::vector<Rational> solve(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return {};
    for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
    std::swap(b[col], b[piv]);
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  return b;
}

inline std::vector<int> marking_by_product(const SignedGraph& g) {
  std::vector<int> mu(g.order(), 1);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (auto s = g.sign(u, v)) mu[u] *= scorona::to_int(*s);
  if (g.explicit_marking())
    for (std::size_t v = 0; v < g.order(); ++v) mu[v] = scorona::to_int((*g.explicit_marking())[v]);
  return mu;
}

/// The kind's matrix built entry by entry from the sign function.
inline Matrix<Rational> kind_matrix(const SignedGraph& g, scorona::CoronalKind kind) {
  const std::size_t n = g.order();
  Matrix<Rational> m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (auto s = g.sign(u, v)) {
        const int a = scorona::to_int(*s);
        m(u, v) = kind == scorona::CoronalKind::laplacian ? -a : a;
        m(u, u) += kind == scorona::CoronalKind::adjacency ? 0 : 1;
      }
    }
  return m;
}

/// mu^T (xI - M)^{-1} mu at x = r, with the kind's shift applied to r.
/// Empty optional when r is a pole.
inline std::optional<Rational> coronal_at(const SignedGraph& h, scorona::CoronalKind kind, const Rational& r) {
  const std::size_t n = h.order();
  if (n == 0) return Rational(0);
  const Rational x = kind == scorona::CoronalKind::adjacency ? r : r - 1;
  const Matrix<Rational> m = oracle::kind_matrix(h, kind);
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? x : Rational(0)) - m(i, j);
  const auto mu = marking_by_product(h);
  std::vector<Rational> rhs(mu.begin(), mu.end());
  const auto y = solve(a, rhs);
  if (y.empty()) return std::nullopt;
  Rational s(0);
  for (std::size_t i = 0; i < n; ++i) s += mu[i] * y[i];
  return s;
}

/// Product adjacency matrix straight from the construction: base block,
/// satellite blocks, and cross entries mu(v_l) mu_l(w).
inline Matrix<Rational> product_adjacency(const scorona::CoronaSpec& spec) {
  const std::size_t n = spec.base.order();
  std::size_t total = n;
  for (const auto& h : spec.satellites) total += h.order();
  Matrix<Rational> a(total, total);
  const auto mu = marking_by_product(spec.base);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (auto s = spec.base.sign(u, v)) a(u, v) = scorona::to_int(*s);
  std::size_t offset = n;
  for (std::size_t l = 0; l < n; ++l) {
    const SignedGraph& h = spec.satellites[l];
    const auto mul = marking_by_product(h);
    for (std::size_t u = 0; u < h.order(); ++u) {
      a(l, offset + u) = a(offset + u, l) = mu[l] * mul[u];
      for (std::size_t v = 0; v < h.order(); ++v)
        if (auto s = h.sign(u, v)) a(offset + u, offset + v) = scorona::to_int(*s);
    }
    offset += h.order();
  }
  return a;
}

/// The kind's matrix derived from an adjacency matrix.
inline Matrix<Rational> from_adjacency(const Matrix<Rational>& a, scorona::CoronalKind kind) {
  if (kind == scorona::CoronalKind::adjacency) return a;
  Matrix<Rational> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) m(i, i) += 1;
      if (i != j) m(i, j) = kind == scorona::CoronalKind::laplacian ? Rational(-a(i, j)) : a(i, j);
    }
  return m;
}

/// Every simple cycle, each reported once (smallest vertex first, and the
/// second vertex smaller than the last), passed to `visit`.
inline void for_each_cycle(const SignedGraph& g, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = g.order();
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (std::size_t w = start; w < n; ++w) {
      if (!g.sign(v, w)) continue;
      if (w == start && path.size() >= 3 && path[1] < path.back()) visit(path);
      if (w <= start || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
}

/// Balanced iff every simple cycle has an even number of negative edges.
inline bool balanced_by_cycles(const SignedGraph& g) {
  bool ok = true;
  for_each_cycle(g, [&](const std::vector<std::size_t>& c) {
    int prod = 1;
    for (std::size_t i = 0; i < c.size(); ++i) prod *= scorona::to_int(*g.sign(c[i], c[(i + 1) % c.size()]));
    if (prod < 0) ok = false;
  });
  return ok;
}

inline std::size_t count_cycles(const SignedGraph& g) {
  std::size_t count = 0;
  for_each_cycle(g, [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

/// Triangles by number of negative edges, via a triple loop.
inline std::array<std::size_t, 4> triads(const SignedGraph& g) {
  std::array<std::size_t, 4> t{};
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        auto ab = g.sign(a, b), ac = g.sign(a, c), bc = g.sign(b, c);
        if (!ab || !ac || !bc) continue;
        ++t[(*ab == Sign::negative) + (*ac == Sign::negative) + (*bc == Sign::negative)];
      }
  return t;
}

}  // namespace oracle

#endif  // SCORONA_TESTS_ORACLES_HPP
