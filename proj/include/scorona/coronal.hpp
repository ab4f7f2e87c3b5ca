#ifndef SCORONA_CORONAL_HPP
#define SCORONA_CORONAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scorona/linalg.hpp"
#include "scorona/signed_graph.hpp"

namespace scorona {

/// Which matrix a coronal or polynomial refers to. The Laplacian kinds use
/// the resolvent at (x - 1): chi_L(x) = mu^T((x-1)I - L)^{-1} mu.
enum class CoronalKind { adjacency, laplacian, signless };

inline std::string_view kind_name(CoronalKind k) {
  switch (k) {
    case CoronalKind::adjacency: return "adj";
    case CoronalKind::laplacian: return "lap";
    case CoronalKind::signless: return "qlap";
  }
  return "?";
}

inline std::optional<CoronalKind> parse_kind(std::string_view s) {
  if (s == "adj") return CoronalKind::adjacency;
  if (s == "lap") return CoronalKind::laplacian;
  if (s == "qlap") return CoronalKind::signless;
  return std::nullopt;
}

inline Matrix<Rational> kind_matrix(const SignedGraph& g, CoronalKind k) {
  switch (k) {
    case CoronalKind::adjacency: return adjacency(g);
    case CoronalKind::laplacian: return laplacian(g);
    case CoronalKind::signless: return signless_laplacian(g);
  }
  return adjacency(g);
}

/// Shift c such that the coronal is the resolvent form at (x + c).
inline long kind_shift(CoronalKind k) { return k == CoronalKind::adjacency ? 0 : -1; }

/// det(x I - M) for the kind's matrix M (A, L or Q).
inline Polynomial kind_char_poly(const SignedGraph& g, CoronalKind k) { return char_poly(kind_matrix(g, k)); }

/// mu^T((x + c)I - M)^{-1} mu, obtained by solving ((x + c)I - M) y = mu over
/// Q(x). The empty graph has coronal 0.
inline RationalFunction coronal(const SignedGraph& h, CoronalKind kind) {
  const std::size_t n = h.order();
  if (n == 0) return {};
  const Matrix<Rational> m = kind_matrix(h, kind);
  const Marking mu = marking_of(h);
  const Polynomial var = Polynomial::x() + Polynomial(kind_shift(kind));
  Matrix<RationalFunction> sys = m.map<RationalFunction>([](const Rational& v) { return RationalFunction(-v); });
  std::vector<RationalFunction> rhs;
  rhs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sys(i, i) += RationalFunction(var);
    rhs.emplace_back(static_cast<long>(to_int(mu[i])));
  }
  const auto y = solve(std::move(sys), rhs);
  if (!y) throw InternalInconsistency("resolvent matrix singular over Q(x)");
  RationalFunction chi;
  for (std::size_t i = 0; i < n; ++i) chi += mu[i] == Sign::positive ? (*y)[i] : -(*y)[i];
  return chi;
}

/// Second route through the matrix determinant lemma:
/// det(yI - M - mu mu^T) = det(yI - M)(1 - chi), so
/// chi(y) = (char(M) - char(M + mu mu^T)) / char(M), then y = x + c.
inline RationalFunction coronal_rank_one(const SignedGraph& h, CoronalKind kind) {
  const std::size_t n = h.order();
  if (n == 0) return {};
  const Matrix<Rational> m = kind_matrix(h, kind);
  const Marking mu = marking_of(h);
  Matrix<Rational> bumped = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bumped(i, j) += to_int(mu[i]) * to_int(mu[j]);
  const Polynomial base = char_poly(m);
  const Polynomial diff = base - char_poly(bumped);
  const Rational c(kind_shift(kind));
  return {diff.shifted(c), base.shifted(c)};
}

/// n / (x - k) for a k-net-regular graph whose marking is uniform. The
/// uniform-marking requirement is needed: net-regular graphs with mixed
/// canonical marks exist whose coronal is not of this form.
inline std::optional<RationalFunction> coronal_net_regular(const SignedGraph& h) {
  const auto k = net_regularity(h);
  if (!k || !is_uniform(marking_of(h))) return std::nullopt;
  return RationalFunction(Polynomial(static_cast<long>(h.order())), Polynomial::x() - Polynomial(*k));
}

/// Closed forms for co-regular graphs with uniform marking:
/// chi_L = n / (x - 1 - 2 d-), chi_Q = n / (x - 1 - 2 d+).
inline std::optional<RationalFunction> coronal_co_regular(const SignedGraph& h, CoronalKind kind) {
  if (kind == CoronalKind::adjacency) return std::nullopt;
  const auto cr = co_regularity(h);
  if (!cr || !is_uniform(marking_of(h))) return std::nullopt;
  const auto prof = degree_profile(h);
  for (const auto& d : prof)
    if (!(d == prof.front())) return std::nullopt;
  const long d = static_cast<long>(kind == CoronalKind::laplacian ? prof.front().minus : prof.front().plus);
  return RationalFunction(Polynomial(static_cast<long>(h.order())), Polynomial::x() - Polynomial(1 + 2 * d));
}

}  // namespace scorona

#endif  // SCORONA_CORONAL_HPP
