#ifndef SCORONA_FACTORIZATION_HPP
#define SCORONA_FACTORIZATION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scorona/corona.hpp"
#include "scorona/coronal.hpp"
#include "scorona/linalg.hpp"

namespace scorona {

struct Factor {
  std::string label;
  RationalFunction value;
  std::size_t multiplicity = 1;
};

/// A polynomial together with the product it was assembled from. Factors
/// live in Q(x) because the determinant factor is generally a rational
/// function; their product always clears to `expanded`.
struct FactoredPoly {
  std::vector<Factor> factors;
  Polynomial expanded;

  RationalFunction product() const {
    RationalFunction p(1L);
    for (const auto& f : factors) p *= pow(f.value, static_cast<long>(f.multiplicity));
    return p;
  }
};

namespace detail {

inline void push_factor(std::vector<Factor>& out, std::string label, RationalFunction value, std::size_t mult = 1) {
  if (mult == 0 || value == RationalFunction(1L)) return;
  for (auto& f : out)
    if (f.value == value && f.label == label) {
      f.multiplicity += mult;
      return;
    }
  out.push_back({std::move(label), std::move(value), mult});
}

inline Polynomial clear_to_polynomial(const RationalFunction& r, const char* what) {
  if (!r.is_polynomial()) throw InternalInconsistency(std::string(what) + ": factor product is not a polynomial");
  return r.num() * Polynomial(Rational(1) / r.den().leading());
}

inline FactoredPoly finish(std::vector<Factor> factors, const char* what) {
  FactoredPoly fp{std::move(factors), {}};
  fp.expanded = clear_to_polynomial(fp.product(), what);
  return fp;
}

inline std::string satellite_factor_label(CoronalKind kind, const std::string& who) {
  switch (kind) {
    case CoronalKind::adjacency: return "f(" + who + ")(x)";
    case CoronalKind::laplacian: return "f_L(" + who + ")(x-1)";
    case CoronalKind::signless: return "f_Q(" + who + ")(x-1)";
  }
  return who;
}

}  // namespace detail

/// The satellite's own factor in the product polynomial: f_H(x) for the
/// adjacency kind, f_L(H)(x - 1) or f_Q(H)(x - 1) otherwise. 1 for the empty graph.
inline Polynomial satellite_factor(const SignedGraph& h, CoronalKind kind) {
  return kind_char_poly(h, kind).shifted(Rational(kind_shift(kind)));
}

/// det(diag(x - t_l - chi_l) - M(G)) with t_l = 0 for the adjacency kind,
/// M = A, L or Q.
inline RationalFunction g_determinant(const std::vector<RationalFunction>& chis, const SignedGraph& g,
                                      CoronalKind kind, const std::vector<std::size_t>& satellite_orders = {}) {
  const std::size_t n = g.order();
  if (chis.size() != n) throw DimensionMismatch("one coronal per base vertex required");
  if (kind != CoronalKind::adjacency && satellite_orders.size() != n)
    throw DimensionMismatch("satellite orders required for Laplacian kinds");
  const Matrix<Rational> m = kind_matrix(g, kind);
  Matrix<RationalFunction> d = m.map<RationalFunction>([](const Rational& v) { return RationalFunction(-v); });
  for (std::size_t l = 0; l < n; ++l) {
    Polynomial diag = Polynomial::x();
    if (kind != CoronalKind::adjacency) diag -= Polynomial(static_cast<long>(satellite_orders[l]));
    d(l, l) += RationalFunction(diag) - chis[l];
  }
  return ratfun_matrix_det(d);
}

inline std::vector<RationalFunction> satellite_coronals(const CoronaSpec& spec, CoronalKind kind) {
  spec.validate();
  std::vector<RationalFunction> chis;
  chis.reserve(spec.satellites.size());
  for (const auto& h : spec.satellites) chis.push_back(coronal(h, kind));
  return chis;
}

/// prod_l (satellite factor of H_l) * g-determinant(chi_1..chi_n; G), with the
/// coronals supplied by the caller.
inline FactoredPoly assemble_corona_polynomial(const CoronaSpec& spec, CoronalKind kind,
                                               const std::vector<RationalFunction>& chis) {
  spec.validate();
  std::vector<std::size_t> orders;
  // Equal satellite factors are grouped under one label: f(H1,3)(x)^2.
  std::vector<std::pair<Polynomial, std::vector<std::size_t>>> groups;
  for (std::size_t l = 0; l < spec.satellites.size(); ++l) {
    const SignedGraph& h = spec.satellites[l];
    orders.push_back(h.order());
    Polynomial f = satellite_factor(h, kind);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& grp) { return grp.first == f; });
    if (it == groups.end()) groups.push_back({std::move(f), {l + 1}});
    else it->second.push_back(l + 1);
  }
  std::vector<Factor> factors;
  for (const auto& [f, who] : groups) {
    std::string names = "H";
    for (std::size_t j = 0; j < who.size(); ++j) names += (j ? "," : "") + std::to_string(who[j]);
    detail::push_factor(factors, detail::satellite_factor_label(kind, names), f, who.size());
  }
  static constexpr const char* det_labels[] = {"g(chi_1..chi_n; G)", "L_g(chi_1..chi_n; G)", "Q_g(chi_1..chi_n; G)"};
  detail::push_factor(factors, det_labels[static_cast<int>(kind)], g_determinant(chis, spec.base, kind, orders));
  return detail::finish(std::move(factors), "corona polynomial");
}

/// f(product)(x) = prod f_{H_l}(x) * g(chi_{H_1}..chi_{H_n}; G).
inline FactoredPoly charpoly_generalized_corona(const CoronaSpec& spec) {
  return assemble_corona_polynomial(spec, CoronalKind::adjacency, satellite_coronals(spec, CoronalKind::adjacency));
}

/// f_L(product)(x) = prod f_L(H_l)(x - 1) * L_g(chi_L(H_1)..; G).
inline FactoredPoly laplacian_poly_generalized_corona(const CoronaSpec& spec) {
  return assemble_corona_polynomial(spec, CoronalKind::laplacian, satellite_coronals(spec, CoronalKind::laplacian));
}

/// f_Q(product)(x) = prod f_Q(H_l)(x - 1) * Q_g(chi_Q(H_1)..; G).
inline FactoredPoly signless_laplacian_poly_generalized_corona(const CoronaSpec& spec) {
  return assemble_corona_polynomial(spec, CoronalKind::signless, satellite_coronals(spec, CoronalKind::signless));
}

inline FactoredPoly corona_polynomial(const CoronaSpec& spec, CoronalKind kind) {
  return assemble_corona_polynomial(spec, kind, satellite_coronals(spec, kind));
}

/// The oracle side: characteristic polynomial of the built product's matrix.
inline Polynomial corona_polynomial_direct(const CoronaSpec& spec, CoronalKind kind) {
  return kind_char_poly(generalized_corona(spec).graph, kind);
}

/// For bipartite G with parts (M, N), |M| = h:
///   f_G(x) = x^(n-2h) g(x^2) = x^(2h-n) q(x^2),
/// g(y) = det(yI - W W^T), q(y) = det(yI - W^T W).
struct BipartiteSplit {
  Bipartition parts;
  std::size_t h = 0;
  Polynomial g_hat;
  Polynomial q_hat;
};

inline BipartiteSplit bipartite_split(const SignedGraph& g) {
  auto parts = bipartition(g);
  if (!parts) throw NotBipartite();
  const Polynomial f = char_poly(adjacency(g));
  const std::size_t n = g.order();
  const std::size_t h = parts->m.size();
  BipartiteSplit out{std::move(*parts), h, {}, {}};
  const Polynomial x = Polynomial::x();
  if (n >= 2 * h) {
    const Polynomial shift = pow(x, n - 2 * h);
    out.g_hat = even_part_substitute(exact_div(f, shift));
    out.q_hat = even_part_substitute(f * shift);
  } else {
    const Polynomial shift = pow(x, 2 * h - n);
    out.g_hat = even_part_substitute(f * shift);
    out.q_hat = even_part_substitute(exact_div(f, shift));
  }
  return out;
}

/// Generalized spec with z1 on every vertex of the bipartition's M part and
/// z2 on every N vertex.
inline CoronaSpec bipartite_spec(const SignedGraph& g, const SignedGraph& z1, const SignedGraph& z2) {
  const auto parts = bipartition(g);
  if (!parts) throw NotBipartite();
  CoronaSpec spec{g, std::vector<SignedGraph>(g.order(), z2)};
  for (std::size_t v : parts->m) spec.satellites[v] = z1;
  return spec;
}

/// Square-root form for a bipartite base with two satellite families:
///   n >= 2i: f_Z1^i f_Z2^(n-i) (x - chi_Z2)^(n-2i) g((x - chi_Z1)(x - chi_Z2))
///   n <  2i: f_Z1^i f_Z2^(n-i) (x - chi_Z1)^(2i-n) q((x - chi_Z1)(x - chi_Z2))
/// with i = |M| and g, q from bipartite_split.
inline FactoredPoly charpoly_bipartite_two_family(const SignedGraph& g, const SignedGraph& z1, const SignedGraph& z2) {
  const BipartiteSplit split = bipartite_split(g);
  const std::size_t n = g.order();
  const std::size_t i = split.h;
  const RationalFunction x(Polynomial::x());
  const RationalFunction a = x - coronal(z1, CoronalKind::adjacency);
  const RationalFunction b = x - coronal(z2, CoronalKind::adjacency);
  std::vector<Factor> factors;
  detail::push_factor(factors, "f(Z1)(x)", kind_char_poly(z1, CoronalKind::adjacency), i);
  detail::push_factor(factors, "f(Z2)(x)", kind_char_poly(z2, CoronalKind::adjacency), n - i);
  if (n >= 2 * i) {
    detail::push_factor(factors, "(x - chi_Z2)", b, n - 2 * i);
    detail::push_factor(factors, "g_G(sqrt((x - chi_Z1)(x - chi_Z2)))", ratfun_eval_poly(split.g_hat, a * b));
  } else {
    detail::push_factor(factors, "(x - chi_Z1)", a, 2 * i - n);
    detail::push_factor(factors, "q_G(sqrt((x - chi_Z1)(x - chi_Z2)))", ratfun_eval_poly(split.q_hat, a * b));
  }
  return detail::finish(std::move(factors), "bipartite two-family");
}

/// Laplacian (kind = laplacian) or signless (kind = signless) polynomial for a
/// bipartite base with equal parts of size k and r-regular underlying graph:
///   prod_j f_M(Z_j)(x - 1)^k * f_G(sqrt((x - m - r - chi_1)(x - s - r - chi_2)))
/// where f_G is the adjacency polynomial of G (even, so f_G(sqrt(y)) is a
/// polynomial in y), m = |Z1|, s = |Z2|.
inline FactoredPoly laplacian_poly_bipartite_regular(const SignedGraph& g, const SignedGraph& z1,
                                                     const SignedGraph& z2,
                                                     CoronalKind kind = CoronalKind::laplacian) {
  if (kind == CoronalKind::adjacency) throw Error("bipartite regular form needs a Laplacian kind");
  const auto parts = bipartition(g);
  if (!parts) throw NotBipartite();
  if (parts->m.size() != parts->n.size()) throw PartsUnequal();
  const auto r = regularity(g);
  if (!r && g.order() > 0) throw NotRegular();
  const std::size_t k = parts->m.size();
  const Polynomial f_hat = even_part_substitute(char_poly(adjacency(g)));
  const RationalFunction x(Polynomial::x());
  const long reg = r ? static_cast<long>(*r) : 0;
  const RationalFunction a = x - RationalFunction(static_cast<long>(z1.order()) + reg) - coronal(z1, kind);
  const RationalFunction b = x - RationalFunction(static_cast<long>(z2.order()) + reg) - coronal(z2, kind);
  std::vector<Factor> factors;
  detail::push_factor(factors, detail::satellite_factor_label(kind, "Z1"), satellite_factor(z1, kind), k);
  detail::push_factor(factors, detail::satellite_factor_label(kind, "Z2"), satellite_factor(z2, kind), k);
  detail::push_factor(factors, "f_G(sqrt((x - m - r - chi_1)(x - s - r - chi_2)))", ratfun_eval_poly(f_hat, a * b));
  return detail::finish(std::move(factors), "bipartite regular");
}

inline FactoredPoly signless_poly_bipartite_regular(const SignedGraph& g, const SignedGraph& z1,
                                                    const SignedGraph& z2) {
  return laplacian_poly_bipartite_regular(g, z1, z2, CoronalKind::signless);
}

/// Equal characteristic polynomials of the kind's matrix.
inline bool cospectral(const SignedGraph& g1, const SignedGraph& g2, CoronalKind kind) {
  if (g1.order() != g2.order()) return false;
  return kind_char_poly(g1, kind) == kind_char_poly(g2, kind);
}

}  // namespace scorona

#endif  // SCORONA_FACTORIZATION_HPP
