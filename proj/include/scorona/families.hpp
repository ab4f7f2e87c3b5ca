#ifndef SCORONA_FAMILIES_HPP
#define SCORONA_FAMILIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "scorona/signed_graph.hpp"

// Small named signed graphs used throughout tests, the verifier and docs.
namespace scorona::families {

/// K̄_n: n isolated vertices.
inline SignedGraph empty(std::size_t n) { return SignedGraph(n); }

/// The graph with no vertices.
inline SignedGraph null_graph() { return SignedGraph(); }

inline SignedGraph path(std::size_t n, Sign s = Sign::positive) {
  std::vector<SignedEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, s});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph cycle(std::size_t n, Sign s = Sign::positive) {
  std::vector<SignedEdge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, s});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph complete(std::size_t n, Sign s = Sign::positive) {
  std::vector<SignedEdge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({u, v, s});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph complete_bipartite(std::size_t a, std::size_t b, Sign s = Sign::positive) {
  std::vector<SignedEdge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.push_back({u, a + v, s});
  return SignedGraph(a + b, std::move(e));
}

/// Star K_{1,leaves} centred at vertex 0.
inline SignedGraph star(std::size_t leaves, Sign s = Sign::positive) {
  return complete_bipartite(1, leaves, s);
}

/// Triangle with `negatives` negative edges (T_0..T_3). Vertex 0 is the apex;
/// for T_2 the two negative edges meet at the apex, for T_1 the base edge 1-2
/// is the negative one.
inline SignedGraph triad(int negatives) {
  const Sign p = Sign::positive;
  const Sign m = Sign::negative;
  switch (negatives) {
    case 0: return SignedGraph(3, {{0, 1, p}, {0, 2, p}, {1, 2, p}});
    case 1: return SignedGraph(3, {{0, 1, p}, {0, 2, p}, {1, 2, m}});
    case 2: return SignedGraph(3, {{0, 1, m}, {0, 2, m}, {1, 2, p}});
    case 3: return SignedGraph(3, {{0, 1, m}, {0, 2, m}, {1, 2, m}});
    default: throw InvalidGraph("triad type must be 0..3");
  }
}

/// Negates every edge with exactly one endpoint in `side` (side[v] == true).
inline SignedGraph switched(const SignedGraph& g, const std::vector<bool>& side) {
  std::vector<SignedEdge> e = g.edges();
  for (auto& edge : e)
    if (side.at(edge.u) != side.at(edge.v)) edge.sign = -edge.sign;
  return SignedGraph(g.order(), std::move(e), g.explicit_marking());
}

/// Relabels vertex v as perm[v]. An explicit marking is carried along.
inline SignedGraph relabeled(const SignedGraph& g, const std::vector<std::size_t>& perm) {
  std::vector<SignedEdge> e;
  e.reserve(g.size());
  for (const auto& edge : g.edges()) e.push_back({perm.at(edge.u), perm.at(edge.v), edge.sign});
  std::optional<Marking> mu;
  if (g.explicit_marking()) {
    mu = Marking(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) (*mu)[perm[v]] = (*g.explicit_marking())[v];
  }
  return SignedGraph(g.order(), std::move(e), std::move(mu));
}

}  // namespace scorona::families

#endif  // SCORONA_FAMILIES_HPP
