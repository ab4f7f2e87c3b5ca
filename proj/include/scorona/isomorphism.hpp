#ifndef SCORONA_ISOMORPHISM_HPP
#define SCORONA_ISOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scorona/signed_graph.hpp"

namespace scorona {

namespace detail {

struct MarkedIsoSearch {
  const SignedGraph& g1;
  const SignedGraph& g2;
  Marking mu1;
  Marking mu2;
  std::vector<DegreeCounts> deg1;
  std::vector<DegreeCounts> deg2;
  std::vector<std::size_t> order;  // g1 vertices in search order
  std::vector<std::size_t> map;    // g1 -> g2
  std::vector<bool> used;

  static constexpr std::size_t unmapped = static_cast<std::size_t>(-1);

  bool compatible(std::size_t v, std::size_t w) const {
    if (mu1[v] != mu2[w] || !(deg1[v] == deg2[w])) return false;
    // Every already-mapped vertex must agree on adjacency and sign.
    for (std::size_t u = 0; u < g1.order(); ++u) {
      if (map[u] == unmapped) continue;
      if (g1.sign(v, u) != g2.sign(w, map[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < g2.order(); ++w) {
      if (used[w] || !compatible(v, w)) continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      map[v] = unmapped;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace detail

/// Finds a bijection phi with (i,j) an edge of g1 iff (phi(i),phi(j)) is an
/// edge of g2 with the same sign, and marking_of(g1)[v] ==
/// marking_of(g2)[phi(v)] for every v. Returns phi as a vector indexed by
/// g1's vertices. Plain backtracking, so orders above `max_order` are refused.
inline std::optional<std::vector<std::size_t>> isomorphic_marked(const SignedGraph& g1, const SignedGraph& g2,
                                                                 std::size_t max_order = 10) {
  if (g1.order() > max_order || g2.order() > max_order)
    throw SizeLimitExceeded("isomorphism search limited to " + std::to_string(max_order) + " vertices");
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (g1.count(Sign::negative) != g2.count(Sign::negative)) return std::nullopt;

  detail::MarkedIsoSearch s{g1, g2, marking_of(g1), marking_of(g2), degree_profile(g1), degree_profile(g2),
                            {}, std::vector<std::size_t>(g1.order(), detail::MarkedIsoSearch::unmapped),
                            std::vector<bool>(g2.order(), false)};

  // BFS order from high-degree roots keeps each new vertex adjacent to
  // mapped ones, which prunes early.
  std::vector<bool> seen(g1.order(), false);
  std::vector<std::size_t> roots(g1.order());
  for (std::size_t v = 0; v < g1.order(); ++v) roots[v] = v;
  std::stable_sort(roots.begin(), roots.end(),
                   [&](std::size_t a, std::size_t b) { return g1.degree(a) > g1.degree(b); });
  for (std::size_t root : roots) {
    if (seen[root]) continue;
    seen[root] = true;
    const std::size_t start = s.order.size();
    s.order.push_back(root);
    for (std::size_t head = start; head < s.order.size(); ++head)
      for (const auto& nb : g1.neighbors(s.order[head]))
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          s.order.push_back(nb.vertex);
        }
  }

  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace scorona

#endif  // SCORONA_ISOMORPHISM_HPP
