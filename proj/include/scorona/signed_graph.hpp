#ifndef SCORONA_SIGNED_GRAPH_HPP
#define SCORONA_SIGNED_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scorona/errors.hpp"
#include "scorona/matrix.hpp"
#include "scorona/rational.hpp"

namespace scorona {

enum class Sign : int { positive = 1, negative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<int>(a) == static_cast<int>(b) ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr char to_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Per-vertex +/-1 labels.
using Marking = std::vector<Sign>;

struct SignedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge& a, const SignedEdge& b) {
    return a.u == b.u && a.v == b.v && a.sign == b.sign;
  }
  friend bool operator<(const SignedEdge& a, const SignedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  }
};

struct Neighbor {
  std::size_t vertex;
  Sign sign;
};

/// Simple undirected signed graph on vertices 0..order-1, optionally carrying
/// an explicit marking that overrides the canonical one.
///
/// Edges are normalized to u < v and kept sorted; loops, parallel edges and
/// out-of-range endpoints are rejected with InvalidGraph. The order-0 graph is
/// the empty graph and is a valid value.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t order, std::vector<SignedEdge> edges = {},
                       std::optional<Marking> marking = std::nullopt)
      : order_(order), edges_(std::move(edges)), marking_(std::move(marking)), adjacency_(order) {
    for (auto& e : edges_) {
      if (e.u == e.v) throw InvalidGraph("loop at vertex " + std::to_string(e.u));
      if (e.u >= order_ || e.v >= order_)
        throw InvalidGraph("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw InvalidGraph("duplicate edge " + std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v));
    if (marking_ && marking_->size() != order_) throw InvalidGraph("marking length differs from vertex count");
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back({e.v, e.sign});
      adjacency_[e.v].push_back({e.u, e.sign});
    }
    for (auto& list : adjacency_)
      std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  const std::optional<Marking>& explicit_marking() const { return marking_; }
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  std::optional<Sign> sign(std::size_t u, std::size_t v) const {
    const auto& list = adjacency_.at(u);
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& n, std::size_t target) { return n.vertex < target; });
    if (it == list.end() || it->vertex != v) return std::nullopt;
    return it->sign;
  }
  bool adjacent(std::size_t u, std::size_t v) const { return sign(u, v).has_value(); }

  SignedGraph with_marking(std::optional<Marking> marking) const {
    return SignedGraph(order_, edges_, std::move(marking));
  }

  std::size_t count(Sign s) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [s](const SignedEdge& e) { return e.sign == s; }));
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.marking_ == b.marking_;
  }
  friend bool operator!=(const SignedGraph& a, const SignedGraph& b) { return !(a == b); }

 private:
  std::size_t order_ = 0;
  std::vector<SignedEdge> edges_;
  std::optional<Marking> marking_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Positive and negative incident edge counts of one vertex.
struct DegreeCounts {
  std::size_t plus = 0;
  std::size_t minus = 0;
  long net() const { return static_cast<long>(plus) - static_cast<long>(minus); }
  std::size_t total() const { return plus + minus; }
  friend bool operator==(const DegreeCounts&, const DegreeCounts&) = default;
};

inline std::vector<DegreeCounts> degree_profile(const SignedGraph& g) {
  std::vector<DegreeCounts> out(g.order());
  for (const auto& e : g.edges()) {
    auto& a = out[e.u];
    auto& b = out[e.v];
    if (e.sign == Sign::positive) {
      ++a.plus;
      ++b.plus;
    } else {
      ++a.minus;
      ++b.minus;
    }
  }
  return out;
}

/// mu(v) = product of the signs of the edges at v; isolated vertices get +1.
inline Marking canonical_marking(const SignedGraph& g) {
  Marking mu(g.order(), Sign::positive);
  for (const auto& e : g.edges()) {
    if (e.sign == Sign::negative) {
      mu[e.u] = -mu[e.u];
      mu[e.v] = -mu[e.v];
    }
  }
  return mu;
}

/// The explicit marking if present, otherwise the canonical one.
inline Marking marking_of(const SignedGraph& g) {
  return g.explicit_marking() ? *g.explicit_marking() : canonical_marking(g);
}

inline bool is_uniform(const Marking& mu) {
  return std::adjacent_find(mu.begin(), mu.end(), std::not_equal_to<>()) == mu.end();
}

inline Matrix<Rational> adjacency(const SignedGraph& g) {
  Matrix<Rational> a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = to_int(e.sign);
    a(e.v, e.u) = to_int(e.sign);
  }
  return a;
}

/// L = D - A with D the total degrees.
inline Matrix<Rational> laplacian(const SignedGraph& g) {
  Matrix<Rational> l(g.order(), g.order());
  for (const auto& e : g.edges()) {
    l(e.u, e.v) = -to_int(e.sign);
    l(e.v, e.u) = -to_int(e.sign);
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
  }
  return l;
}

/// Q = D + A.
inline Matrix<Rational> signless_laplacian(const SignedGraph& g) {
  Matrix<Rational> q(g.order(), g.order());
  for (const auto& e : g.edges()) {
    q(e.u, e.v) = to_int(e.sign);
    q(e.v, e.u) = to_int(e.sign);
    q(e.u, e.u) += 1;
    q(e.v, e.v) += 1;
  }
  return q;
}

/// The common net degree, if every vertex has the same one. The empty graph
/// has none.
inline std::optional<long> net_regularity(const SignedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto prof = degree_profile(g);
  const long k = prof.front().net();
  for (const auto& d : prof)
    if (d.net() != k) return std::nullopt;
  return k;
}

struct CoRegularity {
  std::size_t r;
  long k;
  friend bool operator==(const CoRegularity&, const CoRegularity&) = default;
};

/// (r, k) when the underlying graph is r-regular and the signed graph is
/// k-net-regular.
inline std::optional<CoRegularity> co_regularity(const SignedGraph& g) {
  const auto k = net_regularity(g);
  if (!k) return std::nullopt;
  const std::size_t r = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return CoRegularity{r, *k};
}

/// The common underlying degree, if the underlying graph is regular.
inline std::optional<std::size_t> regularity(const SignedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t r = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

/// Outcome of the balance test. When balanced, `camps` assigns every vertex
/// to one side so that positive edges stay inside a side and negative edges
/// cross. When unbalanced, `cycle` lists the vertices of a cycle whose edge
/// signs multiply to -1 (closing edge from back() to front() implied).
struct BalanceResult {
  bool balanced = true;
  std::vector<Sign> camps;
  std::vector<std::size_t> cycle;
};

/// Harary's criterion via BFS two-coloring of each connected component.
inline BalanceResult is_balanced(const SignedGraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<int> color(n, 0);
  std::vector<std::size_t> parent(n, none);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (const auto& [w, s] : g.neighbors(v)) {
        const int want = color[v] * to_int(s);
        if (color[w] == 0) {
          color[w] = want;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] != want) {
          // Walk both tree paths up to their meeting point.
          std::vector<std::size_t> left{v};
          std::vector<std::size_t> right{w};
          std::size_t a = v;
          std::size_t b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BalanceResult out;
          out.balanced = false;
          out.cycle = std::move(left);
          out.cycle.insert(out.cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  BalanceResult out;
  out.camps.reserve(n);
  for (int c : color) out.camps.push_back(c > 0 ? Sign::positive : Sign::negative);
  return out;
}

struct Bipartition {
  std::vector<std::size_t> m;
  std::vector<std::size_t> n;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Two-coloring of the underlying graph; the lowest-index vertex of every
/// component goes to `m`. Both parts are sorted.
inline std::optional<Bipartition> bipartition(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (const auto& nb : g.neighbors(v)) {
        if (side[nb.vertex] == -1) {
          side[nb.vertex] = 1 - side[v];
          queue.push_back(nb.vertex);
        } else if (side[nb.vertex] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? out.m : out.n).push_back(v);
  return out;
}

/// Marked complement: the non-edges of g, each signed mu(u)mu(v) with
/// mu = marking_of(g). The result keeps mu as its explicit marking.
inline SignedGraph complement(const SignedGraph& g) {
  const Marking mu = marking_of(g);
  std::vector<SignedEdge> edges;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v, mu[u] * mu[v]});
  return SignedGraph(g.order(), std::move(edges), mu);
}

}  // namespace scorona

#endif  // SCORONA_SIGNED_GRAPH_HPP
