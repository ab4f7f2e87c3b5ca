#ifndef SCORONA_CORONA_HPP
#define SCORONA_CORONA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scorona/matrix.hpp"
#include "scorona/signed_graph.hpp"

namespace scorona {

/// A base graph with one satellite per base vertex; satellite l hangs off
/// base vertex l. Satellites may have order 0.
struct CoronaSpec {
  SignedGraph base;
  std::vector<SignedGraph> satellites;

  /// Corona G∘H: every base vertex gets a copy of h.
  static CoronaSpec uniform(const SignedGraph& base, const SignedGraph& h) {
    return {base, std::vector<SignedGraph>(base.order(), h)};
  }

  std::size_t product_order() const {
    std::size_t n = base.order();
    for (const auto& h : satellites) n += h.order();
    return n;
  }

  void validate() const {
    if (satellites.size() != base.order())
      throw DimensionMismatch("corona spec needs one satellite per base vertex (" + std::to_string(base.order()) +
                              "), got " + std::to_string(satellites.size()));
  }
};

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Where the base and each satellite copy sit inside the product: base
/// vertices first, then satellite 1, satellite 2, ... each in its own order.
struct CoronaLayout {
  IndexRange base;
  std::vector<IndexRange> satellites;
};

struct CoronaProduct {
  SignedGraph graph;
  CoronaLayout layout;
};

inline CoronaLayout corona_layout(const CoronaSpec& spec) {
  spec.validate();
  CoronaLayout layout;
  layout.base = {0, spec.base.order()};
  std::size_t offset = spec.base.order();
  for (const auto& h : spec.satellites) {
    layout.satellites.push_back({offset, offset + h.order()});
    offset += h.order();
  }
  return layout;
}

/// Joins base vertex l to every vertex w of satellite l with sign
/// mu(v_l) * mu_l(w), markings taken from marking_of. The product carries no
/// explicit marking.
inline CoronaProduct generalized_corona(const CoronaSpec& spec) {
  CoronaLayout layout = corona_layout(spec);
  const Marking mu = marking_of(spec.base);
  std::vector<SignedEdge> edges = spec.base.edges();
  for (std::size_t l = 0; l < spec.satellites.size(); ++l) {
    const SignedGraph& h = spec.satellites[l];
    const std::size_t off = layout.satellites[l].begin;
    const Marking mu_l = marking_of(h);
    for (const auto& e : h.edges()) edges.push_back({off + e.u, off + e.v, e.sign});
    for (std::size_t w = 0; w < h.order(); ++w) edges.push_back({l, off + w, mu[l] * mu_l[w]});
  }
  return {SignedGraph(spec.product_order(), std::move(edges)), std::move(layout)};
}

inline CoronaProduct corona(const SignedGraph& g, const SignedGraph& h) {
  return generalized_corona(CoronaSpec::uniform(g, h));
}

/// The blocks of A(product) = [[A(G), PQ], [(PQ)^T, D]]: P = diag(mu(v_l)),
/// Q block-diagonal with row l holding mu_l over satellite l's columns, and D
/// block-diagonal with the satellite adjacency matrices.
struct BlockMatrices {
  Matrix<Rational> p;
  Matrix<Rational> q;
  Matrix<Rational> d;
};

inline BlockMatrices block_matrices(const CoronaSpec& spec) {
  const CoronaLayout layout = corona_layout(spec);
  const std::size_t n = spec.base.order();
  const std::size_t t = spec.product_order() - n;
  BlockMatrices out{Matrix<Rational>(n, n), Matrix<Rational>(n, t), Matrix<Rational>(t, t)};
  const Marking mu = marking_of(spec.base);
  for (std::size_t l = 0; l < n; ++l) {
    out.p(l, l) = to_int(mu[l]);
    const SignedGraph& h = spec.satellites[l];
    const std::size_t off = layout.satellites[l].begin - n;
    const Marking mu_l = marking_of(h);
    for (std::size_t w = 0; w < h.order(); ++w) out.q(l, off + w) = to_int(mu_l[w]);
    for (const auto& e : h.edges()) {
      out.d(off + e.u, off + e.v) = to_int(e.sign);
      out.d(off + e.v, off + e.u) = to_int(e.sign);
    }
  }
  return out;
}

/// [[A(G), PQ], [(PQ)^T, D]] assembled from the blocks.
inline Matrix<Rational> assemble_adjacency(const SignedGraph& base, const BlockMatrices& b) {
  const std::size_t n = base.order();
  const std::size_t t = b.d.rows();
  const Matrix<Rational> a = adjacency(base);
  const Matrix<Rational> pq = b.p * b.q;
  Matrix<Rational> out(n + t, n + t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      out(i, n + j) = pq(i, j);
      out(n + j, i) = pq(i, j);
    }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) out(n + i, n + j) = b.d(i, j);
  return out;
}

}  // namespace scorona

#endif  // SCORONA_CORONA_HPP
