#ifndef SCORONA_BALANCE_STATS_HPP
#define SCORONA_BALANCE_STATS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "scorona/corona.hpp"
#include "scorona/signed_graph.hpp"

namespace scorona {

/// Edge counts split by the markings of the two endpoints.
struct MarkClassCounts {
  std::size_t pp = 0;  // both endpoints marked +
  std::size_t pm = 0;  // opposite marks
  std::size_t mm = 0;  // both marked -
  std::size_t total() const { return pp + pm + mm; }
  friend bool operator==(const MarkClassCounts&, const MarkClassCounts&) = default;
};

struct EdgeClassCounts {
  MarkClassCounts positive;
  MarkClassCounts negative;
  std::size_t total() const { return positive.total() + negative.total(); }
  friend bool operator==(const EdgeClassCounts&, const EdgeClassCounts&) = default;
};

/// Triangles by number of negative edges.
struct TriadCensus {
  std::size_t t0 = 0;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  std::size_t t3 = 0;

  std::size_t total() const { return t0 + t1 + t2 + t3; }
  void add(int negatives, std::size_t count = 1) {
    switch (negatives) {
      case 0: t0 += count; break;
      case 1: t1 += count; break;
      case 2: t2 += count; break;
      default: t3 += count; break;
    }
  }
  TriadCensus& operator+=(const TriadCensus& o) {
    t0 += o.t0;
    t1 += o.t1;
    t2 += o.t2;
    t3 += o.t3;
    return *this;
  }
  friend bool operator==(const TriadCensus&, const TriadCensus&) = default;
};

struct EdgeStats {
  std::size_t total = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const EdgeStats&, const EdgeStats&) = default;
};

inline EdgeClassCounts edge_class_counts(const SignedGraph& g) {
  const Marking mu = marking_of(g);
  EdgeClassCounts out;
  for (const auto& e : g.edges()) {
    MarkClassCounts& c = e.sign == Sign::positive ? out.positive : out.negative;
    if (mu[e.u] != mu[e.v])
      ++c.pm;
    else if (mu[e.u] == Sign::positive)
      ++c.pp;
    else
      ++c.mm;
  }
  return out;
}

inline EdgeStats edge_stats(const SignedGraph& g) {
  return {g.size(), g.count(Sign::positive), g.count(Sign::negative)};
}

/// Enumerates triangles u < v < w by intersecting sorted neighbor lists.
inline TriadCensus triad_census(const SignedGraph& g) {
  TriadCensus out;
  for (const auto& e : g.edges()) {
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (a->vertex < b->vertex) {
        ++a;
      } else if (b->vertex < a->vertex) {
        ++b;
      } else {
        if (a->vertex > e.v) {
          const int neg = (e.sign == Sign::negative) + (a->sign == Sign::negative) + (b->sign == Sign::negative);
          out.add(neg);
        }
        ++a;
        ++b;
      }
    }
  }
  return out;
}

namespace detail {
inline std::size_t count_marked(const Marking& mu, Sign s) {
  std::size_t n = 0;
  for (Sign m : mu) n += m == s;
  return n;
}
}  // namespace detail

/// Edge counts of the generalized corona product, predicted from the parts.
/// Cross edges at base vertex l are counted against that vertex's own mark:
/// positive ones number M+(H_l) when mu(v_l) = +1 and M-(H_l) otherwise.
inline EdgeStats predicted_edge_stats(const CoronaSpec& spec) {
  spec.validate();
  const Marking mu = marking_of(spec.base);
  EdgeStats s = edge_stats(spec.base);
  for (std::size_t l = 0; l < spec.satellites.size(); ++l) {
    const SignedGraph& h = spec.satellites[l];
    const Marking mu_l = marking_of(h);
    const std::size_t plus = detail::count_marked(mu_l, Sign::positive);
    const std::size_t minus = h.order() - plus;
    s.total += h.size() + h.order();
    s.positive += h.count(Sign::positive) + (mu[l] == Sign::positive ? plus : minus);
    s.negative += h.count(Sign::negative) + (mu[l] == Sign::positive ? minus : plus);
  }
  return s;
}

/// The tabulated edge-count expressions taken literally, i.e. with the global
/// base mark counts multiplying sums over all satellites. Exact for a
/// one-vertex base; with n identical satellites the cross-edge terms come out
/// n times too large. Kept for comparison output.
inline EdgeStats literal_table_edge_stats(const CoronaSpec& spec) {
  spec.validate();
  const Marking mu = marking_of(spec.base);
  const std::size_t base_plus = detail::count_marked(mu, Sign::positive);
  const std::size_t base_minus = mu.size() - base_plus;
  EdgeStats s = edge_stats(spec.base);
  std::size_t sat_plus = 0;
  std::size_t sat_minus = 0;
  for (const auto& h : spec.satellites) {
    const Marking mu_l = marking_of(h);
    const std::size_t p = detail::count_marked(mu_l, Sign::positive);
    sat_plus += p;
    sat_minus += h.order() - p;
    s.total += h.size() + h.order();
    s.positive += h.count(Sign::positive);
    s.negative += h.count(Sign::negative);
  }
  s.positive += base_plus * sat_plus + base_minus * sat_minus;
  s.negative += base_plus * sat_minus + base_minus * sat_plus;
  return s;
}

/// Negative-edge count of the triangle formed by base vertex (mark m) with a
/// satellite edge of sign s whose endpoints are marked a and b.
inline int new_triad_negatives(Sign m, Sign a, Sign b, Sign s) {
  return (m * a == Sign::negative) + (m * b == Sign::negative) + (s == Sign::negative);
}

/// Census of the product predicted from the parts: census(G) + sum census(H_l)
/// plus one new triangle per satellite edge, typed by the base vertex's own
/// mark, the edge sign and its endpoint marks.
inline TriadCensus predicted_triad_census(const CoronaSpec& spec) {
  spec.validate();
  const Marking mu = marking_of(spec.base);
  TriadCensus c = triad_census(spec.base);
  for (std::size_t l = 0; l < spec.satellites.size(); ++l) {
    const SignedGraph& h = spec.satellites[l];
    const Marking mu_l = marking_of(h);
    c += triad_census(h);
    for (const auto& e : h.edges()) c.add(new_triad_negatives(mu[l], mu_l[e.u], mu_l[e.v], e.sign));
  }
  return c;
}

/// The tabulated triad expressions taken literally (global base mark counts).
inline TriadCensus literal_table_triad_census(const CoronaSpec& spec) {
  spec.validate();
  const Marking mu = marking_of(spec.base);
  const std::size_t base_plus = detail::count_marked(mu, Sign::positive);
  const std::size_t base_minus = mu.size() - base_plus;
  TriadCensus c = triad_census(spec.base);
  EdgeClassCounts sum;
  for (const auto& h : spec.satellites) {
    c += triad_census(h);
    const EdgeClassCounts k = edge_class_counts(h);
    sum.positive.pp += k.positive.pp;
    sum.positive.pm += k.positive.pm;
    sum.positive.mm += k.positive.mm;
    sum.negative.pp += k.negative.pp;
    sum.negative.pm += k.negative.pm;
    sum.negative.mm += k.negative.mm;
  }
  c.t0 += base_plus * sum.positive.pp + base_minus * sum.positive.mm;
  c.t1 += base_plus * (sum.positive.pm + sum.negative.pp) + base_minus * (sum.positive.pm + sum.negative.mm);
  c.t2 += base_plus * (sum.positive.mm + sum.negative.pm) + base_minus * (sum.positive.pp + sum.negative.pm);
  c.t3 += base_plus * sum.negative.mm + base_minus * sum.negative.pp;
  return c;
}

/// |T(G)| + sum |T(H_l)| + sum |E(H_l)|.
inline std::size_t total_triads_formula(const CoronaSpec& spec) {
  spec.validate();
  std::size_t total = triad_census(spec.base).total();
  for (const auto& h : spec.satellites) total += triad_census(h).total() + h.size();
  return total;
}

/// A satellite edge that forces the product to be unbalanced.
/// condition 1: positive edge between opposite marks;
/// condition 2: negative edge between two - marks;
/// condition 3: negative edge between two + marks.
struct UnbalanceHit {
  std::size_t satellite;  // 0-based base vertex index
  SignedEdge edge;        // in the satellite's own vertex numbering
  int condition;
  friend bool operator==(const UnbalanceHit&, const UnbalanceHit&) = default;
};

/// Every satellite edge meeting one of the three conditions, for a spec whose
/// base and satellites are all balanced. Any hit closes an unbalanced
/// triangle with its base vertex, whatever that vertex's mark.
inline std::vector<UnbalanceHit> unbalance_witness(const CoronaSpec& spec) {
  spec.validate();
  if (!is_balanced(spec.base).balanced) throw PreconditionUnbalancedInput("base graph is unbalanced");
  std::vector<UnbalanceHit> hits;
  for (std::size_t l = 0; l < spec.satellites.size(); ++l) {
    const SignedGraph& h = spec.satellites[l];
    if (!is_balanced(h).balanced)
      throw PreconditionUnbalancedInput("satellite " + std::to_string(l) + " is unbalanced");
    const Marking mu = marking_of(h);
    for (const auto& e : h.edges()) {
      const bool same = mu[e.u] == mu[e.v];
      int cond = 0;
      if (e.sign == Sign::positive && !same) cond = 1;
      else if (e.sign == Sign::negative && same && mu[e.u] == Sign::negative) cond = 2;
      else if (e.sign == Sign::negative && same) cond = 3;
      if (cond != 0) hits.push_back({l, e, cond});
    }
  }
  return hits;
}

}  // namespace scorona

#endif  // SCORONA_BALANCE_STATS_HPP
