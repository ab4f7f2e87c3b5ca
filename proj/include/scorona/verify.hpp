#ifndef SCORONA_VERIFY_HPP
#define SCORONA_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scorona/balance_stats.hpp"
#include "scorona/corona.hpp"
#include "scorona/coronal.hpp"
#include "scorona/factorization.hpp"
#include "scorona/families.hpp"

namespace scorona {

/// Deterministic random source. Draws are taken straight from mt19937_64 so
/// a seed reproduces the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }
  Sign sign() { return chance(0.5) ? Sign::positive : Sign::negative; }

 private:
  std::mt19937_64 eng_;
};

/// Each vertex pair becomes an edge with probability `density`, sign uniform.
inline SignedGraph random_graph(Rng& rng, std::size_t order, double density = 0.5) {
  std::vector<SignedEdge> edges;
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = u + 1; v < order; ++v)
      if (rng.chance(density)) edges.push_back({u, v, rng.sign()});
  return SignedGraph(order, std::move(edges));
}

/// Random signs on a fixed underlying graph.
inline SignedGraph random_signing(Rng& rng, const SignedGraph& shape) {
  std::vector<SignedEdge> edges = shape.edges();
  for (auto& e : edges) e.sign = rng.sign();
  return SignedGraph(shape.order(), std::move(edges));
}

/// Base order in [1, max_base], satellite orders in [0, max_sat].
inline CoronaSpec random_spec(Rng& rng, std::size_t max_base, std::size_t max_sat, double density = 0.5) {
  CoronaSpec spec;
  spec.base = random_graph(rng, rng.between(1, max_base), density);
  for (std::size_t l = 0; l < spec.base.order(); ++l)
    spec.satellites.push_back(random_graph(rng, rng.between(0, max_sat), density));
  return spec;
}

inline std::string describe(const SignedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges:";
  if (g.size() == 0) os << " none";
  for (const auto& e : g.edges()) os << ' ' << e.u << '-' << e.v << to_char(e.sign);
  if (g.explicit_marking()) {
    os << " marking:";
    for (Sign s : *g.explicit_marking()) os << ' ' << to_char(s);
  }
  return os.str();
}

inline std::string describe(const CoronaSpec& spec) {
  std::ostringstream os;
  os << "base [" << describe(spec.base) << "]";
  for (std::size_t l = 0; l < spec.satellites.size(); ++l)
    os << " H" << l + 1 << " [" << describe(spec.satellites[l]) << "]";
  return os.str();
}

namespace detail {

inline SignedGraph without_edge(const SignedGraph& g, std::size_t idx) {
  std::vector<SignedEdge> e = g.edges();
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
  return SignedGraph(g.order(), std::move(e), g.explicit_marking());
}

inline SignedGraph without_vertex(const SignedGraph& g, std::size_t v) {
  std::vector<SignedEdge> e;
  for (const auto& edge : g.edges()) {
    if (edge.u == v || edge.v == v) continue;
    e.push_back({edge.u - (edge.u > v), edge.v - (edge.v > v), edge.sign});
  }
  std::optional<Marking> mu;
  if (g.explicit_marking()) {
    mu = *g.explicit_marking();
    mu->erase(mu->begin() + static_cast<std::ptrdiff_t>(v));
  }
  return SignedGraph(g.order() - 1, std::move(e), std::move(mu));
}

}  // namespace detail

/// Greedy shrinking of a failing spec: drops base vertices (with their
/// satellites), satellite vertices and edges while `fails` keeps holding.
inline CoronaSpec minimize_spec(CoronaSpec spec, const std::function<bool(const CoronaSpec&)>& fails) {
  bool progress = true;
  auto attempt = [&](CoronaSpec candidate) {
    if (!fails(candidate)) return false;
    spec = std::move(candidate);
    return true;
  };
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < spec.base.order() && spec.base.order() > 1 && !progress; ++v) {
      CoronaSpec c{detail::without_vertex(spec.base, v), spec.satellites};
      c.satellites.erase(c.satellites.begin() + static_cast<std::ptrdiff_t>(v));
      progress = attempt(std::move(c));
    }
    for (std::size_t l = 0; l < spec.satellites.size() && !progress; ++l)
      for (std::size_t v = 0; v < spec.satellites[l].order() && !progress; ++v) {
        CoronaSpec c = spec;
        c.satellites[l] = detail::without_vertex(spec.satellites[l], v);
        progress = attempt(std::move(c));
      }
    for (std::size_t i = 0; i < spec.base.size() && !progress; ++i)
      progress = attempt(CoronaSpec{detail::without_edge(spec.base, i), spec.satellites});
    for (std::size_t l = 0; l < spec.satellites.size() && !progress; ++l)
      for (std::size_t i = 0; i < spec.satellites[l].size() && !progress; ++i) {
        CoronaSpec c = spec;
        c.satellites[l] = detail::without_edge(spec.satellites[l], i);
        progress = attempt(std::move(c));
      }
  }
  return spec;
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t max_base = 5;
  std::size_t max_sat = 4;
  std::size_t max_coronal_order = 8;
  /// Harness self-test: flips the sign of the first satellite's coronal
  /// inside the factored path, which must then be caught.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string counterexample;
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
};

/// Factored theorem output versus the product's own characteristic polynomial.
inline bool corona_theorem_holds(const CoronaSpec& spec, CoronalKind kind, bool inject_fault = false) {
  std::vector<RationalFunction> chis = satellite_coronals(spec, kind);
  if (inject_fault && !chis.empty()) {
    std::size_t l = 0;
    while (l < chis.size() && chis[l].is_zero()) ++l;
    if (l < chis.size()) chis[l] = -chis[l];
  }
  try {
    return assemble_corona_polynomial(spec, kind, chis).expanded == corona_polynomial_direct(spec, kind);
  } catch (const InternalInconsistency&) {
    return false;
  }
}

inline bool table_predictions_hold(const CoronaSpec& spec) {
  const SignedGraph product = generalized_corona(spec).graph;
  const TriadCensus census = triad_census(product);
  return predicted_edge_stats(spec) == edge_stats(product) && predicted_triad_census(spec) == census &&
         total_triads_formula(spec) == census.total();
}

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  SuiteTimer(const SuiteTimer&) = delete;
  SuiteTimer& operator=(const SuiteTimer&) = delete;

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

inline void record_spec_failure(SuiteResult& r, const CoronaSpec& spec,
                                const std::function<bool(const CoronaSpec&)>& fails) {
  ++r.failed;
  if (r.counterexample.empty()) r.counterexample = describe(minimize_spec(spec, fails));
}

}  // namespace detail

inline SuiteResult verify_corona_theorem(const VerifyOptions& opt, CoronalKind kind) {
  static constexpr const char* names[] = {"charpoly-theorem", "laplacian-theorem", "signless-theorem"};
  SuiteResult r{names[static_cast<int>(kind)]};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed);
  auto fails = [&](const CoronaSpec& s) { return !corona_theorem_holds(s, kind, opt.inject_fault); };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const CoronaSpec spec = random_spec(rng, opt.max_base, opt.max_sat);
    ++r.checked;
    if (fails(spec)) detail::record_spec_failure(r, spec, fails);
  }
  return r;
}

inline SuiteResult verify_table_predictions(const VerifyOptions& opt) {
  SuiteResult r{"table-predictions"};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed);
  auto fails = [](const CoronaSpec& s) { return !table_predictions_hold(s); };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const CoronaSpec spec = random_spec(rng, opt.max_base, opt.max_sat);
    ++r.checked;
    if (fails(spec)) detail::record_spec_failure(r, spec, fails);
  }
  return r;
}

/// Unbalance witness soundness: on random specs whose parts are all balanced,
/// a nonempty witness list implies an unbalanced product.
inline SuiteResult verify_unbalance_witness(const VerifyOptions& opt) {
  SuiteResult r{"unbalance-witness"};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed ^ 0x5bd1e995ULL);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    CoronaSpec spec = random_spec(rng, opt.max_base, opt.max_sat);
    // Make every part balanced by signing it from a random two-camp split.
    auto balance = [&](const SignedGraph& g) {
      std::vector<bool> camp(g.order());
      for (std::size_t v = 0; v < g.order(); ++v) camp[v] = rng.chance(0.5);
      std::vector<SignedEdge> e = g.edges();
      for (auto& edge : e) edge.sign = camp[edge.u] == camp[edge.v] ? Sign::positive : Sign::negative;
      return SignedGraph(g.order(), std::move(e));
    };
    spec.base = balance(spec.base);
    for (auto& h : spec.satellites) h = balance(h);
    ++r.checked;
    const auto hits = unbalance_witness(spec);
    if (!hits.empty() && is_balanced(generalized_corona(spec).graph).balanced) {
      ++r.failed;
      if (r.counterexample.empty()) r.counterexample = describe(spec);
    }
  }
  return r;
}

/// Solve route versus rank-one route on random graphs, every kind.
inline SuiteResult verify_coronal_routes(const VerifyOptions& opt) {
  SuiteResult r{"coronal-routes"};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t graphs = opt.trials / 2 > 0 ? opt.trials / 2 : 1;
  for (std::size_t t = 0; t < graphs; ++t) {
    const SignedGraph h = random_graph(rng, rng.between(1, opt.max_coronal_order));
    for (CoronalKind kind : {CoronalKind::adjacency, CoronalKind::laplacian, CoronalKind::signless}) {
      ++r.checked;
      if (coronal(h, kind) != coronal_rank_one(h, kind)) {
        ++r.failed;
        if (r.counterexample.empty())
          r.counterexample = std::string(kind_name(kind)) + " on [" + describe(h) + "]";
      }
    }
  }
  return r;
}

/// Closed forms on a fixed battery plus random graphs where they apply.
inline SuiteResult verify_closed_forms(const VerifyOptions& opt) {
  SuiteResult r{"coronal-closed-forms"};
  detail::SuiteTimer timer(r);
  std::vector<SignedGraph> battery;
  for (std::size_t n = 1; n <= 5; ++n) battery.push_back(families::empty(n));
  for (std::size_t n = 3; n <= 6; ++n) {
    battery.push_back(families::cycle(n, Sign::positive));
    battery.push_back(families::cycle(n, Sign::negative));
  }
  battery.push_back(families::complete(2, Sign::positive));
  battery.push_back(families::complete(2, Sign::negative));
  Rng rng(opt.seed ^ 0x2545f4914f6cdd1dULL);
  for (std::size_t t = 0; t < opt.trials; ++t) battery.push_back(random_graph(rng, rng.between(1, 6)));
  auto check = [&](const SignedGraph& h, CoronalKind kind, const std::optional<RationalFunction>& closed) {
    if (!closed) return;
    ++r.checked;
    if (coronal(h, kind) != *closed) {
      ++r.failed;
      if (r.counterexample.empty()) r.counterexample = std::string(kind_name(kind)) + " on [" + describe(h) + "]";
    }
  };
  for (const auto& h : battery) {
    check(h, CoronalKind::adjacency, coronal_net_regular(h));
    check(h, CoronalKind::laplacian, coronal_co_regular(h, CoronalKind::laplacian));
    check(h, CoronalKind::signless, coronal_co_regular(h, CoronalKind::signless));
  }
  return r;
}

/// Bipartite square-root forms against the general theorems.
inline SuiteResult verify_bipartite_forms(const VerifyOptions& opt) {
  SuiteResult r{"bipartite-forms"};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed ^ 0xda942042e4dd58b5ULL);
  const std::vector<SignedGraph> shapes = {families::path(2), families::path(4), families::cycle(4),
                                           families::cycle(6), families::complete_bipartite(2, 2)};
  std::vector<SignedGraph> satellites = {families::null_graph(), families::empty(1), families::empty(2),
                                         families::empty(3), families::complete(2, Sign::negative),
                                         families::cycle(3, Sign::positive), families::cycle(4, Sign::negative)};
  const std::size_t rounds = opt.trials / 20 > 0 ? opt.trials / 20 : 1;
  for (std::size_t round = 0; round < rounds; ++round) {
    for (const auto& shape : shapes) {
      const SignedGraph g = random_signing(rng, shape);
      const SignedGraph& z1 = satellites[rng.below(satellites.size())];
      const SignedGraph& z2 = satellites[rng.below(satellites.size())];
      const CoronaSpec spec = bipartite_spec(g, z1, z2);
      auto fail = [&](const std::string& what) {
        ++r.failed;
        if (r.counterexample.empty()) r.counterexample = what + ": " + describe(spec);
      };
      ++r.checked;
      if (charpoly_bipartite_two_family(g, z1, z2).expanded != charpoly_generalized_corona(spec).expanded)
        fail("adjacency square-root form");
      if (!regularity(g)) continue;
      ++r.checked;
      if (laplacian_poly_bipartite_regular(g, z1, z2).expanded != laplacian_poly_generalized_corona(spec).expanded)
        fail("Laplacian bipartite-regular form");
      ++r.checked;
      if (signless_poly_bipartite_regular(g, z1, z2).expanded !=
          signless_laplacian_poly_generalized_corona(spec).expanded)
        fail("signless bipartite-regular form");
    }
  }
  return r;
}

/// Switching a base leaves all three of its polynomials unchanged, so
/// products over switched bases with shared-coronal satellites must agree.
/// Also checks the swapped-family form with 2n relabeled copies of one graph.
inline SuiteResult verify_cospectral_corollaries(const VerifyOptions& opt) {
  SuiteResult r{"cospectral-corollaries"};
  detail::SuiteTimer timer(r);
  Rng rng(opt.seed ^ 0x94d049bb133111ebULL);
  const std::size_t rounds = opt.trials / 10 > 0 ? opt.trials / 10 : 1;
  auto fail = [&](const std::string& what) {
    ++r.failed;
    if (r.counterexample.empty()) r.counterexample = what;
  };
  for (std::size_t round = 0; round < rounds; ++round) {
    const SignedGraph g1 = random_graph(rng, rng.between(4, 5));
    std::vector<bool> side(g1.order());
    for (std::size_t v = 0; v < side.size(); ++v) side[v] = rng.chance(0.5);
    const SignedGraph g2 = families::switched(g1, side);
    const SignedGraph h = random_graph(rng, rng.between(1, 3));
    // Satellites: relabelings of h share h's coronals (marked isomorphism).
    auto copies = [&](std::size_t count) {
      std::vector<SignedGraph> out;
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::size_t> perm(h.order());
        for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = v;
        for (std::size_t v = perm.size(); v > 1; --v) std::swap(perm[v - 1], perm[rng.below(v)]);
        out.push_back(families::relabeled(h, perm));
      }
      return out;
    };
    for (CoronalKind kind : {CoronalKind::adjacency, CoronalKind::laplacian, CoronalKind::signless}) {
      ++r.checked;
      if (!cospectral(g1, g2, kind)) {
        fail("switching changed the " + std::string(kind_name(kind)) + " polynomial: " + describe(g1));
        continue;
      }
      const auto sats = copies(g1.order());
      const CoronaSpec s1{g1, sats};
      const CoronaSpec s2{g2, sats};
      ++r.checked;
      if (corona_polynomial_direct(s1, kind) != corona_polynomial_direct(s2, kind))
        fail(std::string(kind_name(kind)) + " base corollary: " + describe(s1) + " vs switched base");
      const auto family = copies(2 * g1.order());
      const CoronaSpec first{g1, {family.begin(), family.begin() + static_cast<std::ptrdiff_t>(g1.order())}};
      const CoronaSpec second{g1, {family.begin() + static_cast<std::ptrdiff_t>(g1.order()), family.end()}};
      ++r.checked;
      if (corona_polynomial_direct(first, kind) != corona_polynomial_direct(second, kind))
        fail(std::string(kind_name(kind)) + " swapped-family corollary: " + describe(first));
    }
  }
  return r;
}

/// Runs every suite with the given options.
inline VerifyReport run_verification(const VerifyOptions& opt) {
  VerifyReport report;
  report.suites.push_back(verify_corona_theorem(opt, CoronalKind::adjacency));
  report.suites.push_back(verify_corona_theorem(opt, CoronalKind::laplacian));
  report.suites.push_back(verify_corona_theorem(opt, CoronalKind::signless));
  report.suites.push_back(verify_table_predictions(opt));
  report.suites.push_back(verify_unbalance_witness(opt));
  report.suites.push_back(verify_coronal_routes(opt));
  report.suites.push_back(verify_closed_forms(opt));
  report.suites.push_back(verify_bipartite_forms(opt));
  report.suites.push_back(verify_cospectral_corollaries(opt));
  return report;
}

}  // namespace scorona

#endif  // SCORONA_VERIFY_HPP
