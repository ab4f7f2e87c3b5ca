// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact equalities over Q; time budgets are wall-clock.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "scorona/scorona.hpp"

#ifndef SCORONA_CLI_PATH
#error "SCORONA_CLI_PATH must point at the built command-line tool"
#endif

using namespace scorona;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;
constexpr CoronalKind ADJ = CoronalKind::adjacency;
constexpr CoronalKind LAP = CoronalKind::laplacian;
constexpr CoronalKind QLAP = CoronalKind::signless;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed << std::setprecision(2) << secs
            << " s)";
  const std::string d = o.detail.str();
  if (!d.empty()) std::cout << ": " << d;
  std::cout << std::endl;
}

std::vector<CoronaSpec> random_family(std::size_t count) {
  Rng rng(20240601);
  std::vector<CoronaSpec> specs;
  for (std::size_t i = 0; i < count; ++i) specs.push_back(random_spec(rng, 5, 4, 0.5));
  return specs;
}

CoronaSpec fig2() {
  return {families::path(2), {SignedGraph(3, {{0, 1, P}, {1, 2, N}}), families::triad(2)}};
}

// Fundamental cycles of a DFS spanning forest; balanced iff each is positive.
bool balanced_by_cycle_basis(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> parity(n, 0);  // product of signs on the tree path to the root
  std::vector<bool> seen(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> tree;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> stack = {root};
    seen[root] = true;
    parity[root] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const auto s = g.sign(v, w);
        if (!s || seen[w]) continue;
        seen[w] = true;
        parity[w] = parity[v] * to_int(*s);
        tree.push_back({std::min(v, w), std::max(v, w)});
        stack.push_back(w);
      }
    }
  }
  const std::set<std::pair<std::size_t, std::size_t>> tree_edges(tree.begin(), tree.end());
  for (const auto& e : g.edges()) {
    if (tree_edges.count({e.u, e.v})) continue;
    // Fundamental cycle sign = tree path parity between endpoints times the edge.
    if (parity[e.u] * parity[e.v] * to_int(e.sign) < 0) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::cout << "acceptance criteria" << std::endl;
  const std::vector<CoronaSpec> family = random_family(200);

  criterion("characteristic polynomial theorem on 200 random specs, under 60 s", [&](Outcome& o) {
    const auto start = Clock::now();
    std::size_t bad = 0;
    for (const auto& spec : family) {
      const Matrix<Rational> assembled = assemble_adjacency(spec.base, block_matrices(spec));
      o.require(assembled == adjacency(generalized_corona(spec).graph), "block assembly differs for " + describe(spec));
      if (charpoly_generalized_corona(spec).expanded != char_poly(assembled)) {
        if (bad++ == 0) o.require(false, "mismatch on " + describe(spec));
      }
    }
    const double secs = seconds_since(start);
    o.require(bad == 0, std::to_string(bad) + " of 200 specs disagree");
    o.require(secs < 60, "took " + std::to_string(secs) + " s");
    o.detail << "200 specs checked";
  });

  criterion("Laplacian and signless Laplacian theorems on 200 random specs, under 120 s", [&](Outcome& o) {
    const auto start = Clock::now();
    std::size_t bad = 0;
    for (const auto& spec : family) {
      const SignedGraph product = generalized_corona(spec).graph;
      if (laplacian_poly_generalized_corona(spec).expanded != char_poly(laplacian(product)))
        if (bad++ == 0) o.require(false, "Laplacian mismatch on " + describe(spec));
      if (signless_laplacian_poly_generalized_corona(spec).expanded != char_poly(signless_laplacian(product)))
        if (bad++ == 0) o.require(false, "signless mismatch on " + describe(spec));
    }
    const double secs = seconds_since(start);
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.require(secs < 120, "took " + std::to_string(secs) + " s");
    o.detail << "400 polynomial identities checked";
  });

  criterion("two-base-vertex worked example: counts, census, balance, unbalance witness", [&](Outcome& o) {
    const CoronaSpec spec = fig2();
    const SignedGraph g = generalized_corona(spec).graph;
    o.require(g.order() == 8, "order " + std::to_string(g.order()));
    o.require(g.size() == 12, "size " + std::to_string(g.size()));
    o.require(g.count(P) == 5 && g.count(N) == 7, "sign split " + std::to_string(g.count(P)) + "/" +
                                                       std::to_string(g.count(N)));
    const TriadCensus c = triad_census(g);
    o.require(c.t0 == 0 && c.t1 == 1 && c.t2 == 4 && c.t3 == 1, "triad census differs");
    o.require(!is_balanced(g).balanced, "product reported balanced");
    // Required witness edges: H1 a-b, b-c and H2 i-j, i-k (i = vertex 0 of H2).
    std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> got, want = {
        {0, {0, 1}}, {0, {1, 2}}, {1, {0, 1}}, {1, {0, 2}}};
    std::ostringstream hits;
    for (const auto& h : unbalance_witness(spec)) {
      got.insert({h.satellite, {h.edge.u, h.edge.v}});
      hits << " H" << h.satellite + 1 << ":" << h.edge.u << "-" << h.edge.v << "/c" << h.condition;
    }
    o.require(got == want, "witness edges reported:" + hits.str() +
                               " (expected a-b, b-c, i-j, i-k; i-j and i-k are negative edges between opposite"
                               " marks, which satisfy none of the three conditions)");
  });

  criterion("corrected edge and triad predictions plus total-triad identity on 200 random specs", [&](Outcome& o) {
    std::size_t bad = 0;
    for (const auto& spec : family) {
      const SignedGraph product = generalized_corona(spec).graph;
      const TriadCensus census = triad_census(product);
      const auto t = oracle::triads(product);
      const bool ok = predicted_edge_stats(spec) == edge_stats(product) && predicted_triad_census(spec) == census &&
                      census.t0 == t[0] && census.t1 == t[1] && census.t2 == t[2] && census.t3 == t[3];
      std::size_t eq2 = triad_census(spec.base).total();
      for (const auto& h : spec.satellites) eq2 += triad_census(h).total() + h.size();
      if (!ok || total_triads_formula(spec) != census.total() || eq2 != census.total())
        if (bad++ == 0) o.require(false, "mismatch on " + describe(spec));
    }
    o.require(bad == 0, std::to_string(bad) + " of 200 specs disagree");
  });

  criterion("coronal closed forms on the regular battery; two coronal routes on 100 random graphs", [&](Outcome& o) {
    std::vector<SignedGraph> battery;
    for (std::size_t n = 1; n <= 5; ++n) battery.push_back(families::empty(n));
    for (std::size_t n = 3; n <= 6; ++n) {
      battery.push_back(families::cycle(n, P));
      battery.push_back(families::cycle(n, N));
    }
    battery.push_back(families::complete(2, P));
    battery.push_back(families::complete(2, N));
    std::size_t applied = 0;
    for (const auto& h : battery) {
      const auto k = net_regularity(h);
      o.require(k.has_value(), "battery graph not net-regular: " + describe(h));
      const auto adj = coronal_net_regular(h);
      o.require(adj.has_value() && coronal(h, ADJ) == *adj, "adjacency closed form fails on " + describe(h));
      for (CoronalKind kind : {LAP, QLAP}) {
        const auto closed = coronal_co_regular(h, kind);
        o.require(closed.has_value() && coronal(h, kind) == *closed,
                  std::string(kind_name(kind)) + " closed form fails on " + describe(h));
      }
      applied += 3;
    }
    Rng rng(777);
    std::size_t routes = 0;
    for (int t = 0; t < 100; ++t) {
      const SignedGraph h = random_graph(rng, rng.between(1, 8));
      for (CoronalKind kind : {ADJ, LAP, QLAP}) {
        o.require(coronal(h, kind) == coronal_rank_one(h, kind),
                  std::string(kind_name(kind)) + " routes differ on " + describe(h));
        ++routes;
      }
    }
    o.detail << applied << " closed-form checks, " << routes << " route comparisons";
  });

  criterion("bipartite square-root forms and regular Laplacian/signless forms", [&](Outcome& o) {
    Rng rng(4242);
    const std::vector<SignedGraph> shapes = {families::path(2), families::path(4), families::cycle(4),
                                             families::cycle(6), families::complete_bipartite(2, 2)};
    const std::vector<SignedGraph> sats = {families::empty(1),        families::empty(2),
                                           families::empty(3),        families::null_graph(),
                                           families::complete(2, P),  families::complete(2, N),
                                           families::cycle(3, N),     families::cycle(4, P)};
    std::size_t checks = 0;
    for (const auto& shape : shapes)
      for (int round = 0; round < 3; ++round) {
        const SignedGraph g = random_signing(rng, shape);
        for (const auto& z1 : sats)
          for (const auto& z2 : sats) {
            const CoronaSpec spec = bipartite_spec(g, z1, z2);
            o.require(charpoly_bipartite_two_family(g, z1, z2).expanded ==
                          charpoly_generalized_corona(spec).expanded,
                      "adjacency form on " + describe(spec));
            ++checks;
            if (!regularity(g)) continue;
            o.require(laplacian_poly_bipartite_regular(g, z1, z2).expanded ==
                          laplacian_poly_generalized_corona(spec).expanded,
                      "Laplacian form on " + describe(spec));
            o.require(signless_poly_bipartite_regular(g, z1, z2).expanded ==
                          signless_laplacian_poly_generalized_corona(spec).expanded,
                      "signless form on " + describe(spec));
            checks += 2;
          }
      }
    o.detail << checks << " identities checked";
  });

  criterion("cospectral-base and swapped-family corollaries", [&](Outcome& o) {
    Rng rng(99);
    std::size_t pairs = 0;
    for (int t = 0; t < 30; ++t) {
      const SignedGraph g1 = random_graph(rng, rng.between(4, 5));
      std::vector<bool> side(g1.order());
      for (std::size_t v = 0; v < side.size(); ++v) side[v] = rng.chance(0.5);
      const SignedGraph g2 = families::switched(g1, side);
      const SignedGraph h = random_graph(rng, rng.between(1, 3));
      auto relabel = [&] {
        std::vector<std::size_t> perm(h.order());
        for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = v;
        for (std::size_t v = perm.size(); v > 1; --v) std::swap(perm[v - 1], perm[rng.below(v)]);
        return families::relabeled(h, perm);
      };
      std::vector<SignedGraph> copies;
      for (std::size_t i = 0; i < 2 * g1.order(); ++i) copies.push_back(relabel());
      const std::vector<SignedGraph> first(copies.begin(), copies.begin() + static_cast<long>(g1.order()));
      const std::vector<SignedGraph> second(copies.begin() + static_cast<long>(g1.order()), copies.end());
      for (CoronalKind kind : {ADJ, LAP, QLAP}) {
        o.require(cospectral(g1, g2, kind), "switching changed a polynomial: " + describe(g1));
        const auto a = oracle::char_poly_leverrier(oracle::from_adjacency(oracle::product_adjacency({g1, first}), kind));
        const auto b = oracle::char_poly_leverrier(oracle::from_adjacency(oracle::product_adjacency({g2, first}), kind));
        const auto c = oracle::char_poly_leverrier(oracle::from_adjacency(oracle::product_adjacency({g1, second}), kind));
        o.require(a == b, std::string(kind_name(kind)) + " base corollary fails on " + describe(g1));
        o.require(a == c, std::string(kind_name(kind)) + " swapped-family corollary fails on " + describe(g1));
        o.require(corona_polynomial(CoronaSpec{g2, first}, kind).expanded == b, "theorem disagrees with oracle");
        ++pairs;
      }
    }
    o.detail << pairs << " base pairs";
  });

  criterion("balance decision against exhaustive cycle checks on every signed graph with 4 vertices", [&](Outcome& o) {
    const std::vector<std::pair<std::size_t, std::size_t>> slots = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::size_t graphs = 0;
    for (unsigned present = 0; present < 64; ++present) {
      std::vector<std::size_t> idx;
      for (std::size_t s = 0; s < 6; ++s)
        if (present & (1u << s)) idx.push_back(s);
      for (unsigned signs = 0; signs < (1u << idx.size()); ++signs) {
        std::vector<SignedEdge> edges;
        for (std::size_t i = 0; i < idx.size(); ++i)
          edges.push_back({slots[idx[i]].first, slots[idx[i]].second, (signs >> i) & 1u ? N : P});
        const SignedGraph g(4, edges);
        const bool fast = is_balanced(g).balanced;
        o.require(fast == oracle::balanced_by_cycles(g) && fast == balanced_by_cycle_basis(g),
                  "disagreement on " + describe(g));
        ++graphs;
      }
    }
    o.require(graphs == 729, "enumerated " + std::to_string(graphs) + " signed graphs");
    o.detail << graphs << " signed graphs";
  });

  criterion("graph file round trip on 100 random graphs; default verify run exits 0 within 5 minutes",
            [&](Outcome& o) {
              namespace fs = std::filesystem;
              const fs::path dir = fs::temp_directory_path() / "scorona_acceptance";
              fs::create_directories(dir);
              Rng rng(31337);
              for (int t = 0; t < 100; ++t) {
                SignedGraph g = random_graph(rng, rng.between(0, 12));
                if (t % 3 == 0) {
                  Marking mu(g.order());
                  for (auto& m : mu) m = rng.sign();
                  g = g.with_marking(mu);
                }
                const std::string path = (dir / ("g" + std::to_string(t) + ".txt")).string();
                write_graph_file(path, g);
                const SignedGraph back = read_graph_file(path);
                o.require(back == g && back.explicit_marking() == g.explicit_marking(),
                          "round trip differs for " + describe(g));
              }
              fs::remove_all(dir);
              const auto start = Clock::now();
              const std::string cmd = std::string("\"") + SCORONA_CLI_PATH + "\" verify > /dev/null";
              const int status = std::system(cmd.c_str());
              const double secs = seconds_since(start);
              o.require(status == 0, "verify exit status " + std::to_string(status));
              o.require(secs < 300, "verify took " + std::to_string(secs) + " s");
              o.detail << "verify finished in " << std::fixed << std::setprecision(2) << secs << " s";
            });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
