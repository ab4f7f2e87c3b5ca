#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scorona/corona.hpp"
#include "scorona/families.hpp"
#include "scorona/verify.hpp"

using namespace scorona;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

// Figure-2 instance: base P2; H1 = path a-b (+), b-c (-); H2 = triangle
// i-j (-), i-k (-), j-k (+). Product vertices: 0,1 | a b c = 2 3 4 | i j k = 5 6 7.
CoronaSpec fig2() {
  return {families::path(2), {SignedGraph(3, {{0, 1, P}, {1, 2, N}}), families::triad(2)}};
}

}  // namespace

TEST(Corona, K1K1IsPositiveEdge) {
  const auto p = corona(families::empty(1), families::empty(1));
  EXPECT_EQ(p.graph, families::path(2));
}

TEST(Corona, NegativeK2WithPendantsIsNegativeP4) {
  const auto p = corona(families::complete(2, N), families::empty(1));
  EXPECT_EQ(p.graph, SignedGraph(4, {{0, 1, N}, {0, 2, N}, {1, 3, N}}));
  EXPECT_EQ(p.graph.count(N), 3u);
}

TEST(Corona, K1WithNegativeK2IsAllNegativeTriangle) {
  const auto p = corona(families::empty(1), families::complete(2, N));
  EXPECT_EQ(p.graph, families::triad(3));
}

TEST(GeneralizedCorona, Fig2) {
  const auto p = generalized_corona(fig2());
  EXPECT_EQ(p.graph.order(), 8u);
  EXPECT_EQ(p.graph.size(), 12u);
  EXPECT_EQ(p.graph.sign(0, 2), P);
  EXPECT_EQ(p.graph.sign(0, 3), N);
  EXPECT_EQ(p.graph.sign(0, 4), N);
  EXPECT_EQ(p.graph.sign(1, 5), P);
  EXPECT_EQ(p.graph.sign(1, 6), N);
  EXPECT_EQ(p.graph.sign(1, 7), N);
  EXPECT_FALSE(p.graph.explicit_marking().has_value());
  EXPECT_EQ(p.layout.base, (IndexRange{0, 2}));
  EXPECT_EQ(p.layout.satellites, (std::vector<IndexRange>{{2, 5}, {5, 8}}));
}

TEST(GeneralizedCorona, EmptySatellitesGiveBase) {
  const SignedGraph g = families::cycle(4, N);
  const auto p = generalized_corona({g, std::vector<SignedGraph>(4)});
  EXPECT_EQ(p.graph, g);
}

TEST(GeneralizedCorona, StarFromEmptySatellite) {
  const auto p = generalized_corona({families::empty(1), {families::empty(2)}});
  EXPECT_EQ(p.graph, families::star(2, P));
}

TEST(GeneralizedCorona, ExplicitMarkingDrivesCrossSigns) {
  const SignedGraph sat = families::empty(2).with_marking(Marking{P, N});
  const auto p = generalized_corona({families::empty(1), {sat}});
  EXPECT_EQ(p.graph.sign(0, 1), P);
  EXPECT_EQ(p.graph.sign(0, 2), N);
}

TEST(GeneralizedCorona, SatelliteCountMismatch) {
  EXPECT_THROW(generalized_corona({families::path(2), {families::empty(1)}}), DimensionMismatch);
}

TEST(GeneralizedCorona, MatchesDefinitionOracle) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const CoronaSpec spec = random_spec(rng, 5, 4);
    const auto p = generalized_corona(spec);
    ASSERT_EQ(adjacency(p.graph), oracle::product_adjacency(spec)) << describe(spec);
    std::size_t sat_vertices = 0, sat_edges = 0;
    for (const auto& h : spec.satellites) {
      sat_vertices += h.order();
      sat_edges += h.size();
    }
    EXPECT_EQ(p.graph.order(), spec.base.order() + sat_vertices);
    EXPECT_EQ(p.graph.size(), spec.base.size() + sat_edges + sat_vertices);
  }
}

TEST(GeneralizedCorona, DegreesOfBaseAndSatelliteVertices) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const CoronaSpec spec = random_spec(rng, 5, 4);
    const auto p = generalized_corona(spec);
    for (std::size_t l = 0; l < spec.base.order(); ++l) {
      EXPECT_EQ(p.graph.degree(l), spec.base.degree(l) + spec.satellites[l].order());
      const auto range = p.layout.satellites[l];
      for (std::size_t w = 0; w < range.size(); ++w)
        EXPECT_EQ(p.graph.degree(range.begin + w), spec.satellites[l].degree(w) + 1);
    }
  }
}

TEST(GeneralizedCorona, UniformEqualsCorona) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const SignedGraph g = random_graph(rng, rng.between(1, 5));
    const SignedGraph h = random_graph(rng, rng.between(0, 4));
    EXPECT_EQ(corona(g, h).graph, generalized_corona({g, std::vector<SignedGraph>(g.order(), h)}).graph);
  }
}

TEST(BlockMatrices, Fig2) {
  const auto b = block_matrices(fig2());
  Matrix<Rational> p(2, 2);
  p(0, 0) = p(1, 1) = 1;
  EXPECT_EQ(b.p, p);
  const std::vector<long> row0 = {1, -1, -1, 0, 0, 0}, row1 = {0, 0, 0, 1, -1, -1};
  for (std::size_t j = 0; j < 6; ++j) {
    EXPECT_EQ(b.q(0, j), row0[j]);
    EXPECT_EQ(b.q(1, j), row1[j]);
  }
}

TEST(BlockMatrices, K1K1) {
  const CoronaSpec spec{families::empty(1), {families::empty(1)}};
  const auto b = block_matrices(spec);
  EXPECT_EQ(b.p(0, 0), 1);
  EXPECT_EQ(b.q(0, 0), 1);
  EXPECT_EQ(b.d(0, 0), 0);
  Matrix<Rational> expect(2, 2);
  expect(0, 1) = expect(1, 0) = 1;
  EXPECT_EQ(assemble_adjacency(spec.base, b), expect);
}

TEST(BlockMatrices, AssembleToProductAdjacency) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const CoronaSpec spec = random_spec(rng, 5, 4);
    const auto b = block_matrices(spec);
    const auto pq = b.p * b.q;
    for (std::size_t i = 0; i < pq.rows(); ++i)
      for (std::size_t j = 0; j < pq.cols(); ++j) EXPECT_TRUE(pq(i, j) == 0 || pq(i, j) == 1 || pq(i, j) == -1);
    EXPECT_EQ(assemble_adjacency(spec.base, b), adjacency(generalized_corona(spec).graph));
  }
}
