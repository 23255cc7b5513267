#include <gtest/gtest.h>

#include <fstream>
#include "json.hpp"
#include <random>

#include "arrkit/accuracy/accuracy.hpp"
#include "arrkit/arrangement/isomorphism.hpp"
#include "arrkit/arrangement/structure.hpp"
#include "arrkit/error.hpp"
#include "arrkit/graphic/graph.hpp"
#include "arrkit/matfree/mat.hpp"
#include "support.hpp"

using namespace arrkit;
using namespace arrkit::testing;

namespace {

Graph complete(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

// Chordal graphs by adding vertices joined to a clique.
Graph random_chordal(std::mt19937& rng, int n) {
  Graph g(1, {});
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    const int root = pick(rng);
    std::vector<int> clique = {root};
    for (int w : g.neighbors(root)) {
      bool ok = std::bernoulli_distribution(0.5)(rng);
      for (int c : clique) ok = ok && g.has_edge(c, w);
      if (ok) clique.push_back(w);
    }
    g = g.with_vertex(clique);
  }
  return g;
}

// Proper colourings with t colours, counted directly.
std::int64_t count_colourings(const Graph& g, int t) {
  const int n = g.vertex_count();
  if (t == 0) return n == 0;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && c[static_cast<std::size_t>(u - 1)] != c[static_cast<std::size_t>(v - 1)];
    count += ok;
    int i = 0;
    while (i < n && ++c[static_cast<std::size_t>(i)] == t) c[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

Exponents roots(const IntPoly& p) { return *p.nonnegative_integer_roots(); }

}  // namespace

TEST(GraphicArrangement, Examples) {
  EXPECT_TRUE(graphic_arrangement(complete(3)).same_hyperplanes(braid(3)));
  const auto a = graphic_arrangement(paper_fixture(PaperGraph::G));
  EXPECT_EQ(a.size(), 18u);
  EXPECT_EQ(a.dim(), 10u);
  EXPECT_TRUE(graphic_arrangement(Graph(4, {})).empty());
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{1, 4}}), InvalidInput);
}

TEST(EliminationOrder, Examples) {
  ASSERT_TRUE(perfect_elimination_order(complete(3)));
  EXPECT_TRUE(is_elimination_order(complete(3), {1, 2, 3}));
  const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_FALSE(perfect_elimination_order(c4));
  const auto g = paper_fixture(PaperGraph::G);
  const std::vector<int> order = {2, 4, 6, 7, 8, 9, 1, 3, 5, 10};
  EXPECT_TRUE(is_elimination_order(g, order));
  EXPECT_TRUE(perfect_elimination_order(g));
  EXPECT_FALSE(is_elimination_order(g, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST(EliminationOrder, Exponents) {
  EXPECT_EQ(exponents_from_elimination(complete(3), {1, 2, 3}), (Exponents{0, 1, 2}));
  const auto g = paper_fixture(PaperGraph::G);
  EXPECT_EQ(exponents_from_elimination(g, {2, 4, 6, 7, 8, 9, 1, 3, 5, 10}), (Exponents{0, 1, 2, 2, 2, 2, 2, 2, 2, 3}));
  const auto gp = paper_fixture(PaperGraph::GPrime);
  EXPECT_EQ(exponents_from_elimination(gp, *perfect_elimination_order(gp)), (Exponents{0, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3}));
  EXPECT_THROW(exponents_from_elimination(g, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), InvalidInput);
}

TEST(Contract, Examples) {
  EXPECT_EQ(contract(complete(3), {1, 2}), Graph(2, {{1, 2}}));
  EXPECT_EQ(contract(complete(3), {2, 3}), Graph(2, {{1, 2}}));
  const auto g = paper_fixture(PaperGraph::G);
  EXPECT_EQ(roots(chromatic_polynomial(contract(g, {1, 2}))), (Exponents{0, 1, 2, 2, 2, 2, 2, 2, 3}));
  EXPECT_EQ(roots(chromatic_polynomial(contract(g, {1, 3}))), (Exponents{0, 1, 1, 2, 2, 2, 2, 2, 2}));
  EXPECT_THROW(contract(g, {2, 4}), InvalidInput);
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_polynomial(complete(3)), IntPoly::from_roots({0, 1, 2}));
  EXPECT_EQ(chromatic_polynomial(Graph(5, {})), IntPoly::monomial(5));
  EXPECT_EQ(chromatic_polynomial(paper_fixture(PaperGraph::G)), IntPoly::from_roots({0, 1, 2, 2, 2, 2, 2, 2, 2, 3}));
  EXPECT_THROW(chromatic_polynomial(complete(6), 10), CapExceeded);
}

TEST(GraphicProperties, ChromaticMatchesColouringsAndLattice) {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 7;
    const auto g = random_graph(rng, n, 0.2 + 0.1 * (t % 6));
    const auto p = chromatic_polynomial(g);
    EXPECT_EQ(p, characteristic_polynomial(graphic_arrangement(g)));
    if (n <= 6) {
      for (int c = 0; c <= 3; ++c) EXPECT_EQ(p.evaluate(c), count_colourings(g, c));
    }
  }
}

TEST(GraphicProperties, ChordalRootsEqualEliminationCounts) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_chordal(rng, 2 + t % 9);
    const auto order = perfect_elimination_order(g);
    ASSERT_TRUE(order);
    EXPECT_EQ(roots(chromatic_polynomial(g)), exponents_from_elimination(g, *order));
  }
  // Chordless cycles are found out.
  for (int n = 4; n <= 8; ++n) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    EXPECT_FALSE(perfect_elimination_order(Graph(n, e)));
  }
}

TEST(GraphicProperties, ContractionIsRestriction) {
  std::mt19937 rng(19);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, 3 + t % 6, 0.5);
    const auto a = graphic_arrangement(g);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto x = make_flat(a, {a.normal(i)});
      EXPECT_TRUE(restriction(a, x).same_hyperplanes(graphic_arrangement(contract(g, g.edges()[i]))));
    }
  }
}

TEST(PaperGraphs, FixtureFileMatches) {
  std::ifstream in(ARRKIT_SOURCE_DIR "/data/fixtures/paper_graphs.json");
  ASSERT_TRUE(in);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("version").get<int>(), 1);
  for (auto which : {PaperGraph::G, PaperGraph::GPrime}) {
    const auto& f = j.at("graphs").at(to_string(which));
    const Graph g(f.at("n").get<int>(), f.at("edges").get<std::vector<Graph::Edge>>());
    EXPECT_EQ(g, paper_fixture(which));
    EXPECT_EQ(f.at("checksum").get<std::string>(), graph_checksum(g));
  }
  EXPECT_EQ(paper_fixture(PaperGraph::G).edge_count(), 18u);
  EXPECT_EQ(paper_fixture(PaperGraph::GPrime).edge_count(), 22u);
}

TEST(PaperGraphs, AccuracyIsNotHereditary) {
  const auto g = paper_fixture(PaperGraph::G);
  const auto gp = paper_fixture(PaperGraph::GPrime);
  const auto a = graphic_arrangement(g);
  const auto b = graphic_arrangement(gp);

  const Exponents ea = exponents_from_elimination(g, {2, 4, 6, 7, 8, 9, 1, 3, 5, 10});
  const auto ra = check_accuracy(a, ea);
  EXPECT_EQ(ra.verdict, Verdict::NotAccurate);
  EXPECT_EQ(ra.failing_dimension(), std::optional<std::size_t>(9));

  AccuracyOptions almost;
  almost.mode = AccuracyMode::Almost;
  EXPECT_EQ(check_accuracy(a, ea, almost).verdict, Verdict::Accurate);
  EXPECT_TRUE(supersolvable_certificate(Lattice::build(a)));

  const auto eb = exponents_from_elimination(gp, *perfect_elimination_order(gp));
  EXPECT_EQ(check_accuracy(b, eb).verdict, Verdict::Accurate);

  // B^{H'} for H' = ker(x1 - x_v), and the localization at the flat of K10.
  const auto hv = make_flat(b, {graphic_arrangement(Graph(11, {{1, 11}})).normal(0)});
  EXPECT_TRUE(lattice_isomorphic(restriction(b, hv), a));
  HyperplaneSet inner = b.none();
  for (std::size_t i = 0; i < gp.edges().size(); ++i) inner[i] = gp.edges()[i].second <= 10;
  const auto loc = localization(b, make_flat(b, inner));
  EXPECT_EQ(loc.size(), 18u);
  EXPECT_TRUE(lattice_isomorphic(loc, a));
}

TEST(PaperGraphs, NotMatFree) {
  const auto a = graphic_arrangement(paper_fixture(PaperGraph::G));
  const auto r = search_mat_partition(a, std::nullopt);
  EXPECT_FALSE(r.partition);
  EXPECT_TRUE(r.conclusive);
}

TEST(PaperGraphs, ProductWithNonAccurateFactor) {
  const auto a = graphic_arrangement(paper_fixture(PaperGraph::G));
  const auto p = product(a, boolean_arrangement(1));
  EXPECT_EQ(check_accuracy(p, {0, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3}).verdict, Verdict::NotAccurate);
  const auto q = product(braid(3), boolean_arrangement(1));
  EXPECT_EQ(check_accuracy(q, {0, 1, 1, 2}).verdict, Verdict::Accurate);
}
