#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

Graph K(int n) { return make_family(FamilySpec::complete(n)); }
Graph E(int n) { return make_family(FamilySpec::empty(n)); }
Graph P(int n) { return make_family(FamilySpec::path(n)); }
Graph C(int n) { return make_family(FamilySpec::cycle(n)); }
Graph S(int n) { return make_family(FamilySpec::star(n)); }
Graph T(int n, int k) { return make_family(FamilySpec::pyramid(n, k)); }

bool well_formed(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
  }
  return true;
}

const std::vector<std::vector<double>> kExampleMatrix = {{1, 1, 0, 0, 1},
                                                         {1, 2, 1, 0, 0},
                                                         {0, 1, 2, 1, 0},
                                                         {0, 0, 1, 2, 1},
                                                         {1, 0, 0, 1, 3}};

}  // namespace

TEST(Families, EdgeCounts) {
  EXPECT_EQ(K(5).order(), 5U);
  EXPECT_EQ(K(5).edge_count(), 10U);
  EXPECT_EQ(T(6, 3).edge_count(), 12U);
  EXPECT_EQ(S(4).order(), 5U);
  EXPECT_EQ(S(4).edge_count(), 4U);
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(T(n, k).edge_count(), static_cast<std::size_t>(k * (k - 1) / 2 + k * (n - k)));
  EXPECT_EQ(make_family(FamilySpec::complete_bipartite(2, 3)).edge_count(), 6U);
  EXPECT_EQ(C(7).edge_count(), 7U);
  EXPECT_EQ(P(7).edge_count(), 6U);
}

TEST(Families, PyramidWithOneBaseVertexIsStar) {
  EXPECT_TRUE(is_isomorphic(S(4), T(5, 1)));
  EXPECT_TRUE(is_isomorphic(join(K(3), E(3)), T(6, 3)));
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(make_family(FamilySpec::pyramid(5, 5)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::pyramid(5, 0)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::cycle(2)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::complete_bipartite(0, 3)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::complete(0)), ParameterError);
  EXPECT_THROW(make_family({FamilyKind::Pyramid, {6}}), ParameterError);
  EXPECT_THROW(Graph(0), ParameterError);
  EXPECT_THROW(Graph(65), CapExceeded);
  EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, RejectsLoopsAndBadIndices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ParameterError);
  EXPECT_THROW(g.add_edge(0, 3), ParameterError);
  EXPECT_THROW((void)g.adjacent(5, 0), ParameterError);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(K(5)), E(5));
  EXPECT_TRUE(is_isomorphic(complement(C(5)), C(5)));
  EXPECT_TRUE(oracle::brute_isomorphic(complement(C(5)), C(5)));
  EXPECT_FALSE(oracle::brute_isomorphic(complement(C(6)), C(6)));
}

TEST(Complement, InvolutionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(1 + i % 20, rng);
    const auto h = complement(g);
    EXPECT_TRUE(well_formed(h));
    EXPECT_EQ(g.edge_count() + h.edge_count(), g.order() * (g.order() - 1) / 2);
    EXPECT_EQ(complement(h), g);
  }
}

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(disjoint_union(E(2), E(3)), E(5));
  const auto mate = disjoint_union(C(4), K(1));
  EXPECT_EQ(mate.order(), 5U);
  EXPECT_EQ(mate.edge_count(), 4U);
  EXPECT_EQ(mate.degree(4), 0U);
  EXPECT_FALSE(is_isomorphic(S(4), mate));
  EXPECT_FALSE(oracle::brute_isomorphic(S(4), mate));
}

TEST(Join, Examples) {
  EXPECT_EQ(join(E(2), E(3)), make_family(FamilySpec::complete_bipartite(2, 3)));
  EXPECT_EQ(join(K(3), E(3)), T(6, 3));
  EXPECT_EQ(join(K(1), E(6)), S(6));
}

TEST(JoinAndUnion, EdgeArithmeticOnRandomPairs) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> order(1, 8);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_graph(order(rng), rng);
    const auto b = oracle::random_graph(order(rng), rng);
    const auto u = disjoint_union(a, b);
    const auto j = join(a, b);
    EXPECT_EQ(u.order(), a.order() + b.order());
    EXPECT_EQ(u.edge_count(), a.edge_count() + b.edge_count());
    EXPECT_EQ(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
    EXPECT_TRUE(well_formed(u));
    EXPECT_TRUE(well_formed(j));
    // block structure
    for (Vertex x = 0; x < a.order(); ++x)
      for (Vertex y = 0; y < b.order(); ++y) {
        EXPECT_FALSE(u.adjacent(x, a.order() + y));
        EXPECT_TRUE(j.adjacent(x, a.order() + y));
      }
  }
}

TEST(LineGraph, Examples) {
  EXPECT_TRUE(oracle::brute_isomorphic(line_graph(P(4)), P(3)));
  EXPECT_TRUE(oracle::brute_isomorphic(line_graph(C(5)), C(5)));
  EXPECT_EQ(line_graph(S(3)), K(3));
  EXPECT_EQ(line_graph(S(4)), K(4));
  EXPECT_TRUE(oracle::brute_isomorphic(line_graph(P(6)), P(5)));
  EXPECT_THROW(line_graph(E(4)), ParameterError);
}

TEST(LineGraph, DegreeSumIdentity) {
  // sum over vertices of C(deg, 2) counts adjacent edge pairs
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_graph(7, rng);
    if (g.edge_count() == 0) continue;
    std::size_t pairs = 0;
    for (Vertex v = 0; v < g.order(); ++v) pairs += g.degree(v) * (g.degree(v) - 1) / 2;
    const auto l = line_graph(g);
    EXPECT_EQ(l.order(), g.edge_count());
    EXPECT_EQ(l.edge_count(), pairs);
  }
}

TEST(InducedSubgraph, Examples) {
  const std::vector<Vertex> three{0, 2, 4};
  EXPECT_EQ(induced_subgraph(K(5), three), K(3));
  const std::vector<Vertex> base{0, 1, 2};
  EXPECT_EQ(induced_subgraph(T(6, 3), base), K(3));
  const std::vector<Vertex> apexes{3, 4, 5};
  EXPECT_EQ(induced_subgraph(T(6, 3), apexes), E(3));
  std::mt19937_64 rng(14);
  const auto g = oracle::random_graph(9, rng);
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(induced_subgraph(g, all), g);
  const std::vector<Vertex> bad{0, 9};
  EXPECT_THROW(induced_subgraph(g, bad), ParameterError);
  EXPECT_THROW(induced_subgraph(g, std::vector<Vertex>{}), ParameterError);
}

TEST(Canonical, TwoLabelingsOfC4) {
  Graph a(4);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  a.add_edge(2, 3);
  a.add_edge(3, 0);
  Graph b(4);
  b.add_edge(0, 2);
  b.add_edge(2, 1);
  b.add_edge(1, 3);
  b.add_edge(3, 0);
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(C(4)), canonical_form(P(4)));
}

TEST(Canonical, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const auto n = 1 + static_cast<std::size_t>(i % 10);
    const auto g = oracle::random_graph(n, rng, 0.2 + 0.6 * (i % 7) / 6.0);
    const auto perm = oracle::random_permutation(n, rng);
    const auto h = permute(g, perm);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(is_isomorphic(g, h));
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
    EXPECT_TRUE(oracle::brute_isomorphic(canonical_graph(g), g));
  }
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 400; ++i) {
    const auto n = 2 + static_cast<std::size_t>(i % 5);
    const auto a = oracle::random_graph(n, rng);
    auto b = oracle::random_graph(n, rng);
    if (i % 3 == 0) b = permute(a, oracle::random_permutation(n, rng));
    EXPECT_EQ(is_isomorphic(a, b), oracle::brute_isomorphic(a, b)) << graph6_encode(a) << " " << graph6_encode(b);
  }
}

TEST(Canonical, ElevenClassesOfOrderFour) {
  std::set<CanonicalForm> forms;
  std::vector<Graph> representatives;
  oracle::for_each_labeled_graph(4, [&](const Graph& g) {
    if (forms.insert(canonical_form(g)).second) representatives.push_back(g);
  });
  EXPECT_EQ(forms.size(), 11U);
  for (std::size_t i = 0; i < representatives.size(); ++i)
    for (std::size_t j = i + 1; j < representatives.size(); ++j)
      EXPECT_FALSE(oracle::brute_isomorphic(representatives[i], representatives[j]));
}

TEST(Canonical, OrderCap) {
  EXPECT_THROW(canonical_form(K(11)), CapExceeded);
  EXPECT_THROW(is_isomorphic(K(11), K(11)), CapExceeded);
  EXPECT_NO_THROW(canonical_form(C(10)));
  EXPECT_FALSE(is_isomorphic(K(3), K(4)));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(C(5), complement(C(5))));
  EXPECT_FALSE(is_isomorphic(S(4), disjoint_union(C(4), K(1))));
  std::mt19937_64 rng(17);
  const auto g = oracle::random_graph(8, rng);
  EXPECT_TRUE(is_isomorphic(g, g));
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(K(5)), "D~{");
  EXPECT_EQ(graph6_encode(E(1)), "@");
  EXPECT_EQ(graph6_encode(K(5)), oracle::graph6(K(5)));
  EXPECT_EQ(graph6_decode("D~{"), K(5));
}

TEST(Graph6, MatchesReferenceEncoder) {
  std::mt19937_64 rng(18);
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto g = oracle::random_graph(n, rng);
    const auto text = graph6_encode(g);
    EXPECT_EQ(text, oracle::graph6(g));
    EXPECT_EQ(graph6_decode(text), g);
  }
}

TEST(Graph6, RoundTripOnAllGraphsUpToSeven) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const auto text = graph6_encode(g);
      if (graph6_decode(text) != g || graph6_encode(graph6_decode(text)) != text) ADD_FAILURE() << text;
      ++checked;
    });
  EXPECT_EQ(checked, 1U + 2 + 8 + 64 + 1024 + 32768 + 2097152);
}

TEST(Graph6, DecodeErrors) {
  EXPECT_THROW(graph6_decode(""), FormatError);
  EXPECT_THROW(graph6_decode("D~"), FormatError);       // too short
  EXPECT_THROW(graph6_decode("D~{{"), FormatError);     // too long
  EXPECT_THROW(graph6_decode("D~|"), FormatError);      // nonzero padding
  EXPECT_THROW(graph6_decode("D\x01{"), FormatError);   // non-printable
  EXPECT_THROW(graph6_decode("?"), FormatError);        // order 0
  EXPECT_THROW(graph6_decode("~?"), FormatError);       // truncated long header
  EXPECT_THROW(graph6_decode("~??D"), FormatError);     // long header for n < 63
  EXPECT_THROW(graph6_decode("~?AA"), CapExceeded);     // n = 65
  EXPECT_THROW(graph6_decode("~~??????"), CapExceeded);
}

TEST(Graph6, LongHeader) {
  const auto g = C(64);
  const auto text = graph6_encode(g);
  EXPECT_EQ(text.substr(0, 4), "~?@?");
  EXPECT_EQ(graph6_decode(text), g);
}

TEST(Dot, ListsEdges) {
  const auto dot = to_dot(P(3));
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
  EXPECT_EQ(dot.find("0 -- 2"), std::string::npos);
}

TEST(GraphOfMatrix, Examples) {
  EXPECT_TRUE(oracle::brute_isomorphic(graph_of_matrix(kExampleMatrix), C(5)));
  EXPECT_EQ(graph_of_matrix({{3, 0, 0}, {0, -1, 0}, {0, 0, 2}}), E(3));
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(1 + i, rng);
    EXPECT_EQ(graph_of_matrix(adjacency_matrix(g)), g);
  }
  EXPECT_THROW(graph_of_matrix({{0, 1}, {0, 0}}), ParameterError);
  EXPECT_THROW(graph_of_matrix({{0, 1, 0}, {1, 0, 0}}), ParameterError);
}

TEST(Structure, TreeCharacterizationsAgree) {
  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const bool connected = is_connected(g);
      const bool acyclic = is_forest(g);
      const bool tree_edges = g.edge_count() == n - 1;
      const bool a = connected && acyclic;
      const bool b = connected && tree_edges;
      const bool c = acyclic && tree_edges;
      if (a != b || b != c) ADD_FAILURE() << graph6_encode(g);
    });
}

TEST(Structure, ComponentsAndTriangles) {
  EXPECT_EQ(components(disjoint_union(C(4), K(1))).size(), 2U);
  EXPECT_EQ(components(E(5)).size(), 5U);
  EXPECT_TRUE(is_connected(T(7, 3)));
  EXPECT_EQ(triangle_count(K(5)), 10U);
  EXPECT_EQ(triangle_count(T(6, 3)), 10U);
  EXPECT_EQ(triangle_count(C(4)), 0U);
}
