#include <doctest.h>

#include "ahdb/error.hpp"
#include "ahdb/graph.hpp"
#include "oracles.hpp"

using namespace ahdb;

TEST_SUITE("graph") {

TEST_CASE("G_3^3 has six vertices and twelve edges") {
  const CorrespondingGraph g(Parameters(3, 3));
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  const std::vector<std::vector<Code>> words{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (VertexId v = 0; v < 6; ++v) {
    CHECK(std::vector<Code>(g.vertex(v).begin(), g.vertex(v).end()) == words[v]);
    CHECK(g.index_of(words[v]) == v);
  }
}

TEST_CASE("small graphs") {
  const CorrespondingGraph g22(Parameters(2, 2));
  CHECK(g22.vertex_count() == 2);
  REQUIRE(g22.edge_count() == 2);
  CHECK(g22.edge(0).from == 0);
  CHECK(g22.edge(0).to == 1);
  CHECK(g22.edge(1).from == 1);
  CHECK(g22.edge(1).to == 0);

  const CorrespondingGraph g43(Parameters(4, 3));
  CHECK(g43.vertex_count() == 12);
  CHECK(g43.edge_count() == 36);
  const GraphReport r = graph_report(g43);
  CHECK(r.min_in_degree == 3);
  CHECK(r.max_in_degree == 3);
  CHECK(r.min_out_degree == 3);
  CHECK(r.max_out_degree == 3);
}

TEST_CASE("infeasible and oversized parameters") {
  CHECK_THROWS_AS(CorrespondingGraph(Parameters(1, 3)), Error);
  CHECK_THROWS_AS(CorrespondingGraph(Parameters(3, 1)), Error);
  try {
    build_graph(Parameters(2, 1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleParameters);
  }
  try {
    build_graph(Parameters(20, 8));
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("edge order and overlap") {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      const CorrespondingGraph g(Parameters(k, n));
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto out = g.out_edges(u);
        for (std::size_t j = 0; j < out.size(); ++j) {
          const Edge& e = out[j];
          CHECK(e.from == u);
          if (j > 0) CHECK(out[j - 1].emitted < e.emitted);
          const auto from = g.vertex(e.from);
          const auto to = g.vertex(e.to);
          CHECK(std::equal(from.begin() + 1, from.end(), to.begin()));
          CHECK(e.emitted == to.back());
          CHECK(e.from != e.to);
          CHECK(g.edge_between(u, e.to) == g.first_out_edge(u) + j);
        }
      }
    }
  }
}

TEST_CASE("adjacency matrix examples") {
  const IntMatrix a22 = adjacency_matrix(CorrespondingGraph(Parameters(2, 2)));
  CHECK(a22(0, 0) == 0);
  CHECK(a22(0, 1) == 1);
  CHECK(a22(1, 0) == 1);
  CHECK(a22(1, 1) == 0);

  const IntMatrix a32 = adjacency_matrix(CorrespondingGraph(Parameters(3, 2)));
  CHECK(a32 == IntMatrix::all_ones(3) - IntMatrix::identity(3));

  const IntMatrix a33 = adjacency_matrix(CorrespondingGraph(Parameters(3, 3)));
  CHECK(a33.trace() == 0);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a33.row_sum(i) == 2);
    CHECK(a33.column_sum(i) == 2);
  }
}

TEST_CASE("adjacency matrix matches pairwise construction") {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
      const IntMatrix a = adjacency_matrix(CorrespondingGraph(Parameters(k, n)));
      const auto expected = oracle::adjacency_by_pairs(k, n);
      REQUIRE(a.dim() == expected.size());
      bool same = true;
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) same = same && a(i, j) == expected[i][j];
      CHECK_MESSAGE(same, "k=" << k << " n=" << n);
    }
  }
}

TEST_CASE("power identity examples and oracle") {
  CHECK(verify_power_identity(CorrespondingGraph(Parameters(3, 3))));
  CHECK(verify_power_identity(CorrespondingGraph(Parameters(2, 2))));
  CHECK(verify_power_identity(CorrespondingGraph(Parameters(4, 3))));

  // Independent check with machine integers for G_4^3.
  const auto a = oracle::adjacency_by_pairs(4, 3);
  std::vector<std::vector<long long>> al(a.size(), std::vector<long long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) al[i][j] = a[i][j];
  const auto a2 = oracle::multiply(al, al);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a2[i][j] + al[i][j] == 1);
}

TEST_CASE("reports across the grid") {
  for (std::uint32_t k = 2; k <= 6; ++k) {
    for (std::uint32_t n = 2; n <= 5; ++n) {
      const Parameters p(k, n);
      if (p.sequence_length() > 20000) continue;
      const CorrespondingGraph g(p);
      const GraphReport r = graph_report(g);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(r.vertices == p.vertex_count());
      CHECK(r.edges == p.sequence_length());
      CHECK(r.min_in_degree == k - 1);
      CHECK(r.max_in_degree == k - 1);
      CHECK(r.min_out_degree == k - 1);
      CHECK(r.max_out_degree == k - 1);
      CHECK(r.loops == 0);
      CHECK(r.parallel_edges == 0);
      CHECK(r.strongly_connected);
      REQUIRE(r.power_identity.has_value());
      CHECK(*r.power_identity);
    }
  }
}

TEST_CASE("named report examples") {
  const GraphReport r33 = graph_report(CorrespondingGraph(Parameters(3, 3)));
  CHECK(r33.vertices == 6);
  CHECK(r33.edges == 12);
  CHECK(r33.max_out_degree == 2);
  const GraphReport r23 = graph_report(CorrespondingGraph(Parameters(2, 3)));
  CHECK(r23.vertices == 2);
  CHECK(r23.edges == 2);
  CHECK(r23.min_in_degree == 1);
  CHECK(r23.strongly_connected);
  const GraphReport r52 = graph_report(CorrespondingGraph(Parameters(5, 2)));
  CHECK(r52.vertices == 5);
  CHECK(r52.edges == 20);
  CHECK(r52.min_out_degree == 4);
  CHECK(r52.loops == 0);
}

TEST_CASE("index_of rejects non-vertices") {
  const CorrespondingGraph g(Parameters(3, 4));
  CHECK_FALSE(g.index_of(std::vector<Code>{0, 0, 1}).has_value());
  CHECK_FALSE(g.index_of(std::vector<Code>{0, 1}).has_value());
  CHECK_FALSE(g.index_of(std::vector<Code>{0, 1, 3}).has_value());
}

}  // TEST_SUITE
