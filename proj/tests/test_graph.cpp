#include <doctest.h>

#include <algorithm>
#include <set>

#include "motif/graph.hpp"
#include "support/gen.hpp"

using namespace motif;

namespace {
VertexSet vec(std::span<const VertexId> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("edge list parsing and class assignment") {
  SUBCASE("path 0->1->2") {
    const auto res = parse_edge_list("0 1\n1 2");
    const auto& g = res.graph;
    CHECK(g.n() == 3);
    CHECK(g.m_directed() == 2);
    CHECK(vec(g.class_b(1)) == VertexSet{2});
    CHECK(vec(g.class_c(1)) == VertexSet{0});
    CHECK(g.class_a(1).empty());
  }

  SUBCASE("bidirected pair") {
    const auto res = parse_edge_list("0 1\n1 0");
    const auto& g = res.graph;
    CHECK(g.n() == 2);
    CHECK(g.m_directed() == 2);
    CHECK(vec(g.class_a(0)) == VertexSet{1});
    CHECK(vec(g.class_a(1)) == VertexSet{0});
    CHECK(g.bidirected_pairs() == 1);
    CHECK(g.m_unordered() == 1);
  }

  SUBCASE("self-loops and duplicates dropped") {
    const auto res = parse_edge_list("5 5\n0 1\n0 1");
    CHECK(res.graph.n() == 2);
    CHECK(res.graph.m_directed() == 1);
    CHECK(res.self_loops_dropped == 1);
    CHECK(res.duplicates_dropped == 1);
  }

  SUBCASE("comments, blank lines, arbitrary ids") {
    const auto res = parse_edge_list("# header\n% other\n\n10 20\n  20   30 \n");
    CHECK(res.graph.n() == 3);
    CHECK(res.graph.m_directed() == 2);
    CHECK(res.graph.has_edge(0, 1));
    CHECK(res.graph.has_edge(1, 2));
  }

  SUBCASE("malformed token names the line") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n2 x\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("7\n"), std::runtime_error);
  }

  SUBCASE("empty input") {
    CHECK_THROWS_WITH_AS(parse_edge_list(""), "no edges", std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), std::runtime_error);
  }
}

TEST_CASE("degree_sum") {
  SUBCASE("bidirected triangle") {
    const auto g = testgen::bidirected_clique(3);
    const VertexSet all{0, 1, 2};
    CHECK(degree_sum(g, all) == 6);
  }

  SUBCASE("empty set") {
    const auto g = testgen::bidirected_clique(3);
    CHECK(degree_sum(g, {}) == 0);
  }

  SUBCASE("star") {
    const auto g = testgen::out_star(5);
    const VertexSet s{0, 1};
    CHECK(degree_sum(g, s) == 6);
  }

  SUBCASE("vertex out of range") {
    const auto g = testgen::bidirected_clique(3);
    const VertexSet bad{0, 7};
    CHECK_THROWS_AS(degree_sum(g, bad), std::out_of_range);
  }
}

TEST_CASE("round-trip through the edge-list format") {
  testgen::Rng rng(7101);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<VertexId>(3 + rng.below(25));
    const auto g = testgen::er_digraph(n, 0.05 + 0.4 * rng.uniform01(), rng.next());
    if (g.m_directed() == 0) continue;
    const auto reloaded = parse_edge_list(g.to_edge_list()).graph;
    REQUIRE(reloaded.n() == g.n());
    REQUIRE(reloaded.m_directed() == g.m_directed());
    const auto a = g.edges();
    const auto b = reloaded.edges();
    CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST_CASE("neighbor classes partition and are symmetric on random graphs") {
  testgen::Rng rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<VertexId>(2 + rng.below(24));
    const auto g = testgen::er_digraph(n, 0.02 + 0.5 * rng.uniform01(), rng.next());

    for (VertexId v = 0; v < n; ++v) {
      const auto a = g.class_a(v);
      const auto b = g.class_b(v);
      const auto c = g.class_c(v);
      std::set<VertexId> all(a.begin(), a.end());
      all.insert(b.begin(), b.end());
      all.insert(c.begin(), c.end());
      REQUIRE(all.size() == a.size() + b.size() + c.size());  // disjoint
      REQUIRE(all.size() == g.degree(v));
      REQUIRE(!all.contains(v));

      for (VertexId u : a) {
        const auto ua = g.class_a(u);
        REQUIRE(std::binary_search(ua.begin(), ua.end(), v));
      }
      for (VertexId u : b) {
        const auto uc = g.class_c(u);
        REQUIRE(std::binary_search(uc.begin(), uc.end(), v));
      }
    }
  }
}

TEST_CASE("every ordered pair falls in exactly one class") {
  const auto g = testgen::er_digraph(18, 0.3, 99);
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = 0; v < g.n(); ++v) {
      if (u == v) continue;
      const auto cls = g.classify(u, v);
      const bool uv = g.has_edge(u, v);
      const bool vu = g.has_edge(v, u);
      switch (cls) {
        case NeighborClass::A: CHECK((uv && vu)); break;
        case NeighborClass::B: CHECK((!uv && vu)); break;
        case NeighborClass::C: CHECK((uv && !vu)); break;
        case NeighborClass::N: CHECK((!uv && !vu)); break;
      }
    }
  }
}
