#include <doctest.h>

#include "bellrec/canonical.hpp"
#include "bellrec/generate.hpp"
#include "bellrec/graph.hpp"
#include "bellrec/graph6.hpp"
#include "bellrec/line_root.hpp"
#include "oracles.hpp"

using namespace bellrec;

namespace {

Graph k3_plus_k1() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("complement examples and involution") {
  CHECK(complement(Graph::complete(3)) == Graph::empty(3));
  CHECK(complement(Graph::empty(5)) == Graph::complete(5));
  CHECK(is_isomorphic(complement(Graph::cycle(5)), Graph::cycle(5)));
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_labeled_graphs(n)) REQUIRE(complement(complement(g)) == g);
  for (const Graph& g : generate_nonisomorphic_graphs(6)) REQUIRE(complement(complement(g)) == g);
  for (const Graph& g : generate_nonisomorphic_graphs(7)) REQUIRE(complement(complement(g)) == g);
}

TEST_CASE("universal vertices and stripping") {
  CHECK(universal_vertices(Graph::complete(4)) == 0b1111);
  CHECK(universal_vertices(Graph::star(3)) == 0b0001);
  CHECK(universal_vertices(Graph::cycle(4)) == 0);
  CHECK(strip_universal(Graph::complete(4)).order() == 0);
  CHECK(strip_universal(Graph::star(3)) == Graph::empty(3));
  CHECK(strip_universal(Graph::cycle(5)) == Graph::cycle(5));
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      Graph s = strip_universal(g);
      REQUIRE(strip_universal(s) == s);
    }
}

TEST_CASE("claw closure") {
  CHECK(is_isomorphic(claw_closure(Graph::empty(3)), k3_plus_k1()));
  CHECK(is_isomorphic(claw_closure(Graph::cycle(5)), Graph::cycle(5)));
  CHECK(is_isomorphic(claw_closure(Graph::star(3)), k3_plus_k1()));
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      Graph c = claw_closure(g);
      REQUIRE(is_isomorphic(claw_closure(c), c));
    }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(Graph::complete(4)) == 4);
  CHECK(chromatic_number(Graph::cycle(6)) == 2);
  CHECK(chromatic_number(Graph::cycle(5)) == 3);
  CHECK(chromatic_number(Graph(0)) == 0);
  for (int n = 1; n <= 9; ++n) CHECK(chromatic_number(Graph::complete(n)) == n);
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      auto parts = optimal_colouring(g);
      int chi = static_cast<int>(parts.size());
      REQUIRE(chi <= g.max_degree() + 1);
      VertexMask seen = 0;
      for (VertexMask p : parts) {
        for (int v = 0; v < n; ++v)
          if ((p >> v) & 1U) REQUIRE((g.neighbours(v) & p) == 0);
        seen |= p;
      }
      REQUIRE(seen == g.all_vertices());
      // No colouring with chi - 1 colours: brute force over colour maps.
      if (chi >= 2 && n <= 6) {
        int k = chi - 1;
        std::vector<int> c(n, 0);
        bool found = false;
        while (!found) {
          bool proper = true;
          for (auto [u, v] : g.edges())
            if (c[u] == c[v]) proper = false;
          if (proper) found = true;
          int i = 0;
          while (i < n && c[i] == k - 1) c[i++] = 0;
          if (i == n) break;
          ++c[i];
        }
        REQUIRE_FALSE(found);
      }
    }
}

TEST_CASE("line graph") {
  CHECK(is_isomorphic(line_graph(Graph::star(3)), Graph::complete(3)));
  CHECK(line_graph(Graph(1)).order() == 0);
  CHECK(is_isomorphic(line_graph(Graph::path(4)), Graph::path(3)));
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      Graph l = line_graph(g);
      REQUIRE(l.order() == g.size());
      auto es = g.edges();
      for (std::size_t i = 0; i < es.size(); ++i)
        REQUIRE(l.degree(static_cast<int>(i)) == g.degree(es[i].first) + g.degree(es[i].second) - 2);
    }
}

TEST_CASE("triangle counts") {
  CHECK(count_triangles(Graph::complete(3)) == 1);
  CHECK(count_triangles(Graph::cycle(5)) == 0);
  CHECK(count_triangles(Graph::complete(4)) == 4);
  CHECK(count_triangles(Graph::complete(7)) == 35);
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));
  CHECK_FALSE(is_isomorphic(Graph::star(3), k3_plus_k1()));
  Graph p3 = Graph::path(3);
  Graph p3b = Graph::from_edges(3, {{0, 2}, {2, 1}});
  CHECK(is_isomorphic(p3, p3b));
}

TEST_CASE("canonical code agrees with permutation search") {
  for (int n = 0; n <= 5; ++n) {
    auto reps = generate_nonisomorphic_graphs(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        REQUIRE((canonical_code(reps[i]) == canonical_code(reps[j])) ==
                oracle::permutation_isomorphic(reps[i], reps[j]));
  }
  // Every labeled graph on <= 5 vertices gets the code of its class
  // representative, and the representatives are pairwise non-isomorphic.
  for (int n = 0; n <= 5; ++n) {
    auto reps = oracle::classes_by_search(n);
    std::vector<CanonicalCode> codes;
    for (const auto& r : reps) codes.push_back(canonical_code(r));
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      auto c = canonical_code(g);
      int hits = 0;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (codes[i] == c) {
          ++hits;
          REQUIRE(oracle::permutation_isomorphic(g, reps[i]));
        }
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("canonical code on 7 vertices against permutation search") {
  auto reps = generate_nonisomorphic_graphs(7);
  // Random relabelings must keep the code; a pair of distinct classes must
  // not be isomorphic by search. A sample keeps this quick.
  for (std::size_t i = 0; i < reps.size(); i += 37) {
    Graph g = reps[i];
    std::vector<int> perm{3, 6, 0, 5, 1, 2, 4};
    Graph h(7);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    REQUIRE(canonical_code(g) == canonical_code(h));
    const Graph& other = reps[(i + 1) % reps.size()];
    if (other.size() == g.size()) REQUIRE_FALSE(oracle::permutation_isomorphic(g, other));
  }
}

TEST_CASE("class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(generate_nonisomorphic_graphs(n).size() == expected[n]);
  for (int n = 0; n <= 4; ++n) CHECK(oracle::classes_by_search(n).size() == expected[n]);
  CHECK_THROWS_AS(generate_nonisomorphic_graphs(9), CapExceeded);
  CHECK(generate_nonisomorphic_graphs(1, 6).size() == 208);
}

TEST_CASE("graph6 codec") {
  CHECK(from_graph6("B?") == Graph::empty(3));
  CHECK(from_graph6("Bw") == Graph::complete(3));
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::empty(3)) == "B?");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("?").order() == 0);
  // Petersen graph, the standard example string.
  Graph pet = from_graph6("IheA@GUAo");
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      auto s = to_graph6(g);
      REQUIRE(from_graph6(s) == g);
      REQUIRE(to_graph6(from_graph6(s)) == s);
    }
  Graph big = Graph::cycle(64);
  auto s = to_graph6(big);
  CHECK(s[0] == '~');
  CHECK(from_graph6(s) == big);
  CHECK(from_graph6(to_graph6(Graph::path(63))) == Graph::path(63));
  CHECK_THROWS_AS(from_graph6(""), Graph6Error);
  CHECK_THROWS_AS(from_graph6("Bww"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("B"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("B\x01"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("Bx"), Graph6Error);
}

TEST_CASE("graph bounds") {
  CHECK_THROWS_AS(Graph(65), std::length_error);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}
