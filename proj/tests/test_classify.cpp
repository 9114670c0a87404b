#include <doctest.h>

#include <random>

#include "bellrec/bell.hpp"
#include "bellrec/classify.hpp"
#include "bellrec/generate.hpp"
#include "bellrec/graph6.hpp"
#include "oracles.hpp"

using namespace bellrec;

namespace {

struct Item {
  Graph g;
  int k;
};

std::vector<Item> items(int nmax) {
  std::vector<Item> out;
  for (int n = 1; n <= nmax; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n))
      for (int k = 1; k <= n + 1; ++k) out.push_back({g, k});
  return out;
}

Graph pad(const Graph& g, int universals) {
  Graph h = g;
  for (int i = 0; i < universals; ++i) h = with_universal_vertex(h);
  return h;
}

}  // namespace

TEST_CASE("classification examples") {
  auto c = classify_pair(Graph::complete(5), 3, Graph::complete(7), 2);
  CHECK(c.equivalent);
  CHECK(std::find(c.conditions.begin(), c.conditions.end(), 2) != c.conditions.end());

  auto p3k1 = disjoint_union(Graph::path(3), Graph(1));
  c = classify_pair(p3k1, 3, Graph::empty(3), 1);
  CHECK(c.equivalent);
  CHECK(c.conditions == std::vector<int>{8});

  CHECK_FALSE(classify_pair(Graph::cycle(4), 2, Graph::cycle(5), 2).equivalent);
  CHECK_THROWS_AS(classify_pair(Graph::cycle(4), 0, Graph::cycle(5), 2), std::invalid_argument);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_isomorphic(Graph::empty(3), 2, Graph::star(3), 3));
  CHECK(oracle_isomorphic(Graph::cycle(5), 2, Graph::cycle(5), 2));
  CHECK_FALSE(oracle_isomorphic(Graph::cycle(4), 2, Graph::cycle(5), 2));
}

TEST_CASE("canonical-code oracle matches permutation search on Bell graphs up to 8 vertices") {
  std::vector<std::pair<Item, Graph>> small;
  for (const auto& it : items(4)) {
    auto b = build_bell(it.g, BellVariant::at_least(it.k));
    if (b.order() <= 8) small.push_back({it, b.graph.to_graph()});
  }
  BellCodeCache cache;
  for (const auto& [a, ga] : small)
    for (const auto& [b, gb] : small)
      REQUIRE(oracle_isomorphic(a.g, a.k, b.g, b.k, &cache) == oracle::permutation_isomorphic(ga, gb));
}

TEST_CASE("classification agrees with the oracle on every pair, n <= 5, k <= n+1") {
  const auto all = items(5);
  BellCodeCache cache;
  long agree = 0;
  long equivalent = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      const auto& a = all[i];
      const auto& b = all[j];
      auto c = classify_pair(a.g, a.k, b.g, b.k);
      const bool truth = oracle_isomorphic(a.g, a.k, b.g, b.k, &cache);
      INFO(to_graph6(a.g), " k1=", a.k, " ", to_graph6(b.g), " k2=", b.k);
      REQUIRE(c.equivalent == truth);
      ++agree;
      if (truth) ++equivalent;
    }
  CHECK(all.size() == 283);
  CHECK(agree == 283L * 283L);
  MESSAGE("equivalent ordered pairs: ", equivalent);
}

TEST_CASE("classification is reflexive, symmetric and transitive, n <= 3") {
  const auto all = items(3);
  const int m = static_cast<int>(all.size());
  std::vector<std::vector<char>> rel(m, std::vector<char>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto c = classify_pair(all[i].g, all[i].k, all[j].g, all[j].k);
      const auto d = classify_pair(all[j].g, all[j].k, all[i].g, all[i].k);
      REQUIRE(c.conditions == d.conditions);
      rel[i][j] = c.equivalent;
    }
  for (int i = 0; i < m; ++i) REQUIRE(rel[i][i]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        if (rel[i][j] && rel[j][l]) REQUIRE(rel[i][l]);
}

TEST_CASE("for a fixed host, distinct k above chi give distinct graphs, n <= 5") {
  BellCodeCache cache;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      const int chi = chromatic_number(g);
      for (int k1 = chi + 1; k1 <= n; ++k1)
        for (int k2 = chi + 1; k2 <= n; ++k2)
          if (oracle_isomorphic(g, k1, g, k2, &cache)) REQUIRE(k1 == k2);
    }
}

TEST_CASE("padding with universal vertices keeps the upper-Bell graph, 50 random pairs") {
  std::mt19937_64 rng(99);
  BellCodeCache cache;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto& pool = generate_nonisomorphic_graphs(n);
    const Graph& g = pool[rng() % pool.size()];
    const int k = 1 + static_cast<int>(rng() % n);
    const int u1 = static_cast<int>(rng() % 3);
    const int u2 = static_cast<int>(rng() % 3);
    const Graph g1 = pad(g, u1);
    const Graph g2 = pad(g, u2);
    INFO(to_graph6(g), " k=", k, " pads ", u1, ",", u2);
    REQUIRE(oracle_isomorphic(g1, k + u1, g2, k + u2, &cache));
    REQUIRE(classify_pair(g1, k + u1, g2, k + u2).equivalent);
  }
}

TEST_CASE("classification json") {
  auto c = classify_pair(Graph::complete(5), 3, Graph::complete(7), 2);
  bool truth = true;
  auto j = classification_json(c, &truth);
  CHECK(j.find("\"equivalent\": true") != std::string::npos);
  CHECK(j.find("\"oracle\": true") != std::string::npos);
}
