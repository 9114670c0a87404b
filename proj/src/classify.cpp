#include "bellrec/classify.hpp"

#include <stdexcept>

#include <json.hpp>

#include "bellrec/bell.hpp"
#include "bellrec/partitions.hpp"

namespace bellrec {

namespace {

struct Side {
  const Graph& g;
  int k;
  int n;
  Graph prime;

  Side(const Graph& graph, int kk) : g(graph), k(kk), n(graph.order()), prime(strip_universal(graph)) {}

  bool is_clique() const { return g.size() * 2 == n * (n - 1); }
};

bool iso(const Graph& a, const Graph& b) { return is_isomorphic(a, b); }

Graph clique_plus_isolated(int clique) { return disjoint_union(Graph::complete(clique), Graph(1)); }

Graph path3_plus_k1() { return disjoint_union(Graph::path(3), Graph(1)); }

bool cond7_side(const Side& s) {
  return (s.k <= s.n - 1 && iso(s.prime, clique_plus_isolated(3))) || (s.k == s.n - 1 && iso(s.prime, Graph::empty(3)));
}

bool cond8_side(const Side& s) {
  return (s.k <= s.n - 2 && iso(s.prime, Graph::empty(3))) || (s.k == s.n - 1 && iso(s.prime, path3_plus_k1()));
}

}  // namespace

Classification classify_pair(const Graph& g1, int k1, const Graph& g2, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("k must be at least 1");
  const Side a(g1, k1);
  const Side b(g2, k2);
  Classification c;
  auto both = [&](auto pred) { return pred(a) && pred(b); };

  if (both([](const Side& s) { return s.k > s.n; })) c.conditions.push_back(1);
  if (both([](const Side& s) { return s.k == s.n || (s.k <= s.n && s.is_clique()); })) c.conditions.push_back(2);
  if (both([](const Side& s) { return s.k == s.n - 1; }) && iso(claw_closure(g1), claw_closure(g2)))
    c.conditions.push_back(3);

  const bool primes_iso = iso(a.prime, b.prime);
  if (primes_iso && a.n - a.k == b.n - b.k &&
      both([](const Side& s) { return chromatic_number(s.g) + 1 <= s.k && s.k <= s.n - 2; }))
    c.conditions.push_back(4);
  if (primes_iso && both([](const Side& s) { return s.k <= chromatic_number(s.g); })) c.conditions.push_back(5);

  // Both sides must give a clique of the same order.
  if (both([](const Side& s) { return s.k <= s.n - 1; })) {
    const auto na = static_cast<int>(count_partitions(g1, k1, a.n));
    const auto nb = static_cast<int>(count_partitions(g2, k2, b.n));
    if (na == nb && na >= 1 && iso(a.prime, clique_plus_isolated(na - 1)) && iso(b.prime, clique_plus_isolated(nb - 1)))
      c.conditions.push_back(6);
  }
  if (both(cond7_side)) c.conditions.push_back(7);
  if (both(cond8_side)) c.conditions.push_back(8);

  c.equivalent = !c.conditions.empty();
  return c;
}

const CanonicalCode& BellCodeCache::code(const Graph& g, int k) {
  Key key{canonical_code(g), k};
  {
    std::lock_guard lock(mutex_);
    auto it = codes_.find(key);
    if (it != codes_.end()) return it->second;
  }
  auto bell = build_bell(g, BellVariant::at_least(k));
  auto value = canonical_code(bell.graph);
  std::lock_guard lock(mutex_);
  // References into unordered_map stay valid across rehashing.
  return codes_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t BellCodeCache::size() const {
  std::lock_guard lock(mutex_);
  return codes_.size();
}

bool oracle_isomorphic(const Graph& g1, int k1, const Graph& g2, int k2, BellCodeCache* cache) {
  static BellCodeCache shared;
  BellCodeCache& c = cache ? *cache : shared;
  return c.code(g1, k1) == c.code(g2, k2);
}

std::string classification_json(const Classification& c, const bool* oracle) {
  nlohmann::ordered_json j;
  j["equivalent"] = c.equivalent;
  j["conditions"] = c.conditions;
  if (oracle) j["oracle"] = *oracle;
  return j.dump(2);
}

}  // namespace bellrec
