#include "bellrec/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "bellrec/bell.hpp"
#include "bellrec/candidates.hpp"
#include "bellrec/canonical.hpp"
#include "bellrec/classify.hpp"
#include "bellrec/generate.hpp"
#include "bellrec/graph6.hpp"
#include "bellrec/line_root.hpp"
#include "bellrec/partitions.hpp"
#include "bellrec/reconstruct_full.hpp"
#include "bellrec/reconstruct_lower.hpp"

namespace bellrec {

namespace {

using Work = std::function<CheckResult()>;

CheckResult make(const Graph& g, int k, int seed, bool pass, std::string detail = {}) {
  return {to_graph6(g), k, seed, pass, true, pass ? std::string{} : std::move(detail)};
}

std::uint64_t seed_value(int i) { return 0x5eed0000ULL + static_cast<std::uint64_t>(i); }

int k_of(BellVariant v) { return v.kind == BellVariant::Kind::full ? 0 : v.k; }

// --- suites -----------------------------------------------------------------

void core_suite(const std::vector<Graph>& hosts, int seeds, std::vector<Work>& work) {
  for (const Graph& g : hosts) {
    work.push_back([g] {
      bool ok = from_graph6(to_graph6(g)).edges() == g.edges();
      ok = ok && is_isomorphic(complement(complement(g)), g);
      Graph c = claw_closure(g);
      ok = ok && is_isomorphic(claw_closure(c), c);
      ok = ok && universal_vertices(strip_universal(g)) == 0;
      return make(g, 0, 0, ok, "graph6, complement, closure or universal-vertex check");
    });
    for (int s = 1; s <= seeds; ++s)
      work.push_back([g, s] {
        std::vector<int> image(g.order());
        std::iota(image.begin(), image.end(), 0);
        std::mt19937_64 rng(seed_value(s));
        std::shuffle(image.begin(), image.end(), rng);
        auto u = UnlabeledGraph::from_graph(g);
        bool ok = canonical_code(u) == canonical_code(u.relabeled(image));
        return make(g, 0, s, ok, "canonical code changed under relabeling");
      });
  }
}

void partitions_suite(const std::vector<Graph>& hosts, std::vector<Work>& work) {
  for (const Graph& g : hosts)
    work.push_back([g] {
      const int n = g.order();
      auto all = enumerate_partitions(g, 1, n);
      bool ok = all.size() == count_partitions(g, 1, n);
      if (g.size() == 0) ok = ok && all.size() == bell_numbers(n)[n];
      for (const auto& p : all) {
        ok = ok && p.is_independent_in(g);
        for (const auto& q : neighbors_of(g, p, 1, n)) ok = ok && are_adjacent(p, q) && are_adjacent(q, p);
      }
      return make(g, 0, 0, ok, "enumeration count, independence or adjacency symmetry");
    });
}

void bell_suite(const std::vector<Graph>& hosts, std::vector<Work>& work) {
  for (const Graph& g : hosts) {
    work.push_back([g] {
      auto b = build_bell(g, BellVariant::full());
      return make(g, 0, 0, bell_edges_all_pairs(b.vertices) == b.graph, "move generation differs from all-pairs");
    });
    for (int k = 1; k <= g.order(); ++k)
      work.push_back([g, k] {
        auto lhs = build_bell(g, BellVariant::at_least(k)).graph;
        auto rhs = build_bell(with_universal_vertex(g), BellVariant::at_least(k + 1)).graph;
        return make(g, k, 0, canonical_code(lhs) == canonical_code(rhs), "adding a universal vertex changed the graph");
      });
  }
}

void omega_suite(const std::vector<Graph>& hosts, int seeds, std::vector<Work>& work) {
  for (const Graph& g : hosts) {
    std::vector<BellVariant> vs{BellVariant::full()};
    for (int k = 1; k <= g.order() - 2; ++k) vs.push_back(BellVariant::at_least(k));
    for (const auto& v : vs)
      for (int s = 1; s <= seeds; ++s)
        work.push_back([g, v, s] {
          auto b = build_bell(g, v);
          auto sc = scramble(b, seed_value(s));
          const int pstar = sc.image[b.index_of(SetPartition::singletons(g.order()))];
          auto c = pstar_candidates(sc.graph);
          bool ok = std::find(c.omega5.begin(), c.omega5.end(), pstar) != c.omega5.end();
          return make(g, k_of(v), s, ok, "all-singletons vertex " + std::to_string(pstar) + " not in final set");
        });
  }
}

void lineroot_suite(const std::vector<Graph>& hosts, std::vector<Work>& work) {
  for (const Graph& g : hosts)
    work.push_back([g] {
      auto l = line_graph(g);
      auto root = krausz_root(UnlabeledGraph::from_graph(l));
      bool ok = is_isomorphic(line_graph(root), l) && is_isomorphic(normalize_ddagger(root), normalize_ddagger(g));
      return make(g, 0, 0, ok, "root of the line graph does not normalize to the host");
    });
}

void full_recon_suite(const std::vector<Graph>& hosts, int seeds, std::vector<Work>& work) {
  for (const Graph& g : hosts)
    for (int s = 1; s <= seeds; ++s)
      work.push_back([g, s] {
        auto b = build_bell(g, BellVariant::full());
        Graph got = reconstruct_prime(scramble(b, seed_value(s)).graph);
        return make(g, 0, s, is_isomorphic(got, strip_universal(g)), "reconstructed " + to_graph6(got));
      });
}

void upper_auto_suite(const std::vector<Graph>& hosts, int seeds, std::vector<Work>& work) {
  for (const Graph& g : hosts) {
    const int n = g.order();
    for (int k = 1; k <= n - 1; ++k)
      for (int s = 1; s <= seeds; ++s)
        work.push_back([g, k, s, n] {
          auto b = build_bell(g, BellVariant::at_least(k));
          auto r = reconstruct_upper_auto(scramble(b, seed_value(s)).graph);
          // Degenerate shapes only promise a possibility set.
          if (r.regime == Regime::degenerate_clique || r.regime == Regime::degenerate_k5minus ||
              r.regime == Regime::single_vertex) {
            bool ok = r.regime == Regime::single_vertex;
            for (const auto& p : r.possibilities) ok = ok || is_isomorphic(p.graph, strip_universal(g));
            return make(g, k, s, ok, "host missing from possibility set of " + regime_name(r.regime));
          }
          const bool top = k == n - 1;
          const Graph want = top ? claw_closure(g) : strip_universal(g);
          bool ok = r.regime == (top ? Regime::k_eq_n_minus_1 : Regime::k_le_n_minus_2) && r.result &&
                    is_isomorphic(*r.result, want);
          return make(g, k, s, ok, "regime " + regime_name(r.regime) + ", result " + (r.result ? to_graph6(*r.result) : "none"));
        });
  }
}

void lower_recon_suite(int seeds, std::vector<Work>& work) {
  struct Instance {
    Graph g;
    int k;
    bool gating;
  };
  std::vector<Instance> fixed;
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; k <= 3; ++k) fixed.push_back({Graph(n), k, true});
  Graph m13(13);
  for (int i = 0; i < 6; ++i) m13.add_edge(2 * i, 2 * i + 1);
  fixed.push_back({m13, 3, true});
  fixed.push_back({Graph::cycle(8), 3, false});
  for (const auto& inst : fixed)
    for (int s = 1; s <= seeds; ++s)
      work.push_back([inst, s] {
        auto b = build_bell(inst.g, BellVariant::at_most(inst.k));
        std::string detail;
        bool ok = false;
        try {
          Graph got = reconstruct_from_bk(scramble(b, seed_value(s)).graph);
          ok = is_isomorphic(got, inst.g);
          detail = "reconstructed " + to_graph6(got);
        } catch (const AllComplete& e) {
          detail = e.what();
        }
        auto r = make(inst.g, inst.k, s, ok, detail);
        r.gating = inst.gating;
        return r;
      });
}

void classify_suite(const std::vector<Graph>& hosts, std::vector<Work>& work) {
  struct Item {
    Graph g;
    int k;
  };
  auto items = std::make_shared<std::vector<Item>>();
  for (const Graph& g : hosts)
    for (int k = 1; k <= g.order() + 1; ++k) items->push_back({g, k});
  auto cache = std::make_shared<BellCodeCache>();
  for (std::size_t i = 0; i < items->size(); ++i)
    work.push_back([items, cache, i] {
      const auto& a = (*items)[i];
      for (const auto& b : *items) {
        const bool truth = oracle_isomorphic(a.g, a.k, b.g, b.k, cache.get());
        const bool got = classify_pair(a.g, a.k, b.g, b.k).equivalent;
        if (truth != got)
          return make(a.g, a.k, 0, false,
                      "against " + to_graph6(b.g) + " k=" + std::to_string(b.k) + ": oracle " + std::to_string(truth));
      }
      return make(a.g, a.k, 0, true);
    });
}

struct SuiteSpec {
  int cap;
};

const std::map<std::string, SuiteSpec>& suites() {
  static const std::map<std::string, SuiteSpec> s{
      {"core", {8}},      {"partitions", {8}}, {"bell", {7}},        {"omega", {6}},       {"lineroot", {7}},
      {"full-recon", {6}}, {"upper-auto", {6}}, {"lower-recon", {64}}, {"classify", {5}},
  };
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (c.gating && !c.pass) return false;
  return true;
}

int SuiteReport::checks_passed() const {
  int count = 0;
  for (const auto& c : checks) count += c.pass ? 1 : 0;
  return count;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : suites()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& suite, int n_max, int seeds) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
  if (n_max < 0 || seeds < 0) throw std::invalid_argument("n_max and seeds must be non-negative");
  if (n_max > it->second.cap)
    throw CapExceeded("suite " + suite + " supports n_max <= " + std::to_string(it->second.cap));

  std::vector<Graph> hosts;
  if (suite != "lower-recon" && n_max >= 1) hosts = generate_nonisomorphic_graphs(1, n_max);

  std::vector<Work> work;
  if (suite == "core") core_suite(hosts, seeds, work);
  else if (suite == "partitions") partitions_suite(hosts, work);
  else if (suite == "bell") bell_suite(hosts, work);
  else if (suite == "omega") omega_suite(hosts, seeds, work);
  else if (suite == "lineroot") lineroot_suite(hosts, work);
  else if (suite == "full-recon") full_recon_suite(hosts, seeds, work);
  else if (suite == "upper-auto") upper_auto_suite(hosts, seeds, work);
  else if (suite == "lower-recon") lower_recon_suite(seeds, work);
  else classify_suite(hosts, work);

  SuiteReport r{suite, n_max, seeds, 0, 0, std::vector<CheckResult>(work.size())};
  const int count = static_cast<int>(work.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) r.checks[i] = work[i]();

  // A host passes when all its gating checks do.
  std::map<std::string, bool> host_ok;
  for (const auto& c : r.checks) {
    auto pos = host_ok.try_emplace(c.graph6, true).first;
    if (c.gating && !c.pass) pos->second = false;
  }
  r.hosts = static_cast<int>(host_ok.size());
  for (const auto& [g6, ok] : host_ok) r.hosts_passed += ok ? 1 : 0;
  return r;
}

std::string suite_report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["seeds"] = r.seeds;
  j["passed"] = r.passed();
  j["hosts"] = r.hosts;
  j["hosts_passed"] = r.hosts_passed;
  j["checks"] = r.checks.size();
  j["checks_passed"] = r.checks_passed();
  auto& items = j["items"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json item{{"graph6", c.graph6}, {"k", c.k}, {"seed", c.seed}, {"pass", c.pass}};
    if (!c.gating) item["gating"] = false;
    if (!c.detail.empty()) item["detail"] = c.detail;
    items.push_back(std::move(item));
  }
  return j.dump(2);
}

SearchReport conjecture_search(int n_max) {
  if (n_max > kConjectureMaxOrder)
    throw CapExceeded("conjecture search supports n_max <= " + std::to_string(kConjectureMaxOrder));
  SearchReport rep;
  rep.n_max = n_max;
  if (n_max < 1) return rep;

  struct Item {
    Graph g;
    int n, k;
    CanonicalCode prime, bell;
  };
  std::vector<Item> items;
  for (const Graph& g : generate_nonisomorphic_graphs(1, n_max)) {
    const int n = g.order();
    const int chi = chromatic_number(g);
    for (int k = chi + 1; k <= std::max(n, chi + 1); ++k) items.push_back({g, n, k, canonical_code(strip_universal(g)), {}});
  }
  const int count = static_cast<int>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i)
    items[i].bell = canonical_code(build_bell(items[i].g, BellVariant::at_most(items[i].k)).graph);

  for (const auto& a : items)
    for (const auto& b : items) {
      const bool iso = a.bell == b.bell;
      const bool predicted = a.prime == b.prime && ((a.k >= a.n && b.k >= b.n) || a.n - a.k == b.n - b.k);
      ++rep.pairs;
      if (iso == predicted) ++rep.agreements;
      else rep.counterexamples.push_back({to_graph6(a.g), to_graph6(b.g), a.k, b.k, iso, predicted});
    }
  return rep;
}

std::string search_report_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["n_max"] = r.n_max;
  j["pairs"] = r.pairs;
  j["agreements"] = r.agreements;
  j["counterexample_count"] = r.counterexamples.size();
  auto& cs = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    cs.push_back({{"g1", c.g1}, {"k1", c.k1}, {"g2", c.g2}, {"k2", c.k2}, {"isomorphic", c.isomorphic},
                  {"predicted", c.predicted}});
  return j.dump(2);
}

}  // namespace bellrec
