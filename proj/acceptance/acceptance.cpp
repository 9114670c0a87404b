// One line per acceptance criterion; exit status 0 iff every gating one passes.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bellrec/bell.hpp"
#include "bellrec/canonical.hpp"
#include "bellrec/generate.hpp"
#include "bellrec/graph6.hpp"
#include "bellrec/line_root.hpp"
#include "bellrec/reconstruct_full.hpp"
#include "bellrec/reconstruct_lower.hpp"
#include "bellrec/verify.hpp"
#include "invariant_checks.hpp"
#include "oracles.hpp"

using namespace bellrec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t seed_of(int s) { return 0x5eed0000ULL + static_cast<std::uint64_t>(s); }

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass && c.gating) return "; first failure " + c.graph6 + " k=" + std::to_string(c.k) + " " + c.detail;
  return "";
}

std::string suite_summary(const SuiteReport& r) {
  return std::to_string(r.hosts_passed) + "/" + std::to_string(r.hosts) + " hosts, " +
         std::to_string(r.checks_passed()) + "/" + std::to_string(r.checks.size()) + " checks" + first_failure(r);
}

Outcome full_bell() {
  auto r = run_suite("full-recon", 6, 2);
  return {r.passed(), suite_summary(r) + " (all classes on 1-6 vertices, 2 seeds)"};
}

Outcome upper_bell() {
  long checks = 0, ok = 0;
  std::string fail;
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n))
      for (int k = 1; k <= n - 2; ++k) {
        auto b = build_bell(g, BellVariant::at_least(k));
        for (int s = 1; s <= 2; ++s) {
          ++checks;
          Graph got = reconstruct_prime(scramble(b, seed_of(s)).graph);
          if (is_isomorphic(got, strip_universal(g))) ++ok;
          else if (fail.empty()) fail = "; first failure " + to_graph6(g) + " k=" + std::to_string(k);
        }
      }
  return {ok == checks, std::to_string(ok) + "/" + std::to_string(checks) + " (host, k, seed) checks" + fail};
}

Outcome top_regime() {
  long checks = 0, ok = 0, degenerate = 0, degenerate_ok = 0;
  std::string fail;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : generate_nonisomorphic_graphs(n)) {
      auto b = build_bell(g, BellVariant::at_least(n - 1));
      for (int s = 1; s <= 2; ++s) {
        auto r = reconstruct_upper_auto(scramble(b, seed_of(s)).graph);
        // Cliques (K1 included) and K5- only determine a possibility set.
        if (r.regime == Regime::degenerate_clique || r.regime == Regime::degenerate_k5minus ||
            r.regime == Regime::single_vertex) {
          ++degenerate;
          bool listed = r.regime == Regime::single_vertex && g.size() == n * (n - 1) / 2;
          for (const auto& p : r.possibilities) listed = listed || is_isomorphic(p.graph, strip_universal(g));
          if (listed) ++degenerate_ok;
          else if (fail.empty()) fail = "; host missing from possibilities: " + to_graph6(g);
          continue;
        }
        ++checks;
        if (r.regime == Regime::k_eq_n_minus_1 && r.result && is_isomorphic(*r.result, claw_closure(g))) ++ok;
        else if (fail.empty()) fail = "; first failure " + to_graph6(g) + " regime " + regime_name(r.regime);
      }
    }
  return {ok == checks && checks > 0 && degenerate_ok == degenerate,
          std::to_string(ok) + "/" + std::to_string(checks) + " checks; " + std::to_string(degenerate_ok) + "/" +
              std::to_string(degenerate) + " clique/K5- inputs list the host among their possibilities" + fail};
}

Outcome classification() {
  auto r = run_suite("classify", 5, 1);
  const long items = static_cast<long>(r.checks.size());
  return {r.passed(), std::to_string(r.checks_passed()) + "/" + std::to_string(items) + " items agree on all " +
                          std::to_string(items * items) + " ordered pairs" + first_failure(r)};
}

Outcome lower_bell() {
  auto r = run_suite("lower-recon", 0, 1);
  std::string exploratory;
  for (const auto& c : r.checks)
    if (!c.gating) exploratory = "; exploratory C8 k=3 " + std::string(c.pass ? "recovered" : "not recovered");
  long gating = 0, gating_ok = 0;
  for (const auto& c : r.checks)
    if (c.gating) {
      ++gating;
      gating_ok += c.pass;
    }
  return {r.passed(), std::to_string(gating_ok) + "/" + std::to_string(gating) +
                          " instances (empty 4-10 with k=2,3; 6-edge matching plus K1 with k=3)" + exploratory +
                          first_failure(r)};
}

Outcome invariant_suites() {
  auto tallies = invariants::all(6);
  long checks = 0, bad = 0;
  std::string fail;
  for (const auto& t : tallies) {
    checks += t.checks;
    bad += t.violation_count;
    if (!t.ok() && fail.empty()) fail = "; " + t.name + ": " + t.violations.front();
  }
  auto omega = run_suite("omega", 6, 2);
  checks += static_cast<long>(omega.checks.size());
  bad += static_cast<long>(omega.checks.size()) - omega.checks_passed();
  return {bad == 0, std::to_string(tallies.size() + 1) + " invariant groups, " + std::to_string(checks) + " checks, " +
                        std::to_string(bad) + " violations" + fail + first_failure(omega)};
}

Outcome line_roots() {
  auto r = run_suite("lineroot", 6, 1);
  const auto connected = oracle::connected_line_graphs(6);
  long graphs = 0, agree = 0;
  for (int m = 1; m <= 6; ++m)
    for (const Graph& l : generate_nonisomorphic_graphs(m)) {
      ++graphs;
      auto root = try_krausz_root(UnlabeledGraph::from_graph(l));
      const bool expected = oracle::line_graph_by_components(l, connected);
      if (root.has_value() == expected && (!root || is_isomorphic(line_graph(*root), l))) ++agree;
    }
  return {r.passed() && agree == graphs, "round trip " + suite_summary(r) + "; recognition " + std::to_string(agree) +
                                             "/" + std::to_string(graphs) + " agree with exhaustive root search"};
}

Outcome fat_partitions() {
  std::vector<Graph> hosts;
  for (int n = 4; n <= 13; ++n) hosts.push_back(Graph::empty(n));
  for (int m = 1; m <= 6; ++m) {
    Graph g(13);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
    hosts.push_back(g);
  }
  long ok = 0, steps = 0;
  std::string fail;
  for (const Graph& g : hosts) {
    try {
      auto t = find_fat_partition_trace(g);
      int m = g.order(), c = 0;
      for (VertexMask b : t.start.blocks()) m = std::min(m, std::popcount(b));
      for (VertexMask b : t.start.blocks()) c += std::popcount(b) == m;
      bool monotone = true;
      for (const auto& s : t.steps) {
        monotone = monotone && (s.min_size > m || (s.min_size == m && s.min_count < c));
        m = s.min_size;
        c = s.min_count;
        ++steps;
      }
      if (monotone && is_fat_partition(g, t.result)) ++ok;
      else if (fail.empty()) fail = "; first failure " + to_graph6(g);
    } catch (const std::exception& e) {
      if (fail.empty()) fail = "; " + to_graph6(g) + ": " + e.what();
    }
  }
  return {ok == static_cast<long>(hosts.size()),
          std::to_string(ok) + "/" + std::to_string(hosts.size()) + " hosts (empty 4-13, max degree 1 on 13), " +
              std::to_string(steps) + " improving steps" + fail};
}

Outcome conjecture() {
  auto r = conjecture_search(5);
  std::string example;
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    example = "; e.g. " + c.g1 + " k=" + std::to_string(c.k1) + " vs " + c.g2 + " k=" + std::to_string(c.k2) +
              (c.isomorphic ? " isomorphic but not predicted" : " predicted but not isomorphic");
  }
  return {r.counterexamples.empty(), "completed over " + std::to_string(r.pairs) + " pairs; " +
                                         std::to_string(r.counterexamples.size()) + " counterexamples (expected 0)" +
                                         example};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool gating;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "full Bell graph reconstruction", true, full_bell},
      {2, "upper Bell reconstruction, k <= n-2", true, upper_bell},
      {3, "k = n-1 regime and claw closure", true, top_regime},
      {4, "classification vs canonical-form oracle", true, classification},
      {5, "lower Bell reconstruction", true, lower_bell},
      {6, "structural invariants", true, invariant_suites},
      {7, "line-root round trip and recognition", true, line_roots},
      {8, "fat partition finder", true, fat_partitions},
      {9, "conjecture sweep (non-gating)", false, conjecture},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* verdict = o.pass ? "PASS" : (c.gating ? "FAIL" : "INFO");
    std::printf("criterion %d %s: %s: %s [%.1fs]\n", c.id, verdict, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (c.gating && !o.pass) all = false;
  }
  std::printf("%s\n", all ? "all gating criteria pass" : "some gating criteria fail");
  return all ? 0 : 1;
}
