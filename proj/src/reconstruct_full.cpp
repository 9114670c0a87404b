#include "bellrec/reconstruct_full.hpp"

#include <bit>

#include <json.hpp>

#include "bellrec/graph6.hpp"
#include "bellrec/line_root.hpp"

namespace bellrec {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::k_le_n_minus_2:
      return "k_le_n_minus_2";
    case Regime::k_eq_n_minus_1:
      return "k_eq_n_minus_1";
    case Regime::degenerate_clique:
      return "degenerate_clique";
    case Regime::degenerate_k5minus:
      return "degenerate_k5minus";
    case Regime::empty:
      return "empty";
    case Regime::single_vertex:
      return "single_vertex";
  }
  return "unknown";
}

namespace {

Graph replace_claws_with_triangles(const Graph& h, int count) {
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  int replaced = 0;
  for (VertexMask comp : connected_components(h)) {
    std::vector<int> members;
    for (VertexMask s = comp; s != 0; s &= s - 1) members.push_back(std::countr_zero(s));
    const bool claw = members.size() == 4 && count_claw_components(induced_subgraph(h, comp)) == 1;
    if (claw && replaced < count) {
      ++replaced;
      edges.insert(edges.end(), {{next, next + 1}, {next, next + 2}, {next + 1, next + 2}});
      next += 3;
      continue;
    }
    std::vector<int> index(h.order(), -1);
    for (int v : members) index[v] = next++;
    for (int v : members)
      for (int w : members)
        if (v < w && h.adjacent(v, w)) edges.emplace_back(index[v], index[w]);
  }
  return Graph::from_edges(next, edges);
}

Graph small_table(const UnlabeledGraph& b) {
  // Every Bell graph on at most two vertices: B of a clique (one vertex,
  // nothing left after stripping) or B of two non-adjacent vertices (K2).
  if (b.order() == 1) return Graph(0);
  if (b.order() == 2 && b.size() == 1) return Graph::empty(2);
  throw NoCandidate();
}

}  // namespace

PhiTrace phi_trace(const UnlabeledGraph& b, int p) {
  if (p < 0 || p >= b.order()) throw std::out_of_range("vertex index out of range");
  PhiTrace t;
  auto nb = b.neighbours(p);
  std::vector<int> members(nb.begin(), nb.end());
  UnlabeledGraph local = b.induced(members);
  auto root = try_krausz_root(local);
  if (!root) {
    t.result = Graph(1);
    return t;
  }
  t.line_graph = true;
  t.root = *root;
  t.normalized_root = normalize_ddagger(t.root);
  t.root_triangles = count_triangles(t.normalized_root);
  t.closed_triangles = neighbourhood_stats(b, p).t_stat;
  const long missing = t.closed_triangles - t.root_triangles;
  Graph h = t.normalized_root;
  if (missing > 0 && count_claw_components(h) >= missing) {
    t.claws_replaced = static_cast<int>(missing);
    h = replace_claws_with_triangles(h, t.claws_replaced);
  }
  t.result = complement(h);
  return t;
}

Graph phi(const UnlabeledGraph& b, int p) { return phi_trace(b, p).result; }

ReconstructionReport reconstruct_prime_report(const UnlabeledGraph& b, Property1Reading reading) {
  if (b.order() == 0) throw EmptyInput();
  ReconstructionReport r;
  r.regime = Regime::k_le_n_minus_2;
  if (b.order() <= 2) {
    r.result = small_table(b);
    return r;
  }
  r.candidate_sets = pstar_candidates(b, reading);
  if (r.candidate_sets->omega5.empty()) throw NoCandidate();
  r.pivot = r.candidate_sets->omega5.front();
  r.result = phi(b, *r.pivot);
  return r;
}

Graph reconstruct_prime(const UnlabeledGraph& b, Property1Reading reading) {
  return *reconstruct_prime_report(b, reading).result;
}

bool is_k5_minus(const UnlabeledGraph& b) { return b.order() == 5 && b.size() == 9; }

ReconstructionReport reconstruct_upper_auto(const UnlabeledGraph& b) {
  ReconstructionReport r;
  const int m = b.order();
  if (m == 0) {
    r.regime = Regime::empty;
    return r;
  }
  if (m == 1) {
    r.regime = Regime::single_vertex;
    return r;
  }
  if (b.is_clique()) {
    r.regime = Regime::degenerate_clique;
    Graph big = disjoint_union(Graph::complete(m - 1), Graph(1));
    r.possibilities.push_back({big, "k <= n-1"});
    if (m == 4) r.possibilities.push_back({Graph::empty(3), "k = n-1"});
    return r;
  }
  if (is_k5_minus(b)) {
    r.regime = Regime::degenerate_k5minus;
    r.possibilities.push_back({Graph::empty(3), "k <= n-2"});
    r.possibilities.push_back({disjoint_union(Graph::path(3), Graph(1)), "k = n-1"});
    return r;
  }
  for (int v = 0; v < m; ++v)
    if (b.degree(v) == m - 1) {
      r.regime = Regime::k_eq_n_minus_1;
      r.pivot = v;
      r.result = phi(b, v);
      return r;
    }
  ReconstructionReport prime = reconstruct_prime_report(b);
  prime.regime = Regime::k_le_n_minus_2;
  return prime;
}

std::string report_json(const ReconstructionReport& r) {
  nlohmann::ordered_json j;
  j["regime"] = regime_name(r.regime);
  j["pivot"] = r.pivot ? nlohmann::ordered_json(*r.pivot) : nlohmann::ordered_json(nullptr);
  if (r.result) {
    j["result_graph6"] = to_graph6(*r.result);
    j["result_order"] = r.result->order();
    j["result_size"] = r.result->size();
  } else {
    j["result_graph6"] = nullptr;
  }
  auto& poss = j["possibilities"] = nlohmann::ordered_json::array();
  for (const auto& p : r.possibilities) poss.push_back({{"graph6", to_graph6(p.graph)}, {"condition", p.condition}});
  if (r.candidate_sets) {
    j["candidate_sets"] = {{"omega12", r.candidate_sets->omega12},
                           {"omega3", r.candidate_sets->omega3},
                           {"omega4", r.candidate_sets->omega4},
                           {"omega5", r.candidate_sets->omega5}};
  }
  return j.dump(2);
}

}  // namespace bellrec
