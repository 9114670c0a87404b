#include "bellrec/line_root.hpp"

#include <bit>
#include <vector>

namespace bellrec {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

class KrauszSearch {
 public:
  explicit KrauszSearch(const UnlabeledGraph& l) : m_(l.order()), uncovered_(m_, 0), count_(m_, 0) {
    for (int v = 0; v < m_; ++v)
      for (int w : l.neighbours(v)) uncovered_[v] |= bit(w);
  }

  bool solve() { return step(); }

  const std::vector<VertexMask>& cliques() const { return cliques_; }

 private:
  // Members are u plus the vertices of rest; all pairs must be uncovered
  // edges and every member must have room for one more clique.
  bool can_place(int u, VertexMask rest) const {
    if (count_[u] >= 2) return false;
    VertexMask scan = rest;
    while (scan != 0) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      if (count_[w] >= 2) return false;
      if ((uncovered_[w] & (rest & ~bit(w))) != (rest & ~bit(w))) return false;
    }
    return (uncovered_[u] & rest) == rest;
  }

  void place(VertexMask members) {
    cliques_.push_back(members);
    VertexMask scan = members;
    while (scan != 0) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      ++count_[w];
      uncovered_[w] &= ~members;
    }
  }

  void unplace() {
    VertexMask members = cliques_.back();
    cliques_.pop_back();
    VertexMask scan = members;
    while (scan != 0) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      --count_[w];
      uncovered_[w] |= members & ~bit(w);
    }
  }

  bool step() {
    int u = -1;
    for (int v = 0; v < m_; ++v)
      if (uncovered_[v] != 0) {
        // A vertex already in one clique has no choices left; take it first.
        if (u == -1 || (count_[v] == 1 && count_[u] != 1)) u = v;
        if (count_[u] == 1) break;
      }
    if (u == -1) return true;
    if (count_[u] >= 2) return false;

    const VertexMask open = uncovered_[u];
    if (count_[u] == 1) {
      if (!can_place(u, open)) return false;
      place(open | bit(u));
      if (step()) return true;
      unplace();
      return false;
    }

    // Split the open neighbourhood into A (holding its lowest vertex) and B.
    const int a = std::countr_zero(open);
    const VertexMask optional = uncovered_[a] & open;
    for (VertexMask sub = optional;; sub = (sub - 1) & optional) {
      VertexMask part_a = sub | bit(a);
      VertexMask part_b = open & ~part_a;
      if (can_place(u, part_a) && (part_b == 0 || can_place(u, part_b))) {
        place(part_a | bit(u));
        if (part_b != 0) place(part_b | bit(u));
        if (step()) return true;
        if (part_b != 0) unplace();
        unplace();
      }
      if (sub == 0) break;
    }
    return false;
  }

  int m_;
  std::vector<VertexMask> uncovered_;
  std::vector<int> count_;
  std::vector<VertexMask> cliques_;
};

}  // namespace

std::optional<Graph> try_krausz_root(const UnlabeledGraph& l) {
  const int m = l.order();
  if (m > Graph::kMaxVertices) throw std::length_error("line-graph input exceeds 64 vertices");
  KrauszSearch search(l);
  if (!search.solve()) return std::nullopt;

  const auto& cliques = search.cliques();
  // Root vertices: one per clique, plus one pendant for each missing clique
  // slot of an L-vertex (each L-vertex is an edge with two ends).
  std::vector<std::vector<int>> ends(m);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    VertexMask scan = cliques[c];
    while (scan != 0) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      ends[w].push_back(static_cast<int>(c));
    }
  }
  int next = static_cast<int>(cliques.size());
  for (auto& e : ends)
    while (e.size() < 2) e.push_back(next++);
  if (next > Graph::kMaxVertices) throw std::length_error("root graph would exceed 64 vertices");
  Graph h(next);
  for (const auto& e : ends) h.add_edge(e[0], e[1]);
  return h;
}

Graph krausz_root(const UnlabeledGraph& l) {
  auto h = try_krausz_root(l);
  if (!h) throw NotLineGraph();
  return *h;
}

bool is_line_graph(const UnlabeledGraph& l) { return try_krausz_root(l).has_value(); }

namespace {

bool is_triangle_component(const Graph& h, VertexMask comp) {
  if (std::popcount(comp) != 3) return false;
  VertexMask scan = comp;
  while (scan != 0) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    if (std::popcount(h.neighbours(v)) != 2) return false;
  }
  return true;
}

bool is_claw_component(const Graph& h, VertexMask comp) {
  if (std::popcount(comp) != 4) return false;
  int centre = 0;
  int leaves = 0;
  VertexMask scan = comp;
  while (scan != 0) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    int d = h.degree(v);
    if (d == 3) ++centre;
    else if (d == 1) ++leaves;
  }
  return centre == 1 && leaves == 3;
}

}  // namespace

Graph normalize_ddagger(const Graph& h) {
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  std::vector<int> index(h.order(), -1);
  for (VertexMask comp : connected_components(h)) {
    if (std::popcount(comp) == 1) continue;
    if (is_triangle_component(h, comp)) {
      int centre = next++;
      for (int leaf = 0; leaf < 3; ++leaf) edges.emplace_back(centre, next++);
      continue;
    }
    VertexMask scan = comp;
    while (scan != 0) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      index[v] = next++;
    }
  }
  for (auto [u, v] : h.edges())
    if (index[u] >= 0) edges.emplace_back(index[u], index[v]);
  if (next > Graph::kMaxVertices) throw std::length_error("normalized graph exceeds 64 vertices");
  return Graph::from_edges(next, edges);
}

int count_claw_components(const Graph& h) {
  int count = 0;
  for (VertexMask comp : connected_components(h))
    if (is_claw_component(h, comp)) ++count;
  return count;
}

}  // namespace bellrec
