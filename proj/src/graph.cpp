#include "bellrec/graph.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bellrec/line_root.hpp"

namespace bellrec {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) throw std::length_error("graph order must lie in [0, 64]");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (bit(n_) - 1);
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if ((vertices >> v) & 1U) keep.push_back(v);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.order() + u, a.order() + v);
  return h;
}

Graph with_universal_vertex(const Graph& g) {
  Graph h(g.order() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int v = 0; v < g.order(); ++v) h.add_edge(v, g.order());
  return h;
}

VertexMask universal_vertices(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out |= bit(v);
  return out;
}

VertexMask isolated_vertices(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbours(v) == 0) out |= bit(v);
  return out;
}

Graph strip_universal(const Graph& g) {
  return induced_subgraph(g, g.all_vertices() & ~universal_vertices(g));
}

Graph claw_closure(const Graph& g) { return complement(normalize_ddagger(complement(g))); }

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.all_vertices();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexMask fresh = g.neighbours(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

namespace {

// Exact k-colourability by backtracking in a fixed vertex order, with the
// usual symmetry break that a vertex may open at most one new colour.
class ColouringSearch {
 public:
  explicit ColouringSearch(const Graph& g) : g_(g), colour_(g.order(), -1) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    // Degeneracy-like order: repeatedly take the vertex with most already
    // placed neighbours, ties to higher degree.
    std::vector<int> placed;
    VertexMask used = 0;
    for (int step = 0; step < g.order(); ++step) {
      int best = -1;
      int best_key1 = -1;
      int best_key2 = -1;
      for (int v = 0; v < g.order(); ++v) {
        if ((used >> v) & 1U) continue;
        int k1 = std::popcount(g.neighbours(v) & used);
        int k2 = g.degree(v);
        if (k1 > best_key1 || (k1 == best_key1 && k2 > best_key2)) {
          best = v;
          best_key1 = k1;
          best_key2 = k2;
        }
      }
      placed.push_back(best);
      used |= bit(best);
    }
    order_ = std::move(placed);
  }

  bool colourable(int k) {
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), -1);
    return assign(0, 0);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  bool assign(std::size_t idx, int used_colours) {
    if (idx == order_.size()) return true;
    int v = order_[idx];
    int limit = std::min(k_, used_colours + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      VertexMask nb = g_.neighbours(v);
      while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (colour_[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour_[v] = c;
      if (assign(idx + 1, std::max(used_colours, c + 1))) return true;
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> colour_;
  int k_ = 0;
};

int greedy_clique_size(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int start = 0; start < g.order(); ++start) {
    VertexMask cand = g.neighbours(start);
    int size = 1;
    while (cand != 0) {
      int pick = -1;
      int pick_deg = -1;
      VertexMask scan = cand;
      while (scan != 0) {
        int w = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(g.neighbours(w) & cand);
        if (d > pick_deg) {
          pick = w;
          pick_deg = d;
        }
      }
      ++size;
      cand &= g.neighbours(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

std::vector<VertexMask> optimal_colouring(const Graph& g) {
  if (g.order() == 0) return {};
  ColouringSearch search(g);
  for (int k = greedy_clique_size(g); k <= g.max_degree() + 1; ++k) {
    if (search.colourable(k)) {
      std::vector<VertexMask> parts(k, 0);
      for (int v = 0; v < g.order(); ++v) parts[search.colours()[v]] |= bit(v);
      return parts;
    }
  }
  throw std::logic_error("no colouring with max_degree + 1 colours");
}

int chromatic_number(const Graph& g) { return static_cast<int>(optimal_colouring(g).size()); }

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  if (es.size() > static_cast<std::size_t>(Graph::kMaxVertices))
    throw std::length_error("line graph would exceed 64 vertices");
  Graph l(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) l.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return l;
}

long count_triangles(const Graph& g) {
  long count = 0;
  for (int u = 0; u < g.order(); ++u) {
    VertexMask higher = g.neighbours(u) & ~((bit(u) << 1) - 1);
    while (higher != 0) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      VertexMask above_v = g.neighbours(v) & g.neighbours(u) & ~((bit(v) << 1) - 1);
      count += std::popcount(above_v);
    }
  }
  return count;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bellrec
