#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bellrec {

using VertexMask = std::uint64_t;

/// Finite simple graph on vertices 0..n-1 (n <= 64), adjacency stored as one
/// bitmask per vertex. The graph on zero vertices is a valid value.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph star(int leaves);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbours(int v) const { return adj_[v]; }
  int degree(int v) const;
  int max_degree() const;
  VertexMask all_vertices() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexMask vertices);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_universal_vertex(const Graph& g);

VertexMask universal_vertices(const Graph& g);
VertexMask isolated_vertices(const Graph& g);

/// G' : the induced subgraph on the non-universal vertices, reindexed densely.
Graph strip_universal(const Graph& g);

/// G^claw, computed as complement(normalize_ddagger(complement(g))).
Graph claw_closure(const Graph& g);

/// Connected components as vertex masks, ordered by smallest member.
std::vector<VertexMask> connected_components(const Graph& g);

/// Vertex set of each part of a proper colouring with chromatic_number(g)
/// colours; found by the same search as chromatic_number.
std::vector<VertexMask> optimal_colouring(const Graph& g);
int chromatic_number(const Graph& g);

/// Line graph; throws std::length_error when g has more than 64 edges. Vertex
/// i of the result is edges()[i].
Graph line_graph(const Graph& g);

long count_triangles(const Graph& g);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace bellrec
