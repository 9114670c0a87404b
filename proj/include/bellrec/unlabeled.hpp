#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellrec/graph.hpp"

namespace bellrec {

/// Adjacency structure with no vertex payloads: the only thing a
/// reconstruction algorithm gets to look at. Immutable after construction;
/// neighbour lists are sorted (CSR layout), so any size is supported.
class UnlabeledGraph {
 public:
  UnlabeledGraph() : offsets_{0} {}

  /// Duplicate edges are merged; self-loops are rejected.
  static UnlabeledGraph from_edges(int order, std::span<const std::pair<int, int>> edges);
  static UnlabeledGraph from_graph(const Graph& g);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const int> neighbours(int v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph; vertex i of the result is vertices[i].
  UnlabeledGraph induced(std::span<const int> vertices) const;

  /// Vertex v of *this becomes vertex image[v] of the result.
  UnlabeledGraph relabeled(std::span<const int> image) const;

  UnlabeledGraph complement() const;

  bool is_clique() const;

  /// Throws std::length_error above 64 vertices.
  Graph to_graph() const;

  bool operator==(const UnlabeledGraph&) const = default;

 private:
  std::vector<int> offsets_;
  std::vector<int> targets_;
};

/// Connected components, each as a sorted vertex list, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const UnlabeledGraph& g);

std::string to_dot(const UnlabeledGraph& g, std::string_view name = "B");

}  // namespace bellrec
