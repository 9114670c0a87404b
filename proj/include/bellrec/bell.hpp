#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellrec/graph.hpp"
#include "bellrec/partitions.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

struct BellVariant {
  enum class Kind { full, at_most, at_least };
  Kind kind = Kind::full;
  int k = 0;

  static BellVariant full() { return {Kind::full, 0}; }
  static BellVariant at_most(int k) { return {Kind::at_most, k}; }
  static BellVariant at_least(int k) { return {Kind::at_least, k}; }

  int min_parts(int n) const;
  int max_parts(int n) const;
  std::string name() const;

  bool operator==(const BellVariant&) const = default;
};

/// Labeled Bell-type graph: vertex i is the partition vertices[i]; vertices
/// are in canonical partition order.
struct BellGraph {
  Graph host;
  BellVariant variant;
  std::vector<SetPartition> vertices;
  UnlabeledGraph graph;
  std::unordered_map<SetPartition, int> index;

  int order() const { return graph.order(); }
  /// -1 when p is not a vertex.
  int index_of(const SetPartition& p) const;
};

/// Vertices from enumerate_partitions with the variant's bounds; edges from
/// move generation plus index lookup. Throws PartitionCapExceeded past cap,
/// std::invalid_argument for k < 1 on bounded variants.
BellGraph build_bell(const Graph& g, BellVariant variant, std::size_t cap = kDefaultPartitionCap);

/// Reference edge construction by comparing all pairs; for tests.
UnlabeledGraph bell_edges_all_pairs(const std::vector<SetPartition>& vertices);

struct Scrambled {
  UnlabeledGraph graph;
  /// Vertex i of the source becomes vertex image[i] of graph.
  std::vector<int> image;
};

/// Uniform random relabeling driven by std::mt19937_64(seed).
Scrambled scramble(const UnlabeledGraph& g, std::uint64_t seed);
Scrambled scramble(const BellGraph& b, std::uint64_t seed);

/// {variant, k, host_graph6, vertices:[...], edges:[[i,j],...]}
std::string bell_to_json(const BellGraph& b);

}  // namespace bellrec
