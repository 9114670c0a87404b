#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellrec/graph.hpp"

namespace bellrec {

class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partition of {0..n-1} in canonical form: blocks ordered by their smallest
/// vertex, so labels()[v] is a restricted growth string. Comparison is
/// lexicographic on that string.
class SetPartition {
 public:
  SetPartition() = default;

  /// Any labelling (equal labels = same block); it is renumbered by first
  /// appearance.
  static SetPartition from_labels(std::span<const int> labels);
  static SetPartition from_blocks(int n, std::span<const VertexMask> blocks);
  static SetPartition singletons(int n);
  /// Text form "0,2|1"; order is inferred from the largest vertex when n < 0.
  static SetPartition parse(std::string_view text, int n = -1);

  int order() const { return static_cast<int>(labels_.size()); }
  int part_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexMask>& blocks() const { return blocks_; }
  VertexMask block(int i) const { return blocks_[i]; }
  int block_of(int v) const { return labels_[v]; }
  VertexMask block_containing(int v) const { return blocks_[labels_[v]]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  bool is_independent_in(const Graph& g) const;

  std::string to_string() const;

  auto operator<=>(const SetPartition& o) const { return labels_ <=> o.labels_; }
  bool operator==(const SetPartition& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::uint8_t> labels_;
  std::vector<VertexMask> blocks_;
};

/// Checks that p lives on g's vertex set and every block is independent.
/// Throws InvalidPartition.
void validate_partition(const Graph& g, const SetPartition& p);

inline constexpr std::size_t kDefaultPartitionCap = 500000;

class PartitionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Independent set partitions with min_parts <= |P| <= max_parts in canonical
/// (lexicographic restricted growth) order. Throws PartitionCapExceeded when
/// more than cap would be produced.
std::vector<SetPartition> enumerate_partitions(const Graph& g, int min_parts, int max_parts,
                                               std::size_t cap = kDefaultPartitionCap);

/// Counts without storing; same pruning and same cap.
std::size_t count_partitions(const Graph& g, int min_parts, int max_parts,
                             std::size_t cap = kDefaultPartitionCap);

/// True iff q arises from p by moving exactly one vertex. Throws
/// std::invalid_argument on different vertex counts.
bool are_adjacent(const SetPartition& p, const SetPartition& q);

/// The set of vertices whose move turns p into q (empty when not adjacent).
/// Two vertices only when q splits or merges a 2-block of p.
VertexMask moved_vertices(const SetPartition& p, const SetPartition& q);

/// Result of moving v of p into block target, or into a new singleton when
/// target == p.part_count(). The caller guarantees legality.
SetPartition move_vertex(const SetPartition& p, int v, int target);

/// All distinct one-move neighbours of p that are independent set partitions
/// of g with part count inside the bounds, sorted.
std::vector<SetPartition> neighbors_of(const Graph& g, const SetPartition& p, int min_parts, int max_parts);

/// Bell numbers B_0..B_n by the triangle recurrence (n <= 25).
std::vector<std::uint64_t> bell_numbers(int n);

}  // namespace bellrec

template <>
struct std::hash<bellrec::SetPartition> {
  std::size_t operator()(const bellrec::SetPartition& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : p.labels()) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
