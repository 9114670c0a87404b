#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellrec/bell.hpp"
#include "bellrec/canonical.hpp"
#include "bellrec/graph.hpp"
#include "bellrec/partitions.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

class AllComplete : public std::runtime_error {
 public:
  AllComplete() : std::runtime_error("every candidate graph is complete") {}
};

class Stuck : public std::runtime_error {
 public:
  explicit Stuck(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionViolated : public std::invalid_argument {
 public:
  explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

/// Components of the open neighbourhood of one vertex p.
struct ComponentIndex {
  int vertex = -1;
  std::vector<int> neighbours;                // sorted neighbours of p
  std::vector<int> component_of;              // parallel to neighbours
  std::vector<std::vector<int>> components;   // members, as vertices of b
  int count() const { return static_cast<int>(components.size()); }
};

ComponentIndex component_index(const UnlabeledGraph& b, int p);

/// With labels: for each component, the union of host vertices whose move
/// produces one of its members.
std::vector<VertexMask> component_move_sets(const BellGraph& b, const ComponentIndex& ci);

/// Component count of every vertex's open neighbourhood. The OpenMP kernel
/// and its serial reference return identical vectors.
std::vector<int> component_counts(const UnlabeledGraph& b);
std::vector<int> component_counts_serial(const UnlabeledGraph& b);

struct ReconstructionCandidates {
  int max_components = 0;
  std::vector<int> vertices;  // ascending
};

/// Vertices whose neighbourhood has the most components. Requires b nonempty.
ReconstructionCandidates reconstruction_candidates(const UnlabeledGraph& b);

/// q1, q2 non-adjacent neighbours of p, and among their common neighbours
/// outside N[p] exactly two have a neighbour in that same set. Throws
/// std::invalid_argument unless q1 != q2 are both neighbours of p.
bool is_double_closed(const UnlabeledGraph& b, int p, int q1, int q2);

enum class KRegime { k_eq_chi_plus_1, k_gt_chi_plus_1 };
std::string k_regime_name(KRegime r);

/// k_gt iff some vertex has a double-closed pair of neighbours.
KRegime detect_k_regime(const UnlabeledGraph& b);
KRegime detect_k_regime_serial(const UnlabeledGraph& b);

/// Graph on the components of N(p), in ComponentIndex order.
Graph candidate_graph(const UnlabeledGraph& b, int p, KRegime regime);
Graph candidate_graph(const UnlabeledGraph& b, const ComponentIndex& ci, KRegime regime);

struct LowerCandidate {
  int vertex = -1;
  int edges = 0;
  bool complete = false;
};

struct LowerReport {
  KRegime regime = KRegime::k_eq_chi_plus_1;
  int max_components = 0;
  std::vector<LowerCandidate> candidates;
  int chosen = -1;  // vertex of b
  Graph result;
};

/// Host graph read off an unlabeled B_k(G) with k > chi(G): the candidate
/// graph with most edges among non-complete ones, ties to the lowest
/// canonical code. Throws AllComplete, std::invalid_argument on empty input.
Graph reconstruct_from_bk(const UnlabeledGraph& b);
LowerReport reconstruct_from_bk_report(const UnlabeledGraph& b);
LowerReport reconstruct_from_bk_report_serial(const UnlabeledGraph& b);

std::string lower_report_json(const LowerReport& r);

/// One improving step of the fat-partition search.
struct FatStep {
  std::string move;  // "absorb", "swap" or "transfer"
  int min_size = 0;
  int min_count = 0;
};

struct FatPartitionTrace {
  SetPartition start;
  std::vector<FatStep> steps;  // potential after each move
  SetPartition result;
};

/// Applies the first improving move to an independent partition whose
/// smallest part has m vertices: a smallest part absorbs a non-adjacent vertex
/// of a part with >= m+2 vertices ("absorb"); a smallest part A with a single
/// edge ab to a part of size m+1 trades all of A but a for m non-neighbours
/// of a from a part of size >= 2m+1 ("swap"); or a joins a part with no
/// neighbour of it and the rest of A goes to B ("transfer", one part fewer).
/// Returns the move name, or nullopt when none applies.
std::optional<std::string> fat_improvement_step(const Graph& g, std::vector<VertexMask>& parts);

/// Partition into chi(g) independent sets, each of size at least 4, found by
/// local improvement from an optimal colouring. Requires 9*maxdeg + 3 < n
/// (PreconditionViolated). Throws Stuck if no improving move exists while the
/// smallest part has at most 3 vertices.
SetPartition find_fat_partition(const Graph& g);
FatPartitionTrace find_fat_partition_trace(const Graph& g);

/// Independent parts, all of size >= 4, exactly chi(g) of them.
bool is_fat_partition(const Graph& g, const SetPartition& p);

}  // namespace bellrec
