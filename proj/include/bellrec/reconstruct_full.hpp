#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellrec/candidates.hpp"
#include "bellrec/graph.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

class EmptyInput : public std::invalid_argument {
 public:
  EmptyInput() : std::invalid_argument("input graph has no vertices") {}
};

class NoCandidate : public std::runtime_error {
 public:
  NoCandidate() : std::runtime_error("no vertex passes the candidate filter") {}
};

enum class Regime { k_le_n_minus_2, k_eq_n_minus_1, degenerate_clique, degenerate_k5minus, empty, single_vertex };

std::string regime_name(Regime r);

/// One admissible answer in a degenerate regime. The condition names the
/// range of k relative to the host order n for which it applies.
struct Possibility {
  Graph graph;
  std::string condition;
};

struct ReconstructionReport {
  Regime regime = Regime::empty;
  std::optional<int> pivot;
  std::optional<Graph> result;
  std::vector<Possibility> possibilities;
  std::optional<CandidateSets> candidate_sets;
};

/// Intermediate values of phi at one vertex.
struct PhiTrace {
  bool line_graph = false;
  Graph root;
  Graph normalized_root;
  long root_triangles = 0;    // triangles of normalized_root
  long closed_triangles = 0;  // t_stat of the vertex
  int claws_replaced = 0;
  Graph result;
};

/// The graph read off the neighbourhood of p: invert the line graph,
/// normalize the root, turn claws back into triangles as the closed-triangle
/// count demands, complement. A single vertex when the neighbourhood is not
/// a line graph.
Graph phi(const UnlabeledGraph& b, int p);
PhiTrace phi_trace(const UnlabeledGraph& b, int p);

/// The host with universal vertices removed, read off an unlabeled B(G) or
/// B_{>=k}(G) with k <= n - 2. Uses phi at the lowest-index member of the
/// final candidate set; inputs with at most two vertices use a fixed table.
/// Throws EmptyInput or NoCandidate.
Graph reconstruct_prime(const UnlabeledGraph& b, Property1Reading reading = Property1Reading::existence);
ReconstructionReport reconstruct_prime_report(const UnlabeledGraph& b,
                                              Property1Reading reading = Property1Reading::existence);

/// For an unlabeled B_{>=k}(G) with unknown k <= n: decides the regime and
/// returns the recoverable graph or the set of possibilities.
ReconstructionReport reconstruct_upper_auto(const UnlabeledGraph& b);

/// True iff b is K5 minus one edge.
bool is_k5_minus(const UnlabeledGraph& b);

std::string report_json(const ReconstructionReport& r);

}  // namespace bellrec
