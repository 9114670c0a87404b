#pragma once

#include <optional>
#include <stdexcept>

#include "bellrec/graph.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

class NotLineGraph : public std::runtime_error {
 public:
  NotLineGraph() : std::runtime_error("graph is not a line graph") {}
};

/// A root H with line_graph(H) isomorphic to l, built from a Krausz partition
/// (edge-disjoint cliques covering every edge, each vertex in at most two).
/// H has no isolated vertices. Throws NotLineGraph; std::length_error when l
/// has more than 64 vertices or the root would.
Graph krausz_root(const UnlabeledGraph& l);

std::optional<Graph> try_krausz_root(const UnlabeledGraph& l);

bool is_line_graph(const UnlabeledGraph& l);

/// Drops isolated vertices and turns every triangle component into a claw.
/// This picks one root out of each line-graph ambiguity class.
Graph normalize_ddagger(const Graph& h);

/// Number of components isomorphic to K_{1,3}.
int count_claw_components(const Graph& h);

}  // namespace bellrec
