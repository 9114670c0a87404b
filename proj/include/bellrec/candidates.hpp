#pragma once

#include <string>
#include <vector>

#include "bellrec/bell.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

/// How Property 1 treats a non-adjacent pair of neighbours with no common
/// neighbour outside N[p]. existence: the pair fails. at_most_one: the pair
/// passes vacuously.
enum class Property1Reading { existence, at_most_one };

struct NeighbourhoodStats {
  int degree = 0;
  long n_stat = 0;  // vertices plus edges of the neighbourhood subgraph
  long t_stat = 0;  // its triangles closed by a common neighbour outside N[p]

  bool operator==(const NeighbourhoodStats&) const = default;
};

struct VertexDiagnostics {
  NeighbourhoodStats stats;
  bool prop1 = false;
  bool prop2 = false;

  bool operator==(const VertexDiagnostics&) const = default;
};

/// Vertex-index sets, each sorted ascending. omega12 holds the vertices that
/// pass properties 1 and 2; the rest are the successive argmax filters.
struct CandidateSets {
  std::vector<int> omega12;
  std::vector<int> omega3;
  std::vector<int> omega4;
  std::vector<int> omega5;

  bool operator==(const CandidateSets&) const = default;
};

bool satisfies_property1(const UnlabeledGraph& b, int p, Property1Reading reading = Property1Reading::existence);
bool satisfies_property2(const UnlabeledGraph& b, int p);
NeighbourhoodStats neighbourhood_stats(const UnlabeledGraph& b, int p);
VertexDiagnostics vertex_diagnostics(const UnlabeledGraph& b, int p,
                                     Property1Reading reading = Property1Reading::existence);

/// Per-vertex table; the parallel version splits vertices over OpenMP
/// threads, the serial one is the reference.
std::vector<VertexDiagnostics> all_diagnostics(const UnlabeledGraph& b,
                                               Property1Reading reading = Property1Reading::existence);
std::vector<VertexDiagnostics> all_diagnostics_serial(const UnlabeledGraph& b,
                                                      Property1Reading reading = Property1Reading::existence);

CandidateSets select_candidates(const std::vector<VertexDiagnostics>& table);

CandidateSets pstar_candidates(const UnlabeledGraph& b, Property1Reading reading = Property1Reading::existence);
CandidateSets pstar_candidates_serial(const UnlabeledGraph& b,
                                      Property1Reading reading = Property1Reading::existence);

/// A non-edge {u, v} of the host with u < v, plus the neighbour type 1..5.
struct PsiImage {
  int u = 0;
  int v = 0;
  int type = 0;

  bool operator==(const PsiImage&) const = default;
};

/// Classifies neighbour q of p in a labeled Bell graph. Throws
/// std::invalid_argument when q is not a neighbour or fits no type.
PsiImage psi_map(const BellGraph& b, int p, int q);

/// [{"vertex":i,"degree":..,"n_stat":..,"t_stat":..,"prop1":..,"prop2":..}, ...]
std::string diagnostics_json(const std::vector<VertexDiagnostics>& table);

}  // namespace bellrec
