#pragma once
// Structural invariants of labeled Bell graphs, shared by the unit tests and
// the acceptance runner. Each check returns every violation it found.

#include <string>
#include <vector>

namespace invariants {

struct Tally {
  std::string name;
  long checks = 0;
  long violation_count = 0;
  std::vector<std::string> violations;  // first few, with reproduction data

  void fail(std::string what);
  bool ok() const { return violation_count == 0; }
};

// Upper-Bell facts over B(g) and B_{>=k}(g), 1 <= k <= n-1, hosts on <= n_max vertices.
Tally part_shapes_vs_properties(int n_max);  // no part of 4+, 2-2, 2-1, 3-1 edge counts
Tally candidate_shape(int n_max);            // what survives properties 1-3
Tally pstar_is_final(int n_max);             // k <= n-2, plus its closed-triangle count
Tally pstar_top_reading(int n_max);          // k = n-1 needs the permissive reading
Tally psi_bijection(int n_max);              // onto non-edges; line graph on the 4th filter
Tally claw_triangle_closure(int n_max);      // claws open, complement triangles closed at P*

// Lower-Bell facts.
Tally component_bound(int n_max);  // C_P <= n, every variant
Tally fat_components();            // fat chi-partition has n singleton-move components
Tally candidate_part_sizes(int n_max);
Tally split_closure();             // empty and two-part hosts up to 9 vertices, k = 2..4

std::vector<Tally> all(int n_max);

}  // namespace invariants
