#pragma once

#include <stdexcept>
#include <vector>

#include "bellrec/graph.hpp"

namespace bellrec {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGeneratedOrder = 8;

/// One representative per isomorphism class of graphs on n vertices, sorted
/// by canonical code. Each representative is in canonical labeling. Throws
/// CapExceeded when n > 8.
std::vector<Graph> generate_nonisomorphic_graphs(int n);

/// All classes on lo..hi vertices, in increasing order of n.
std::vector<Graph> generate_nonisomorphic_graphs(int lo, int hi);

}  // namespace bellrec
