#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellrec/graph.hpp"

namespace bellrec {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Encodes with the short size prefix for n <= 62 and the '~' + 3 byte form
/// otherwise.
std::string to_graph6(const Graph& g);

/// Leading/trailing whitespace is ignored. Throws Graph6Error on bad
/// characters, wrong length, or n > 64.
Graph from_graph6(std::string_view text);

/// One graph per non-empty line; lines starting with '#' are skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace bellrec
