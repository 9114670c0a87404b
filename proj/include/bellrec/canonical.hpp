#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "bellrec/graph.hpp"
#include "bellrec/unlabeled.hpp"

namespace bellrec {

/// Total-order key: equal iff the graphs are isomorphic. Layout is
/// [order, edge count, u0*order+v0, u1*order+v1, ...] under the canonical
/// labeling, edges sorted.
struct CanonicalCode {
  std::vector<std::uint64_t> words;

  int order() const { return words.empty() ? 0 : static_cast<int>(words[0]); }
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Canonical labeling: vertex v of g maps to position result[v]. Relabeling g
/// by it yields the same graph for every member of an isomorphism class.
std::vector<int> canonical_labeling(const UnlabeledGraph& g);

CanonicalCode canonical_code(const UnlabeledGraph& g);
CanonicalCode canonical_code(const Graph& g);

/// Decodes a code back into its canonical representative.
UnlabeledGraph graph_from_code(const CanonicalCode& code);

bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b);

}  // namespace bellrec

template <>
struct std::hash<bellrec::CanonicalCode> {
  std::size_t operator()(const bellrec::CanonicalCode& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t w : c.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
