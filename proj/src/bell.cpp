#include "bellrec/bell.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "bellrec/graph6.hpp"

namespace bellrec {

int BellVariant::min_parts(int n) const {
  switch (kind) {
    case Kind::full:
    case Kind::at_most:
      return n == 0 ? 0 : 1;
    case Kind::at_least:
      return k;
  }
  return 0;
}

int BellVariant::max_parts(int n) const {
  switch (kind) {
    case Kind::full:
    case Kind::at_least:
      return n;
    case Kind::at_most:
      return std::min(k, n);
  }
  return n;
}

std::string BellVariant::name() const {
  switch (kind) {
    case Kind::full:
      return "full";
    case Kind::at_most:
      return "at_most_k";
    case Kind::at_least:
      return "at_least_k";
  }
  return "full";
}

int BellGraph::index_of(const SetPartition& p) const {
  auto it = index.find(p);
  return it == index.end() ? -1 : it->second;
}

BellGraph build_bell(const Graph& g, BellVariant variant, std::size_t cap) {
  if (variant.kind != BellVariant::Kind::full && variant.k < 1)
    throw std::invalid_argument("bounded Bell variants need k >= 1");
  const int lo = variant.min_parts(g.order());
  const int hi = variant.max_parts(g.order());
  BellGraph b;
  b.host = g;
  b.variant = variant;
  b.vertices = enumerate_partitions(g, lo, hi, cap);
  b.index.reserve(b.vertices.size());
  for (std::size_t i = 0; i < b.vertices.size(); ++i) b.index.emplace(b.vertices[i], static_cast<int>(i));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    for (const auto& q : neighbors_of(g, b.vertices[i], lo, hi)) {
      int j = b.index.at(q);
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  b.graph = UnlabeledGraph::from_edges(static_cast<int>(b.vertices.size()), edges);
  return b;
}

UnlabeledGraph bell_edges_all_pairs(const std::vector<SetPartition>& vertices) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (are_adjacent(vertices[i], vertices[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return UnlabeledGraph::from_edges(static_cast<int>(vertices.size()), edges);
}

Scrambled scramble(const UnlabeledGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scrambled s;
  s.image.resize(g.order());
  std::iota(s.image.begin(), s.image.end(), 0);
  // Explicit Fisher-Yates so the permutation does not depend on the
  // standard library's shuffle.
  for (int i = g.order() - 1; i > 0; --i) {
    const std::uint64_t range = static_cast<std::uint64_t>(i + 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    std::uint64_t j = draw % range;
    std::swap(s.image[i], s.image[j]);
  }
  s.graph = g.relabeled(s.image);
  return s;
}

Scrambled scramble(const BellGraph& b, std::uint64_t seed) { return scramble(b.graph, seed); }

std::string bell_to_json(const BellGraph& b) {
  nlohmann::ordered_json j;
  j["variant"] = b.variant.name();
  if (b.variant.kind == BellVariant::Kind::full) j["k"] = nullptr;
  else j["k"] = b.variant.k;
  j["host_graph6"] = to_graph6(b.host);
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& p : b.vertices) verts.push_back(p.to_string());
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : b.graph.edges()) edges.push_back({u, v});
  return j.dump(2);
}

}  // namespace bellrec
