#include "bellrec/generate.hpp"

#include <map>
#include <mutex>
#include <string>

#include "bellrec/canonical.hpp"

namespace bellrec {

namespace {

std::vector<Graph> extend(const std::vector<Graph>& smaller, int n) {
  std::map<CanonicalCode, Graph> seen;
  for (const Graph& base : smaller) {
    for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if ((nb >> v) & 1U) g.add_edge(v, n - 1);
      auto code = canonical_code(g);
      if (!seen.contains(code)) seen.emplace(code, graph_from_code(code).to_graph());
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> generate_nonisomorphic_graphs(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxGeneratedOrder)
    throw CapExceeded("graph generation is capped at " + std::to_string(kMaxGeneratedOrder) + " vertices");
  // The levels are small and reused by every suite, so keep them.
  static std::mutex lock;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard guard(lock);
  while (static_cast<int>(levels.size()) <= n) {
    int next = static_cast<int>(levels.size());
    levels.push_back(extend(levels.back(), next));
  }
  return levels[n];
}

std::vector<Graph> generate_nonisomorphic_graphs(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto level = generate_nonisomorphic_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace bellrec
