#include "bellrec/unlabeled.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bellrec {

UnlabeledGraph UnlabeledGraph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  if (order < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::vector<int>> lists(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  UnlabeledGraph g;
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(order + 1);
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    g.targets_.insert(g.targets_.end(), l.begin(), l.end());
    g.offsets_.push_back(static_cast<int>(g.targets_.size()));
  }
  return g;
}

UnlabeledGraph UnlabeledGraph::from_graph(const Graph& g) {
  auto es = g.edges();
  return from_edges(g.order(), es);
}

bool UnlabeledGraph::adjacent(int u, int v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> UnlabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size());
  for (int u = 0; u < order(); ++u)
    for (int v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

UnlabeledGraph UnlabeledGraph::induced(std::span<const int> vertices) const {
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : neighbours(vertices[i]))
      if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
  return from_edges(static_cast<int>(vertices.size()), es);
}

UnlabeledGraph UnlabeledGraph::relabeled(std::span<const int> image) const {
  if (static_cast<int>(image.size()) != order()) throw std::invalid_argument("relabeling has wrong length");
  auto es = edges();
  for (auto& [u, v] : es) {
    u = image[u];
    v = image[v];
  }
  return from_edges(order(), es);
}

UnlabeledGraph UnlabeledGraph::complement() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < order(); ++u) {
    auto nb = neighbours(u);
    auto it = nb.begin();
    for (int v = u + 1; v < order(); ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) es.emplace_back(u, v);
    }
  }
  return from_edges(order(), es);
}

bool UnlabeledGraph::is_clique() const {
  for (int v = 0; v < order(); ++v)
    if (degree(v) != order() - 1) return false;
  return true;
}

Graph UnlabeledGraph::to_graph() const {
  if (order() > Graph::kMaxVertices) throw std::length_error("graph exceeds 64 vertices");
  Graph g(order());
  for (auto [u, v] : edges()) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<int>> connected_components(const UnlabeledGraph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbours(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::string to_dot(const UnlabeledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bellrec
