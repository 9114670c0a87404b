#include "bellrec/candidates.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace bellrec {

namespace {

// Sorted intersection of two neighbour lists.
void intersect(std::span<const int> a, std::span<const int> b, std::vector<int>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// Scratch view of one vertex's closed neighbourhood.
struct Local {
  const UnlabeledGraph& b;
  int p;
  std::span<const int> nb;

  bool in_closed(int w) const { return w == p || std::binary_search(nb.begin(), nb.end(), w); }
};

bool has_external_common(const Local& loc, int a, int c, int d, std::vector<int>& scratch) {
  intersect(loc.b.neighbours(a), loc.b.neighbours(c), scratch);
  auto nd = loc.b.neighbours(d);
  for (int w : scratch)
    if (!loc.in_closed(w) && std::binary_search(nd.begin(), nd.end(), w)) return true;
  return false;
}

bool property1(const Local& loc, Property1Reading reading) {
  std::vector<int> common;
  const auto& nb = loc.nb;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (loc.b.adjacent(nb[i], nb[j])) continue;
      intersect(loc.b.neighbours(nb[i]), loc.b.neighbours(nb[j]), common);
      int outside = -1;
      int count = 0;
      for (int w : common)
        if (!loc.in_closed(w)) {
          outside = w;
          ++count;
        }
      if (count > 1) return false;
      if (count == 0) {
        if (reading == Property1Reading::existence) return false;
        continue;
      }
      for (std::size_t t = 0; t < nb.size(); ++t)
        if (t != i && t != j && loc.b.adjacent(nb[t], outside)) return false;
    }
  return true;
}

// Walks the triangles of the neighbourhood subgraph; calls f(a, b, c,
// closed_externally) for each. Stops early when f returns false.
template <class F>
void for_each_triangle(const Local& loc, F f) {
  std::vector<int> scratch;
  const auto& nb = loc.nb;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (!loc.b.adjacent(nb[i], nb[j])) continue;
      for (std::size_t t = j + 1; t < nb.size(); ++t) {
        if (!loc.b.adjacent(nb[i], nb[t]) || !loc.b.adjacent(nb[j], nb[t])) continue;
        bool closed = has_external_common(loc, nb[i], nb[j], nb[t], scratch);
        if (!f(nb[i], nb[j], nb[t], closed)) return;
      }
    }
}

bool property2(const Local& loc) {
  bool ok = true;
  for_each_triangle(loc, [&](int a, int c, int d, bool closed) {
    if (!closed) return true;
    for (int q : loc.nb) {
      if (q == a || q == c || q == d) continue;
      int hits = loc.b.adjacent(q, a) + loc.b.adjacent(q, c) + loc.b.adjacent(q, d);
      if (hits != 0 && hits != 2) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

NeighbourhoodStats stats(const Local& loc) {
  NeighbourhoodStats s;
  s.degree = static_cast<int>(loc.nb.size());
  long inner_edges = 0;
  for (std::size_t i = 0; i < loc.nb.size(); ++i)
    for (std::size_t j = i + 1; j < loc.nb.size(); ++j)
      if (loc.b.adjacent(loc.nb[i], loc.nb[j])) ++inner_edges;
  s.n_stat = s.degree + inner_edges;
  for_each_triangle(loc, [&](int, int, int, bool closed) {
    if (closed) ++s.t_stat;
    return true;
  });
  return s;
}

std::vector<int> argmax(const std::vector<int>& among, auto key) {
  std::vector<int> out;
  if (among.empty()) return out;
  auto best = key(among.front());
  for (int v : among) best = std::max(best, key(v));
  for (int v : among)
    if (key(v) == best) out.push_back(v);
  return out;
}

void check_vertex(const UnlabeledGraph& b, int p) {
  if (p < 0 || p >= b.order()) throw std::out_of_range("vertex index out of range");
}

}  // namespace

bool satisfies_property1(const UnlabeledGraph& b, int p, Property1Reading reading) {
  check_vertex(b, p);
  return property1(Local{b, p, b.neighbours(p)}, reading);
}

bool satisfies_property2(const UnlabeledGraph& b, int p) {
  check_vertex(b, p);
  return property2(Local{b, p, b.neighbours(p)});
}

NeighbourhoodStats neighbourhood_stats(const UnlabeledGraph& b, int p) {
  check_vertex(b, p);
  return stats(Local{b, p, b.neighbours(p)});
}

VertexDiagnostics vertex_diagnostics(const UnlabeledGraph& b, int p, Property1Reading reading) {
  check_vertex(b, p);
  Local loc{b, p, b.neighbours(p)};
  VertexDiagnostics d;
  d.stats = stats(loc);
  d.prop1 = property1(loc, reading);
  d.prop2 = property2(loc);
  return d;
}

std::vector<VertexDiagnostics> all_diagnostics(const UnlabeledGraph& b, Property1Reading reading) {
  const int m = b.order();
  std::vector<VertexDiagnostics> out(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (int p = 0; p < m; ++p) out[p] = vertex_diagnostics(b, p, reading);
  return out;
}

std::vector<VertexDiagnostics> all_diagnostics_serial(const UnlabeledGraph& b, Property1Reading reading) {
  std::vector<VertexDiagnostics> out(b.order());
  for (int p = 0; p < b.order(); ++p) out[p] = vertex_diagnostics(b, p, reading);
  return out;
}

CandidateSets select_candidates(const std::vector<VertexDiagnostics>& table) {
  CandidateSets c;
  for (int p = 0; p < static_cast<int>(table.size()); ++p)
    if (table[p].prop1 && table[p].prop2) c.omega12.push_back(p);
  c.omega3 = argmax(c.omega12, [&](int p) { return static_cast<long>(table[p].stats.degree); });
  c.omega4 = argmax(c.omega3, [&](int p) { return table[p].stats.n_stat; });
  c.omega5 = argmax(c.omega4, [&](int p) { return table[p].stats.t_stat; });
  return c;
}

CandidateSets pstar_candidates(const UnlabeledGraph& b, Property1Reading reading) {
  return select_candidates(all_diagnostics(b, reading));
}

CandidateSets pstar_candidates_serial(const UnlabeledGraph& b, Property1Reading reading) {
  return select_candidates(all_diagnostics_serial(b, reading));
}

PsiImage psi_map(const BellGraph& b, int p, int q) {
  check_vertex(b.graph, p);
  check_vertex(b.graph, q);
  const SetPartition& P = b.vertices[p];
  const SetPartition& Q = b.vertices[q];
  const VertexMask moved = moved_vertices(P, Q);
  if (moved == 0) throw std::invalid_argument("psi_map: q is not a neighbour of p");
  const int x = std::countr_zero(moved);
  const VertexMask from = P.block_containing(x);
  const int from_size = std::popcount(from);
  const int n = P.order();

  auto make = [](int a, int c, int type) {
    return PsiImage{std::min(a, c), std::max(a, c), type};
  };
  auto single = [](VertexMask m) { return std::countr_zero(m); };

  if (Q.part_count() == P.part_count() - 1) {
    // x left a singleton and joined another block.
    const VertexMask to = Q.block_containing(x) & ~(VertexMask{1} << x);
    if (std::popcount(to) == 1) return make(x, single(to), 1);
  } else if (Q.part_count() == P.part_count() + 1) {
    if (from_size == 2) return make(single(from), single(from & (from - 1)), 2);
    if (from_size == 3) {
      VertexMask rest = from & ~(VertexMask{1} << x);
      return make(single(rest), single(rest & (rest - 1)), 5);
    }
  } else {
    const VertexMask to = Q.block_containing(x) & ~(VertexMask{1} << x);
    if (from_size == 2 && std::popcount(to) == 1) {
      const int w = single(to);
      const int type = b.host.degree(w) == n - 2 ? 3 : 4;
      return make(x, w, type);
    }
  }
  throw std::invalid_argument("psi_map: neighbour " + Q.to_string() + " of " + P.to_string() + " fits no type");
}

std::string diagnostics_json(const std::vector<VertexDiagnostics>& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < table.size(); ++p) {
    const auto& d = table[p];
    out.push_back({{"vertex", p},
                   {"degree", d.stats.degree},
                   {"n_stat", d.stats.n_stat},
                   {"t_stat", d.stats.t_stat},
                   {"prop1", d.prop1},
                   {"prop2", d.prop2}});
  }
  return out.dump(2);
}

}  // namespace bellrec
