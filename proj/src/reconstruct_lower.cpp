#include "bellrec/reconstruct_lower.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include <json.hpp>

#include "bellrec/graph6.hpp"

namespace bellrec {

namespace {

bool contains_sorted(std::span<const int> list, int x) { return std::binary_search(list.begin(), list.end(), x); }

// Common neighbours of q1 and q2 that are neither p nor a neighbour of p.
std::vector<int> outside_common(const UnlabeledGraph& b, int p, int q1, int q2) {
  auto n1 = b.neighbours(q1);
  auto n2 = b.neighbours(q2);
  auto np = b.neighbours(p);
  std::vector<int> out;
  auto i = n1.begin();
  auto j = n2.begin();
  while (i != n1.end() && j != n2.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (*i != p && !contains_sorted(np, *i)) out.push_back(*i);
      ++i;
      ++j;
    }
  }
  return out;
}

bool double_closed_unchecked(const UnlabeledGraph& b, int p, int q1, int q2) {
  if (b.adjacent(q1, q2)) return false;
  auto s = outside_common(b, p, q1, q2);
  int touching = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool has = false;
    for (std::size_t j = 0; j < s.size() && !has; ++j)
      if (i != j && b.adjacent(s[i], s[j])) has = true;
    if (has && ++touching > 2) return false;
  }
  return touching == 2;
}

bool has_double_closed_pair(const UnlabeledGraph& b, int p) {
  auto nb = b.neighbours(p);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (double_closed_unchecked(b, p, nb[i], nb[j])) return true;
  return false;
}

bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

template <class BuildAll>
LowerReport assemble_report(const UnlabeledGraph& b, KRegime regime, BuildAll build_all) {
  if (b.order() == 0) throw std::invalid_argument("empty input");
  LowerReport r;
  r.regime = regime;
  auto rc = reconstruction_candidates(b);
  r.max_components = rc.max_components;
  std::vector<Graph> graphs = build_all(rc.vertices);

  int best = -1;
  std::optional<CanonicalCode> best_code;
  for (std::size_t i = 0; i < rc.vertices.size(); ++i) {
    const Graph& g = graphs[i];
    LowerCandidate c{rc.vertices[i], g.size(), is_complete(g)};
    r.candidates.push_back(c);
    if (c.complete) continue;
    if (best == -1 || c.edges > graphs[best].size()) {
      best = static_cast<int>(i);
      best_code.reset();
      continue;
    }
    if (c.edges < graphs[best].size()) continue;
    if (!best_code) best_code = canonical_code(graphs[best]);
    auto code = canonical_code(g);
    if (code < *best_code) {
      best = static_cast<int>(i);
      best_code = std::move(code);
    }
  }
  if (best == -1) throw AllComplete();
  r.chosen = rc.vertices[best];
  r.result = graphs[best];
  return r;
}

}  // namespace

ComponentIndex component_index(const UnlabeledGraph& b, int p) {
  if (p < 0 || p >= b.order()) throw std::out_of_range("vertex out of range");
  ComponentIndex ci;
  ci.vertex = p;
  auto nb = b.neighbours(p);
  ci.neighbours.assign(nb.begin(), nb.end());
  const int d = static_cast<int>(nb.size());
  ci.component_of.assign(d, -1);
  std::vector<int> stack;
  for (int s = 0; s < d; ++s) {
    if (ci.component_of[s] != -1) continue;
    const int id = ci.count();
    ci.components.emplace_back();
    ci.component_of[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      ci.components[id].push_back(nb[i]);
      for (int w : b.neighbours(nb[i])) {
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        if (it == nb.end() || *it != w) continue;
        int j = static_cast<int>(it - nb.begin());
        if (ci.component_of[j] == -1) {
          ci.component_of[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(ci.components[id].begin(), ci.components[id].end());
  }
  return ci;
}

std::vector<VertexMask> component_move_sets(const BellGraph& b, const ComponentIndex& ci) {
  std::vector<VertexMask> out(ci.count(), 0);
  const auto& p = b.vertices[ci.vertex];
  for (int c = 0; c < ci.count(); ++c)
    for (int q : ci.components[c]) out[c] |= moved_vertices(p, b.vertices[q]);
  return out;
}

std::vector<int> component_counts(const UnlabeledGraph& b) {
  const int n = b.order();
  std::vector<int> out(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int p = 0; p < n; ++p) out[p] = component_index(b, p).count();
  return out;
}

std::vector<int> component_counts_serial(const UnlabeledGraph& b) {
  std::vector<int> out(b.order(), 0);
  for (int p = 0; p < b.order(); ++p) out[p] = component_index(b, p).count();
  return out;
}

ReconstructionCandidates reconstruction_candidates(const UnlabeledGraph& b) {
  if (b.order() == 0) throw std::invalid_argument("empty input");
  auto counts = component_counts(b);
  ReconstructionCandidates rc;
  rc.max_components = *std::max_element(counts.begin(), counts.end());
  for (int p = 0; p < b.order(); ++p)
    if (counts[p] == rc.max_components) rc.vertices.push_back(p);
  return rc;
}

bool is_double_closed(const UnlabeledGraph& b, int p, int q1, int q2) {
  if (q1 == q2) throw std::invalid_argument("q1 and q2 must differ");
  if (!b.adjacent(p, q1) || !b.adjacent(p, q2)) throw std::invalid_argument("q1 and q2 must be neighbours of p");
  return double_closed_unchecked(b, p, q1, q2);
}

std::string k_regime_name(KRegime r) {
  return r == KRegime::k_eq_chi_plus_1 ? "k_eq_chi_plus_1" : "k_gt_chi_plus_1";
}

KRegime detect_k_regime(const UnlabeledGraph& b) {
  std::atomic<bool> found{false};
  const int n = b.order();
#pragma omp parallel for schedule(dynamic, 16)
  for (int p = 0; p < n; ++p) {
    if (found.load(std::memory_order_relaxed)) continue;
    if (has_double_closed_pair(b, p)) found.store(true, std::memory_order_relaxed);
  }
  return found ? KRegime::k_gt_chi_plus_1 : KRegime::k_eq_chi_plus_1;
}

KRegime detect_k_regime_serial(const UnlabeledGraph& b) {
  for (int p = 0; p < b.order(); ++p)
    if (has_double_closed_pair(b, p)) return KRegime::k_gt_chi_plus_1;
  return KRegime::k_eq_chi_plus_1;
}

Graph candidate_graph(const UnlabeledGraph& b, int p, KRegime regime) {
  return candidate_graph(b, component_index(b, p), regime);
}

Graph candidate_graph(const UnlabeledGraph& b, const ComponentIndex& ci, KRegime regime) {
  const int m = ci.count();
  Graph g(m);
  const int p = ci.vertex;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      bool edge = regime == KRegime::k_gt_chi_plus_1;
      for (int qu : ci.components[u]) {
        for (int qv : ci.components[v]) {
          if (regime == KRegime::k_eq_chi_plus_1) {
            if (outside_common(b, p, qu, qv).empty()) edge = true;
          } else if (double_closed_unchecked(b, p, qu, qv)) {
            edge = false;
          }
          if (edge != (regime == KRegime::k_gt_chi_plus_1)) break;
        }
        if (edge != (regime == KRegime::k_gt_chi_plus_1)) break;
      }
      if (edge) g.add_edge(u, v);
    }
  return g;
}

LowerReport reconstruct_from_bk_report(const UnlabeledGraph& b) {
  if (b.order() == 0) throw std::invalid_argument("empty input");
  const KRegime regime = detect_k_regime(b);
  return assemble_report(b, regime, [&](const std::vector<int>& cands) {
    std::vector<Graph> out(cands.size());
    const int count = static_cast<int>(cands.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < count; ++i) out[i] = candidate_graph(b, cands[i], regime);
    return out;
  });
}

LowerReport reconstruct_from_bk_report_serial(const UnlabeledGraph& b) {
  if (b.order() == 0) throw std::invalid_argument("empty input");
  const KRegime regime = detect_k_regime_serial(b);
  return assemble_report(b, regime, [&](const std::vector<int>& cands) {
    std::vector<Graph> out;
    out.reserve(cands.size());
    for (int p : cands) out.push_back(candidate_graph(b, p, regime));
    return out;
  });
}

Graph reconstruct_from_bk(const UnlabeledGraph& b) { return reconstruct_from_bk_report(b).result; }

std::string lower_report_json(const LowerReport& r) {
  nlohmann::ordered_json j;
  j["regime"] = k_regime_name(r.regime);
  j["max_components"] = r.max_components;
  auto& cs = j["candidates"] = nlohmann::ordered_json::array();
  for (const auto& c : r.candidates) cs.push_back({{"vertex", c.vertex}, {"edges", c.edges}, {"complete", c.complete}});
  j["chosen"] = r.chosen;
  j["result_graph6"] = to_graph6(r.result);
  return j.dump(2);
}

// Fat partition search.

namespace {

struct Potential {
  int min_size;
  int min_count;
};

Potential potential(const std::vector<VertexMask>& parts) {
  int m = 64;
  int c = 0;
  for (VertexMask p : parts) {
    int s = std::popcount(p);
    if (s < m) {
      m = s;
      c = 1;
    } else if (s == m) {
      ++c;
    }
  }
  return {m, c};
}

VertexMask neighbourhood_of(const Graph& g, VertexMask set) {
  VertexMask out = 0;
  for (VertexMask s = set; s != 0; s &= s - 1) out |= g.neighbours(std::countr_zero(s));
  return out;
}

VertexMask lowest_bits(VertexMask set, int count) {
  VertexMask out = 0;
  for (int i = 0; i < count; ++i) {
    VertexMask low = set & (~set + 1);
    out |= low;
    set &= ~low;
  }
  return out;
}

}  // namespace

std::optional<std::string> fat_improvement_step(const Graph& g, std::vector<VertexMask>& parts) {
  if (parts.empty()) return std::nullopt;
  const int m = potential(parts).min_size;
  const int count = static_cast<int>(parts.size());

  // A smallest part absorbs a vertex of a part with >= m+2 vertices that has
  // no neighbour in it.
  for (int a = 0; a < count; ++a) {
    if (std::popcount(parts[a]) != m) continue;
    const VertexMask near_a = neighbourhood_of(g, parts[a]);
    for (int bi = 0; bi < count; ++bi) {
      if (bi == a || std::popcount(parts[bi]) < m + 2) continue;
      VertexMask free = parts[bi] & ~near_a;
      if (free == 0) continue;
      VertexMask pick = free & (~free + 1);
      parts[a] |= pick;
      parts[bi] &= ~pick;
      return "absorb";
    }
  }

  for (int a = 0; a < count; ++a) {
    if (std::popcount(parts[a]) != m) continue;
    for (int bi = 0; bi < count; ++bi) {
      if (bi == a || std::popcount(parts[bi]) != m + 1) continue;
      int edges = 0;
      int ea = -1;
      for (VertexMask s = parts[a]; s != 0; s &= s - 1) {
        int x = std::countr_zero(s);
        int e = std::popcount(g.neighbours(x) & parts[bi]);
        if (e > 0) ea = x;
        edges += e;
      }
      if (edges != 1) continue;
      const VertexMask rest = parts[a] & ~(VertexMask{1} << ea);
      // The endpoint in A joins m non-neighbours from a large part; the rest
      // of A moves into B.
      for (int ci = 0; ci < count; ++ci) {
        if (ci == a || ci == bi || std::popcount(parts[ci]) < 2 * m + 1) continue;
        VertexMask free = parts[ci] & ~g.neighbours(ea);
        if (std::popcount(free) < m) continue;
        VertexMask moved = lowest_bits(free, m);
        parts[a] = (VertexMask{1} << ea) | moved;
        parts[bi] |= rest;
        parts[ci] &= ~moved;
        return "swap";
      }
      // A part with no neighbour of the endpoint would take it while B takes
      // the rest, leaving one part fewer.
      for (int ci = 0; ci < count; ++ci) {
        if (ci == a || ci == bi) continue;
        if ((parts[ci] & g.neighbours(ea)) != 0) continue;
        parts[ci] |= VertexMask{1} << ea;
        parts[bi] |= rest;
        parts.erase(parts.begin() + a);
        return "transfer";
      }
    }
  }
  return std::nullopt;
}

FatPartitionTrace find_fat_partition_trace(const Graph& g) {
  const int n = g.order();
  if (9 * g.max_degree() + 3 >= n)
    throw PreconditionViolated("need 9 * max degree + 3 < n, got max degree " + std::to_string(g.max_degree()) +
                               " with n = " + std::to_string(n));
  auto parts = optimal_colouring(g);
  FatPartitionTrace trace;
  trace.start = SetPartition::from_blocks(n, parts);
  Potential pot = potential(parts);
  while (pot.min_size <= 3) {
    auto move = fat_improvement_step(g, parts);
    if (!move) throw Stuck("no improving move with smallest part of size " + std::to_string(pot.min_size));
    Potential next = potential(parts);
    if (!(next.min_size > pot.min_size || (next.min_size == pot.min_size && next.min_count < pot.min_count)))
      throw std::logic_error("move did not improve the potential");
    pot = next;
    trace.steps.push_back({*move, pot.min_size, pot.min_count});
  }
  trace.result = SetPartition::from_blocks(n, parts);
  return trace;
}

SetPartition find_fat_partition(const Graph& g) { return find_fat_partition_trace(g).result; }

bool is_fat_partition(const Graph& g, const SetPartition& p) {
  if (p.order() != g.order() || !p.is_independent_in(g)) return false;
  for (VertexMask b : p.blocks())
    if (std::popcount(b) < 4) return false;
  return p.part_count() == chromatic_number(g);
}

}  // namespace bellrec
