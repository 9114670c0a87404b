#include "bellrec/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bellrec {

namespace {

std::vector<std::uint64_t> edge_words(const UnlabeledGraph& g, const std::vector<int>& label) {
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  std::vector<std::uint64_t> words;
  words.reserve(g.size());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbours(u)) {
      if (v < u) continue;
      std::uint64_t a = static_cast<std::uint64_t>(label[u]);
      std::uint64_t b = static_cast<std::uint64_t>(label[v]);
      if (a > b) std::swap(a, b);
      words.push_back(a * m + b);
    }
  std::sort(words.begin(), words.end());
  return words;
}

CanonicalCode code_under(const UnlabeledGraph& g, const std::vector<int>& label) {
  CanonicalCode c;
  c.words.push_back(static_cast<std::uint64_t>(g.order()));
  c.words.push_back(static_cast<std::uint64_t>(g.size()));
  auto es = edge_words(g, label);
  c.words.insert(c.words.end(), es.begin(), es.end());
  return c;
}

// Individualization-refinement over a connected graph. Colours are dense
// ranks; refinement is equitable-partition iteration keyed on
// (own colour, sorted neighbour colours), which is label-invariant.
class Refiner {
 public:
  explicit Refiner(const UnlabeledGraph& g) : g_(g), m_(g.order()) {}

  std::vector<int> run() {
    std::vector<int> colour(m_, 0);
    refine(colour);
    search(colour);
    return best_label_;
  }

 private:
  int refine(std::vector<int>& colour) {
    int cells = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<int>> sig(m_);
    std::vector<int> idx(m_);
    while (cells < m_) {
      for (int v = 0; v < m_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colour[v]);
        for (int w : g_.neighbours(v)) s.push_back(colour[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < m_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        colour[idx[i]] = rank;
      }
      if (rank + 1 == cells) break;
      cells = rank + 1;
    }
    return cells;
  }

  bool twins(int a, int b) const {
    auto na = g_.neighbours(a);
    auto nb = g_.neighbours(b);
    auto ia = na.begin();
    auto ib = nb.begin();
    while (true) {
      while (ia != na.end() && *ia == b) ++ia;
      while (ib != nb.end() && *ib == a) ++ib;
      if (ia == na.end() || ib == nb.end()) return ia == na.end() && ib == nb.end();
      if (*ia != *ib) return false;
      ++ia;
      ++ib;
    }
  }

  void search(std::vector<int>& colour) {
    std::vector<int> count(m_, 0);
    for (int c : colour) ++count[c];
    int target = -1;
    for (int c = 0; c < m_; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target == -1) {
      leaf(colour);
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < m_; ++v)
      if (colour[v] == target) members.push_back(v);
    bool all_twins = true;
    for (std::size_t i = 1; i < members.size() && all_twins; ++i) all_twins = twins(members[0], members[i]);
    if (all_twins) members.resize(1);

    for (int v : members) {
      std::vector<int> next = colour;
      for (int& c : next)
        if (c > target) ++c;
      for (int w = 0; w < m_; ++w)
        if (colour[w] == target && w != v) next[w] = target + 1;
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& colour) {
    auto words = edge_words(g_, colour);
    if (best_label_.empty() || words > best_words_) {
      best_words_ = std::move(words);
      best_label_ = colour;
    }
  }

  const UnlabeledGraph& g_;
  int m_;
  std::vector<std::uint64_t> best_words_;
  std::vector<int> best_label_;
};

}  // namespace

std::vector<int> canonical_labeling(const UnlabeledGraph& g) {
  const int m = g.order();
  if (m == 0) return {};
  if (m == 1) return {0};

  auto comps = connected_components(g);
  if (comps.size() > 1) {
    struct Piece {
      CanonicalCode code;
      const std::vector<int>* vertices;
      std::vector<int> label;
    };
    std::vector<Piece> pieces;
    pieces.reserve(comps.size());
    for (const auto& comp : comps) {
      auto sub = g.induced(comp);
      auto label = canonical_labeling(sub);
      pieces.push_back({code_under(sub, label), &comp, std::move(label)});
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.code < b.code; });
    std::vector<int> out(m);
    int offset = 0;
    for (const auto& p : pieces) {
      for (std::size_t i = 0; i < p.vertices->size(); ++i) out[(*p.vertices)[i]] = offset + p.label[i];
      offset += static_cast<int>(p.vertices->size());
    }
    return out;
  }

  // Connected with disconnected complement: label the complement instead.
  if (g.size() * 2 > static_cast<std::size_t>(m) * (m - 1) / 2) {
    auto co = g.complement();
    if (connected_components(co).size() > 1) return canonical_labeling(co);
  }

  return Refiner(g).run();
}

CanonicalCode canonical_code(const UnlabeledGraph& g) { return code_under(g, canonical_labeling(g)); }

CanonicalCode canonical_code(const Graph& g) { return canonical_code(UnlabeledGraph::from_graph(g)); }

UnlabeledGraph graph_from_code(const CanonicalCode& code) {
  if (code.words.size() < 2 || code.words.size() != 2 + code.words[1])
    throw std::invalid_argument("malformed canonical code");
  const std::uint64_t m = code.words[0];
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 2; i < code.words.size(); ++i)
    es.emplace_back(static_cast<int>(code.words[i] / m), static_cast<int>(code.words[i] % m));
  return UnlabeledGraph::from_edges(static_cast<int>(m), es);
}

bool is_isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da(a.order()), db(b.order());
  for (int v = 0; v < a.order(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return is_isomorphic(UnlabeledGraph::from_graph(a), UnlabeledGraph::from_graph(b));
}

}  // namespace bellrec
