#include "bellrec/partitions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace bellrec {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  if (labels.size() > static_cast<std::size_t>(Graph::kMaxVertices))
    throw InvalidPartition("partition exceeds 64 vertices");
  SetPartition p;
  p.labels_.resize(labels.size());
  std::vector<int> seen_label;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find(seen_label.begin(), seen_label.end(), labels[v]);
    int idx;
    if (it == seen_label.end()) {
      idx = static_cast<int>(seen_label.size());
      seen_label.push_back(labels[v]);
      p.blocks_.push_back(0);
    } else {
      idx = static_cast<int>(it - seen_label.begin());
    }
    p.labels_[v] = static_cast<std::uint8_t>(idx);
    p.blocks_[idx] |= bit(static_cast<int>(v));
  }
  return p;
}

SetPartition SetPartition::from_blocks(int n, std::span<const VertexMask> blocks) {
  if (n < 0 || n > Graph::kMaxVertices) throw InvalidPartition("partition order must lie in [0, 64]");
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  std::vector<int> labels(n, -1);
  VertexMask covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0) throw InvalidPartition("empty block");
    if ((blocks[i] & ~all) != 0) throw InvalidPartition("block contains a vertex outside the host");
    if ((covered & blocks[i]) != 0) throw InvalidPartition("blocks overlap");
    covered |= blocks[i];
    for (int v = 0; v < n; ++v)
      if ((blocks[i] >> v) & 1U) labels[v] = static_cast<int>(i);
  }
  if (covered != all) throw InvalidPartition("blocks do not cover every vertex");
  return from_labels(labels);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v;
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text, int n) {
  std::vector<VertexMask> blocks;
  int largest = -1;
  std::size_t start = 0;
  if (!text.empty()) {
    while (start <= text.size()) {
      std::size_t bar = text.find('|', start);
      if (bar == std::string_view::npos) bar = text.size();
      std::string_view part = text.substr(start, bar - start);
      VertexMask mask = 0;
      std::size_t s = 0;
      while (s <= part.size()) {
        std::size_t comma = part.find(',', s);
        if (comma == std::string_view::npos) comma = part.size();
        std::string_view tok = part.substr(s, comma - s);
        int v = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v >= Graph::kMaxVertices)
          throw InvalidPartition("bad vertex token '" + std::string(tok) + "'");
        if ((mask >> v) & 1U) throw InvalidPartition("vertex repeated in a block");
        mask |= bit(v);
        largest = std::max(largest, v);
        s = comma + 1;
      }
      blocks.push_back(mask);
      start = bar + 1;
    }
  }
  if (n < 0) n = largest + 1;
  return from_blocks(n, blocks);
}

bool SetPartition::is_independent_in(const Graph& g) const {
  if (g.order() != order()) return false;
  for (int v = 0; v < order(); ++v)
    if ((g.neighbours(v) & blocks_[labels_[v]]) != 0) return false;
  return true;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out.push_back('|');
    bool first = true;
    for (int v = 0; v < order(); ++v)
      if ((blocks_[b] >> v) & 1U) {
        if (!first) out.push_back(',');
        out += std::to_string(v);
        first = false;
      }
  }
  return out;
}

void validate_partition(const Graph& g, const SetPartition& p) {
  if (g.order() != p.order()) throw InvalidPartition("partition and host graph have different orders");
  if (!p.is_independent_in(g)) throw InvalidPartition("partition has a block that is not independent");
}

namespace {

// Restricted-growth enumeration with independence and part-count pruning.
template <class Emit>
class PartitionWalker {
 public:
  PartitionWalker(const Graph& g, int min_parts, int max_parts, std::size_t cap, Emit emit)
      : g_(g), n_(g.order()), lo_(min_parts), hi_(max_parts), cap_(cap), emit_(emit), labels_(n_) {}

  void run() {
    if (lo_ > hi_ || hi_ < 0) return;
    if (n_ == 0) {
      if (lo_ <= 0) produce();
      return;
    }
    blocks_.reserve(n_);
    walk(0);
  }

 private:
  void produce() {
    if (++produced_ > cap_)
      throw PartitionCapExceeded("partition enumeration exceeded the cap of " + std::to_string(cap_));
    emit_(labels_);
  }

  void walk(int v) {
    const int used = static_cast<int>(blocks_.size());
    const int remaining = n_ - v - 1;
    for (int c = 0; c <= used; ++c) {
      int parts = c == used ? used + 1 : used;
      if (parts > hi_ || parts + remaining < lo_) continue;
      if (c < used && (g_.neighbours(v) & blocks_[c]) != 0) continue;
      if (c == used) blocks_.push_back(0);
      blocks_[c] |= bit(v);
      labels_[v] = c;
      if (v + 1 == n_) produce();
      else walk(v + 1);
      blocks_[c] &= ~bit(v);
      if (c == used) blocks_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  int lo_;
  int hi_;
  std::size_t cap_;
  Emit emit_;
  std::vector<int> labels_;
  std::vector<VertexMask> blocks_;
  std::size_t produced_ = 0;
};

}  // namespace

std::vector<SetPartition> enumerate_partitions(const Graph& g, int min_parts, int max_parts, std::size_t cap) {
  std::vector<SetPartition> out;
  auto emit = [&out](const std::vector<int>& labels) { out.push_back(SetPartition::from_labels(labels)); };
  PartitionWalker<decltype(emit)>(g, min_parts, max_parts, cap, emit).run();
  return out;
}

std::size_t count_partitions(const Graph& g, int min_parts, int max_parts, std::size_t cap) {
  std::size_t count = 0;
  auto emit = [&count](const std::vector<int>&) { ++count; };
  PartitionWalker<decltype(emit)>(g, min_parts, max_parts, cap, emit).run();
  return count;
}

VertexMask moved_vertices(const SetPartition& p, const SetPartition& q) {
  if (p.order() != q.order()) throw std::invalid_argument("partitions over different vertex sets");
  if (p == q) return 0;
  const int n = p.order();
  VertexMask candidates = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  // x works iff every other vertex y keeps its block up to x itself.
  for (int y = 0; y < n && candidates != 0; ++y) {
    VertexMask diff = p.block_containing(y) ^ q.block_containing(y);
    if (diff == 0) continue;
    VertexMask allowed = bit(y);
    if (std::popcount(diff) == 1) allowed |= diff;
    candidates &= allowed;
  }
  return candidates;
}

bool are_adjacent(const SetPartition& p, const SetPartition& q) { return moved_vertices(p, q) != 0; }

SetPartition move_vertex(const SetPartition& p, int v, int target) {
  std::vector<int> labels(p.labels().begin(), p.labels().end());
  labels[v] = target;
  return SetPartition::from_labels(labels);
}

std::vector<SetPartition> neighbors_of(const Graph& g, const SetPartition& p, int min_parts, int max_parts) {
  validate_partition(g, p);
  std::vector<SetPartition> out;
  const int parts = p.part_count();
  for (int v = 0; v < g.order(); ++v) {
    const int own = p.block_of(v);
    const bool alone = p.block(own) == bit(v);
    for (int t = 0; t <= parts; ++t) {
      if (t == own) continue;
      int new_parts = parts;
      if (t == parts) {
        if (alone) continue;
        new_parts = parts + 1;
      } else {
        if ((g.neighbours(v) & p.block(t)) != 0) continue;
        if (alone) new_parts = parts - 1;
      }
      if (new_parts < min_parts || new_parts > max_parts) continue;
      out.push_back(move_vertex(p, v, t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> bell_numbers(int n) {
  if (n < 0 || n > 25) throw std::out_of_range("bell_numbers supports 0..25");
  std::vector<std::uint64_t> out{1};
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    out.push_back(next.front());
    row = std::move(next);
  }
  return out;
}

}  // namespace bellrec
