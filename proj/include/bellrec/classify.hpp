#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellrec/canonical.hpp"
#include "bellrec/graph.hpp"

namespace bellrec {

struct Classification {
  bool equivalent = false;
  std::vector<int> conditions;  // satisfied conditions, 1..8 ascending
};

/// Decides whether B_{>=k1}(g1) and B_{>=k2}(g2) are isomorphic from the
/// eight structural conditions, without building either graph (except to
/// count vertices for condition 6). Requires k1, k2 >= 1.
Classification classify_pair(const Graph& g1, int k1, const Graph& g2, int k2);

/// Canonical codes of upper-Bell graphs, keyed by (host class, k). Safe to
/// share between threads.
class BellCodeCache {
 public:
  const CanonicalCode& code(const Graph& g, int k);
  std::size_t size() const;

 private:
  struct Key {
    CanonicalCode host;
    int k;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
      return std::hash<CanonicalCode>{}(key.host) * 31 + static_cast<std::size_t>(key.k);
    }
  };
  mutable std::mutex mutex_;
  std::unordered_map<Key, CanonicalCode, KeyHash> codes_;
};

/// Ground truth: builds both upper-Bell graphs and compares canonical codes.
/// Uses an internal process-wide cache unless one is passed.
bool oracle_isomorphic(const Graph& g1, int k1, const Graph& g2, int k2, BellCodeCache* cache = nullptr);

std::string classification_json(const Classification& c, const bool* oracle = nullptr);

}  // namespace bellrec
