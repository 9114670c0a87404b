#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bellrec {

/// One checked work item. Exploratory items are reported but never fail a suite.
struct CheckResult {
  std::string graph6;
  int k = 0;  // 0 when the check has no k
  int seed = 0;
  bool pass = false;
  bool gating = true;
  std::string detail;  // reproduction payload on failure
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  int seeds = 0;
  int hosts = 0;
  int hosts_passed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  int checks_passed() const;
};

std::vector<std::string> suite_names();

/// Runs one named suite over every graph class on 1..n_max vertices. Throws
/// std::invalid_argument for unknown names or negative arguments and
/// CapExceeded above the suite's order cap. Deterministic.
SuiteReport run_suite(const std::string& suite, int n_max, int seeds);

std::string suite_report_json(const SuiteReport& r);

struct ConjectureCase {
  std::string g1, g2;
  int k1 = 0, k2 = 0;
  bool isomorphic = false;
  bool predicted = false;
};

struct SearchReport {
  int n_max = 0;
  long pairs = 0;
  long agreements = 0;
  std::vector<ConjectureCase> counterexamples;
};

inline constexpr int kConjectureMaxOrder = 6;

/// Compares isomorphism of B_{k1}(g1), B_{k2}(g2) with the conjectured
/// criterion over all hosts on 1..n_max vertices with chi < k <= max(n, chi+1)
/// (larger k give the same graph as k = n). Throws CapExceeded for n_max > 6.
SearchReport conjecture_search(int n_max);

std::string search_report_json(const SearchReport& r);

}  // namespace bellrec
