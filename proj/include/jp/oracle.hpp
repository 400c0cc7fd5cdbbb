#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jp/hypergraph.hpp"

namespace jp {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleReport {
  std::string instance;
  long long objective = 0;
  std::vector<std::vector<int>> witness_parts;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> failures;  // capped; see failure_count for the total
  std::uint64_t failure_count = 0;
};

// Exact maximum over all 3^n assignments of the minimum part degree
// (vertex 0 pinned to class A; classes are unordered). Throws BudgetExceeded
// when 3^n > budget.
std::pair<Tripartition, long long> best_tripartition(const Hypergraph3& g,
                                                     long long budget = 10'000'000);

// Exact minimum over all 2^n bipartitions of max_i (e(V_i) + f(V_i)).
// Throws BudgetExceeded when 2^n > budget.
std::pair<Bipartition, long long> best_bipartition_special(const SpecialMultigraph& sm,
                                                           long long budget = 10'000'000);

// Visit every hypergraph with a nonempty edge set on vertex set {0..n-1}
// (n <= 6), i.e. every nonempty subset of the n-choose-3 triples in
// lexicographic order; the mask identifies the subset. The visitor returns
// pass/fail; failures are aggregated into the report.
OracleReport enumerate_hypergraphs(
    int n, const std::function<bool(const Hypergraph3&, std::uint64_t mask)>& visitor);

// For every hypergraph on n vertices check 5*best >= 3m (and the weaker
// 9*best >= 5m) where best is the exact max-min part degree. threads = 0
// picks the hardware default.
OracleReport exhaustive_theorem_check(int n, int threads = 0);

}  // namespace jp
