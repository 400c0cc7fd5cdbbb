#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "jp/hypergraph.hpp"

namespace jp {

struct MoveDelta {
  int vertex = -1;
  Part from = Part::A;
  Part to = Part::A;
  long long delta = 0;  // change of triple_degree if the move is applied
};

struct SearchConfig {
  int max_restarts = 24;
  std::uint64_t seed = 0;
  enum class ScanOrder { ascending_id, shuffled } scan_order = ScanOrder::ascending_id;
  long long exact_cap = 10'000'000;  // max assignments an exact enumeration may visit
};

// Effect of moving v to `target` on d(A)+d(B)+d(C), computed from v's
// incident edges only. Requires target != current class.
MoveDelta move_gain(const Hypergraph3& g, const Tripartition& p, int v, Part target);

// First-improvement ascent on triple_degree: scan vertices in fixed order
// (ascending id unless cfg says shuffled), targets in order A,B,C, take the
// first strictly improving move and rescan. Plateau moves are never taken,
// so the result is deterministic and locally optimal.
Tripartition hill_climb(const Hypergraph3& g, Tripartition p, const SearchConfig& cfg = {});

// Uniform class per vertex. E[triple_degree] = (19/9) m.
Tripartition random_partition(const Hypergraph3& g, std::uint64_t seed);

// No single move into C strictly increases triple_degree.
bool is_semi_optimal(const Hypergraph3& g, const Tripartition& p);

// No single move at all strictly increases triple_degree.
bool is_locally_optimal(const Hypergraph3& g, const Tripartition& p);

// Aggregate inequalities every semi-optimal partition satisfies:
//   3 e(AAA) + 2 e(AAB) <= e(ABC) + e(ACC)
//   3 e(BBB) + 2 e(ABB) <= e(ABC) + e(BCC)
struct SemiOptimalityBounds {
  long long lhs_a = 0, rhs_a = 0;
  long long lhs_b = 0, rhs_b = 0;
  bool holds = false;
};
SemiOptimalityBounds check_semioptimal_inequalities(const Hypergraph3& g, const Tripartition& p);

// Move the listed A/B vertices into C. Requires p semi-optimal (checked,
// reported via std::invalid_argument) and vs disjoint from C; the result is
// semi-optimal again.
Tripartition move_into_c(const Hypergraph3& g, const Tripartition& p, std::span<const int> vs);

// Shrink s to a subset that still satisfies den*d(S) >= num*m but none of
// whose proper subsets does. Greedy: among vertices whose removal keeps the
// bound, repeatedly drop one with the largest private degree (smallest
// resulting d(S)), ties by smallest id.
std::vector<int> minimal_good_subset(const Hypergraph3& g, std::vector<int> s, long long num,
                                     long long den);

// Restarted local search at threshold (2/3 - eps). Either some restart's
// local optimum has all three classes above the threshold (three_good), or
// the best local optimum is reduced to two minimal above-threshold classes
// A, B with everything else moved into C, certified by
// d(A)+d(B)+d(C) > (2+3 eps) m. Returns nullopt when that certificate (or an
// intermediate requirement) fails, in which case the caller escalates.
// Requires 1/15 <= eps < 2/3 as a rational eps_num/eps_den.
struct EngineOutcome {
  bool three_good = false;
  Tripartition partition;
  std::array<long long, 3> degrees{};
  int restarts_used = 0;
};
std::optional<EngineOutcome> engine_partition(const Hypergraph3& g, long long eps_num,
                                              long long eps_den, const SearchConfig& cfg = {});

}  // namespace jp
