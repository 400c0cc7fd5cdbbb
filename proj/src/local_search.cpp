#include "jp/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "jp/rng.hpp"

namespace jp {

namespace {

int distinct_labels(Part a, Part b, Part c) {
  return 1 + (b != a) + (c != a && c != b);
}

void require_matching(const Hypergraph3& g, const Tripartition& p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
}

// den*d >= num*m, the generic threshold test used throughout.
bool above(long long d, long long num, long long den, long long m) {
  return den * d >= num * m;
}

std::vector<int> scan_order(int n, const SearchConfig& cfg) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (cfg.scan_order == SearchConfig::ScanOrder::shuffled) {
    std::mt19937_64 rng(cfg.seed);
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }
  }
  return order;
}

}  // namespace

MoveDelta move_gain(const Hypergraph3& g, const Tripartition& p, int v, Part target) {
  require_matching(g, p);
  if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
  const Part from = p.label[static_cast<size_t>(v)];
  if (target == from) throw std::invalid_argument("move target equals current class");
  long long delta = 0;
  for (int e : g.incident_edges(v)) {
    const auto& t = g.edge(e);
    Part other[2];
    int j = 0;
    for (int u : t)
      if (u != v) other[j++] = p.label[static_cast<size_t>(u)];
    delta += distinct_labels(target, other[0], other[1]) -
             distinct_labels(from, other[0], other[1]);
  }
  return {v, from, target, delta};
}

Tripartition hill_climb(const Hypergraph3& g, Tripartition p, const SearchConfig& cfg) {
  require_matching(g, p);
  const auto order = scan_order(g.num_vertices(), cfg);
  for (;;) {
    bool improved = false;
    for (int v : order) {
      const Part from = p.label[static_cast<size_t>(v)];
      for (Part t : all_parts) {
        if (t == from) continue;
        if (move_gain(g, p, v, t).delta > 0) {
          p.label[static_cast<size_t>(v)] = t;
          improved = true;
          break;
        }
      }
      if (improved) break;  // restart the scan after every accepted move
    }
    if (!improved) return p;
  }
}

Tripartition random_partition(const Hypergraph3& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tripartition p;
  p.label.resize(static_cast<size_t>(g.num_vertices()));
  for (auto& l : p.label) l = static_cast<Part>(bounded(rng, 3));
  return p;
}

bool is_semi_optimal(const Hypergraph3& g, const Tripartition& p) {
  require_matching(g, p);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (p.label[static_cast<size_t>(v)] != Part::C && move_gain(g, p, v, Part::C).delta > 0)
      return false;
  return true;
}

bool is_locally_optimal(const Hypergraph3& g, const Tripartition& p) {
  require_matching(g, p);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (Part t : all_parts) {
      if (t == p.label[static_cast<size_t>(v)]) continue;
      if (move_gain(g, p, v, t).delta > 0) return false;
    }
  return true;
}

SemiOptimalityBounds check_semioptimal_inequalities(const Hypergraph3& g, const Tripartition& p) {
  const auto c = cross_counts(g, p);
  const auto sig = [](Part x, Part y, Part z) { return static_cast<size_t>(signature_index(x, y, z)); };
  SemiOptimalityBounds b;
  b.lhs_a = 3 * c[sig(Part::A, Part::A, Part::A)] + 2 * c[sig(Part::A, Part::A, Part::B)];
  b.rhs_a = c[sig(Part::A, Part::B, Part::C)] + c[sig(Part::A, Part::C, Part::C)];
  b.lhs_b = 3 * c[sig(Part::B, Part::B, Part::B)] + 2 * c[sig(Part::A, Part::B, Part::B)];
  b.rhs_b = c[sig(Part::A, Part::B, Part::C)] + c[sig(Part::B, Part::C, Part::C)];
  b.holds = b.lhs_a <= b.rhs_a && b.lhs_b <= b.rhs_b;
  return b;
}

Tripartition move_into_c(const Hypergraph3& g, const Tripartition& p, std::span<const int> vs) {
  require_matching(g, p);
  if (!is_semi_optimal(g, p))
    throw std::invalid_argument("move_into_c requires a semi-optimal partition");
  Tripartition q = p;
  for (int v : vs) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
    if (q.label[static_cast<size_t>(v)] == Part::C)
      throw std::invalid_argument("move_into_c expects vertices outside C");
    q.label[static_cast<size_t>(v)] = Part::C;
  }
  assert(is_semi_optimal(g, q));
  return q;
}

std::vector<int> minimal_good_subset(const Hypergraph3& g, std::vector<int> s, long long num,
                                     long long den) {
  if (num < 0 || den <= 0) throw std::invalid_argument("threshold must be a nonnegative rational");
  const long long m = g.num_edges();
  long long d = degree(g, s);
  if (!above(d, num, den, m)) throw std::invalid_argument("set is below the threshold");

  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (;;) {
    // Drop the vertex with the largest private degree whose removal keeps the
    // set above the threshold; that shrinks d(S) as fast as possible. Ties go
    // to the smallest id (scan order below).
    int pick = -1;
    long long pick_pd = -1;
    for (size_t i = 0; i < s.size(); ++i) {
      const long long pd = private_degree(g, s[i], s);
      if (above(d - pd, num, den, m) && pd > pick_pd) {
        pick = static_cast<int>(i);
        pick_pd = pd;
      }
    }
    if (pick < 0) return s;
    d -= pick_pd;
    s.erase(s.begin() + pick);
  }
}

std::optional<EngineOutcome> engine_partition(const Hypergraph3& g, long long eps_num,
                                              long long eps_den, const SearchConfig& cfg) {
  if (eps_num <= 0 || eps_den <= 0) throw std::invalid_argument("eps must be positive");
  if (15 * eps_num < eps_den) throw std::invalid_argument("eps must be at least 1/15");
  if (3 * eps_num >= 2 * eps_den) throw std::invalid_argument("eps must be below 2/3");
  if (cfg.max_restarts < 1) throw std::invalid_argument("max_restarts must be positive");

  const long long m = g.num_edges();
  // Class S is eps-good when d(S) >= (2/3 - eps) m, i.e. 3q d >= (2q - 3p) m.
  const long long good_num = 2 * eps_den - 3 * eps_num;
  const long long good_den = 3 * eps_den;
  const auto eps_good = [&](long long d) { return above(d, good_num, good_den, m); };

  Tripartition best;
  long long best_td = -1;
  for (int r = 0; r < cfg.max_restarts; ++r) {
    Tripartition p = hill_climb(g, random_partition(g, mix_seed(cfg.seed, static_cast<std::uint64_t>(r))), cfg);
    const auto d = part_degrees(g, p);
    if (eps_good(d[0]) && eps_good(d[1]) && eps_good(d[2]))
      return EngineOutcome{true, std::move(p), d, r + 1};
    const long long td = d[0] + d[1] + d[2];
    if (td > best_td) {
      best_td = td;
      best = std::move(p);
    }
  }

  // Relabel the best local optimum so C has the smallest degree (ties prefer
  // keeping C, then B); the other two classes keep their relative order.
  {
    const auto d = part_degrees(g, best);
    int cpos = 2;
    for (int i = 1; i >= 0; --i)
      if (d[static_cast<size_t>(i)] < d[static_cast<size_t>(cpos)]) cpos = i;
    if (cpos != 2) {
      std::array<Part, 3> relabel{};
      Part next = Part::A;
      for (int i = 0; i < 3; ++i) {
        if (i == cpos) {
          relabel[static_cast<size_t>(i)] = Part::C;
        } else {
          relabel[static_cast<size_t>(i)] = next;
          next = static_cast<Part>(static_cast<int>(next) + 1);
        }
      }
      for (auto& l : best.label) l = relabel[static_cast<size_t>(l)];
    }
  }

  const auto da = degree(g, best.part_vertices(Part::A));
  const auto db = degree(g, best.part_vertices(Part::B));
  if (!eps_good(da) || !eps_good(db)) return std::nullopt;

  const auto a_min = minimal_good_subset(g, best.part_vertices(Part::A), good_num, good_den);
  const auto b_min = minimal_good_subset(g, best.part_vertices(Part::B), good_num, good_den);
  std::vector<int> moved;
  for (int v : best.part_vertices(Part::A))
    if (!std::binary_search(a_min.begin(), a_min.end(), v)) moved.push_back(v);
  for (int v : best.part_vertices(Part::B))
    if (!std::binary_search(b_min.begin(), b_min.end(), v)) moved.push_back(v);

  Tripartition reduced = move_into_c(g, best, moved);
  const auto d = part_degrees(g, reduced);
  // Certify d(A)+d(B)+d(C) > (2 + 3 eps) m, strictly.
  if (eps_den * (d[0] + d[1] + d[2]) <= (2 * eps_den + 3 * eps_num) * m) return std::nullopt;
  return EngineOutcome{false, std::move(reduced), d, cfg.max_restarts};
}

}  // namespace jp
