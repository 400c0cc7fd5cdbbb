#include "jp/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "jp/oracle.hpp"
#include "jp/rng.hpp"
#include "jp/special_bipartition.hpp"

namespace jp {

bool is_good(const Hypergraph3& g, std::span<const int> s) {
  return 5 * degree(g, s) >= 3 * static_cast<long long>(g.num_edges());
}

long long good_degree_target(long long m) { return (3 * m + 4) / 5; }

Certificate verify_good(const Hypergraph3& g, const Tripartition& p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  Certificate c;
  c.part_degrees = part_degrees(g, p);
  c.m = g.num_edges();
  c.threshold_num = 3;
  c.threshold_den = 5;
  c.meets_bound = true;
  for (long long d : c.part_degrees)
    if (5 * d < 3 * c.m) c.meets_bound = false;
  c.semi_optimal = is_semi_optimal(g, p);
  c.locally_optimal = is_locally_optimal(g, p);
  return c;
}

namespace {

SolveOutcome finish(const Hypergraph3& g, Tripartition p, const std::string& method, int restarts,
                    bool exact_search, std::string warning = {}) {
  SolveOutcome o;
  o.certificate = verify_good(g, p);
  o.certificate.method = method;
  o.certificate.exact = exact_search;
  o.partition = std::move(p);
  o.method = method;
  o.restarts_used = restarts;
  o.warning = std::move(warning);
  return o;
}

// Branch-and-bound decision search: find any tripartition with every class
// meeting at least `target` edges. Classes are interchangeable, so vertex
// assignments are canonicalized (first vertex to A, a new class only once the
// previous one is in use). Returns nothing when the search space is exhausted
// or the node budget runs out (`blown` tells the two apart).
struct DecisionSearch {
  const Hypergraph3& g;
  long long target;
  long long budget;

  std::vector<int> order;                   // non-isolated vertices, degree desc
  std::vector<std::array<int, 3>> cnt;      // per edge: assigned vertices per class
  std::vector<int> open;                    // per edge: unassigned vertices
  std::array<long long, 3> met{};           // edges met per class
  std::vector<Part> lab;
  long long nodes = 0;
  bool blown = false;
  std::optional<Tripartition> found;

  DecisionSearch(const Hypergraph3& gg, long long t, long long b) : g(gg), target(t), budget(b) {
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v)
      if (g.vertex_degree(v) > 0) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int c) {
      if (g.vertex_degree(a) != g.vertex_degree(c)) return g.vertex_degree(a) > g.vertex_degree(c);
      return a < c;
    });
    cnt.assign(static_cast<size_t>(g.num_edges()), {0, 0, 0});
    open.assign(static_cast<size_t>(g.num_edges()), 3);
    lab.assign(static_cast<size_t>(n), Part::A);
  }

  void apply(int v, int c, int dir) {
    for (int e : g.incident_edges(v)) {
      auto& ce = cnt[static_cast<size_t>(e)];
      open[static_cast<size_t>(e)] -= dir;
      ce[static_cast<size_t>(c)] += dir;
      if (dir > 0 && ce[static_cast<size_t>(c)] == 1) ++met[static_cast<size_t>(c)];
      if (dir < 0 && ce[static_cast<size_t>(c)] == 0) --met[static_cast<size_t>(c)];
    }
  }

  bool bounds_ok() const {
    std::array<long long, 3> reach = met;
    long long joint = met[0] + met[1] + met[2];
    for (size_t e = 0; e < cnt.size(); ++e) {
      if (open[e] == 0) continue;
      int missing = 0;
      for (int c = 0; c < 3; ++c)
        if (cnt[e][static_cast<size_t>(c)] == 0) {
          ++reach[static_cast<size_t>(c)];
          ++missing;
        }
      joint += std::min(open[e], missing);
    }
    for (long long r : reach)
      if (r < target) return false;
    return joint >= 3 * target;
  }

  void complete(size_t depth) {
    Tripartition p;
    p.label = lab;
    for (size_t i = depth; i < order.size(); ++i)
      p.label[static_cast<size_t>(order[i])] = Part::C;
    found = std::move(p);
  }

  void run(size_t depth, int max_used) {
    if (found || blown) return;
    if (++nodes > budget) {
      blown = true;
      return;
    }
    if (met[0] >= target && met[1] >= target && met[2] >= target) {
      complete(depth);
      return;
    }
    if (depth == order.size()) return;
    if (!bounds_ok()) return;

    // favour the class that is furthest from its quota
    std::array<int, 3> cs{0, 1, 2};
    std::sort(cs.begin(), cs.end(), [&](int a, int b) {
      if (met[static_cast<size_t>(a)] != met[static_cast<size_t>(b)])
        return met[static_cast<size_t>(a)] < met[static_cast<size_t>(b)];
      return a < b;
    });
    const int v = order[depth];
    for (int c : cs) {
      if (c > max_used + 1) continue;
      lab[static_cast<size_t>(v)] = static_cast<Part>(c);
      apply(v, c, 1);
      run(depth + 1, std::max(max_used, c));
      apply(v, c, -1);
      if (found || blown) return;
    }
  }
};

std::optional<Tripartition> decision_search(const Hypergraph3& g, long long target,
                                            long long budget, bool* blown) {
  DecisionSearch s(g, target, budget);
  s.run(0, -1);
  if (blown) *blown = s.blown;
  return s.found;
}

long long min_part_degree(const Certificate& c) {
  return std::min({c.part_degrees[0], c.part_degrees[1], c.part_degrees[2]});
}

// Exhaustive reassignment of a small vertex set S (everything else stays in
// C): maximize the smallest class degree over all 3^|S| label choices.
std::pair<Tripartition, long long> reassign_bounded(const Hypergraph3& g, const Tripartition& p,
                                                    const std::vector<int>& s, long long stop_at) {
  const int k = static_cast<int>(s.size());
  std::vector<int> pos(static_cast<size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<size_t>(s[static_cast<size_t>(i)])] = i;

  long long base_c = 0;
  long long inside = 0;  // edges entirely within S
  std::map<std::pair<unsigned, bool>, long long> groups;
  for (const auto& e : g.edges()) {
    unsigned mask = 0;
    int out = 0;
    for (int v : e) {
      if (pos[static_cast<size_t>(v)] >= 0)
        mask |= 1u << pos[static_cast<size_t>(v)];
      else
        ++out;
    }
    if (mask == 0) {
      ++base_c;
      continue;
    }
    if (out == 0) ++inside;
    ++groups[{mask, out > 0}];
  }
  if (inside > 84) throw std::logic_error("more than 84 edges avoid the fixed class");

  std::vector<int> digits(static_cast<size_t>(k), 0);
  std::vector<int> best_digits = digits;
  long long best_min = -1;
  for (;;) {
    unsigned cmask[3] = {0, 0, 0};
    for (int i = 0; i < k; ++i)
      cmask[digits[static_cast<size_t>(i)]] |= 1u << i;
    std::array<long long, 3> d{0, 0, base_c};
    for (const auto& [key, count] : groups) {
      const auto [mask, has_out] = key;
      if (mask & cmask[0]) d[0] += count;
      if (mask & cmask[1]) d[1] += count;
      if (has_out || (mask & cmask[2])) d[2] += count;
    }
    const long long mn = std::min({d[0], d[1], d[2]});
    if (mn > best_min) {
      best_min = mn;
      best_digits = digits;
      if (best_min >= stop_at) break;
    }
    int i = 0;
    while (i < k && digits[static_cast<size_t>(i)] == 2) {
      digits[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
    ++digits[static_cast<size_t>(i)];
  }

  Tripartition q = p;
  for (int i = 0; i < k; ++i)
    q.label[static_cast<size_t>(s[static_cast<size_t>(i)])] =
        static_cast<Part>(best_digits[static_cast<size_t>(i)]);
  return {std::move(q), best_min};
}

}  // namespace

std::optional<SolveOutcome> max_degree_path(const Hypergraph3& g, const SearchConfig& cfg) {
  const long long m = g.num_edges();
  const int n = g.num_vertices();

  // Greedy set A that no edge meets twice: vertices by descending degree,
  // skipping anything sharing an edge with the current A. Disjoint incident
  // edge sets make d(A) the plain degree sum.
  std::vector<int> by_degree;
  for (int v = 0; v < n; ++v)
    if (g.vertex_degree(v) > 0) by_degree.push_back(v);
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (g.vertex_degree(a) != g.vertex_degree(b)) return g.vertex_degree(a) > g.vertex_degree(b);
    return a < b;
  });

  std::vector<char> in_a(static_cast<size_t>(n), 0);
  std::vector<char> blocked(static_cast<size_t>(n), 0);
  std::vector<int> a;
  long long da = 0;
  for (int v : by_degree) {
    if (5 * da >= 3 * m) break;
    if (blocked[static_cast<size_t>(v)]) continue;
    in_a[static_cast<size_t>(v)] = 1;
    a.push_back(v);
    da += g.vertex_degree(v);
    for (int e : g.incident_edges(v))
      for (int u : g.edge(e)) blocked[static_cast<size_t>(u)] = 1;
  }
  if (5 * da < 3 * m) return std::nullopt;

  // Shrink every edge to a pair avoiding A and split those pairs so both
  // sides meet at least 2m/3 - 1/2 of them.
  std::vector<MultiEdge> pairs;
  pairs.reserve(static_cast<size_t>(m));
  for (const auto& e : g.edges()) {
    MultiEdge me;
    me.arity = 0;
    for (int v : e)
      if (!in_a[static_cast<size_t>(v)] && me.arity < 2) me.v[static_cast<size_t>(me.arity++)] = v;
    me.multiplicity = 1;
    pairs.push_back(me);
  }
  const MultiHypergraph h(n, std::move(pairs));
  const MeetingResult mr = bipartition_hypergraph_meeting(h, cfg);

  Tripartition p;
  p.label.assign(static_cast<size_t>(n), Part::A);
  for (int v = 0; v < n; ++v)
    if (!in_a[static_cast<size_t>(v)])
      p.label[static_cast<size_t>(v)] =
          mr.bipartition.side[static_cast<size_t>(v)] == 0 ? Part::B : Part::C;

  if (!verify_good(g, p).meets_bound) return std::nullopt;
  return finish(g, std::move(p), "max-degree-path", 0, false);
}

std::optional<SolveOutcome> two_high_degree_path(const Hypergraph3& g, const SearchConfig&) {
  const long long m = g.num_edges();
  if (m < 10) return std::nullopt;
  const int n = g.num_vertices();
  const long long want = good_degree_target(m) - 1;

  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (g.vertex_degree(v) >= want) cand.push_back(v);
  if (cand.size() < 2) return std::nullopt;
  std::sort(cand.begin(), cand.end(), [&](int x, int y) {
    if (g.vertex_degree(x) != g.vertex_degree(y)) return g.vertex_degree(x) > g.vertex_degree(y);
    return x < y;
  });
  const int a = cand[0];
  const int b = cand[1];

  const auto pick = [&](int missing, int skip1, int skip2) -> int {
    for (const auto& e : g.edges()) {
      if (e[0] == missing || e[1] == missing || e[2] == missing) continue;
      int best = -1;
      for (int v : e)
        if (v != skip1 && v != skip2 && (best == -1 || v < best)) best = v;
      return best;  // an edge of three distinct vertices always leaves one
    }
    return -1;
  };
  const int c = pick(a, b, b);
  if (c < 0) return std::nullopt;
  const int d = pick(b, a, c);
  if (d < 0) return std::nullopt;

  Tripartition p;
  p.label.assign(static_cast<size_t>(n), Part::C);
  p.label[static_cast<size_t>(a)] = Part::A;
  p.label[static_cast<size_t>(c)] = Part::A;
  p.label[static_cast<size_t>(b)] = Part::B;
  p.label[static_cast<size_t>(d)] = Part::B;

  if (!verify_good(g, p).meets_bound) return std::nullopt;
  return finish(g, std::move(p), "two-degree-path", 0, false);
}

SolveOutcome solve(const Hypergraph3& g, const SearchConfig& cfg, long long eps_num,
                   long long eps_den) {
  const long long m = g.num_edges();
  if (m < 1) throw std::invalid_argument("solve requires at least one edge");
  const int n = g.num_vertices();
  const long long t = good_degree_target(m);

  Tripartition best_seen;
  long long best_seen_min = -1;
  const auto consider = [&](const Tripartition& p) {
    const long long mn = min_part_degree(verify_good(g, p));
    if (mn > best_seen_min) {
      best_seen_min = mn;
      best_seen = p;
    }
  };

  // (1) exact search while the assignment space (or the edge count) is small
  bool pow_fits = true;
  {
    long long pw = 1;
    for (int i = 0; i < n && pow_fits; ++i) {
      pw *= 3;
      if (pw > cfg.exact_cap) pow_fits = false;
    }
  }
  if (pow_fits) {
    auto [p, obj] = best_tripartition(g, cfg.exact_cap);
    (void)obj;
    return finish(g, std::move(p), "exact", 0, true);
  }
  if (m <= 24) {
    bool blown = false;
    if (auto p = decision_search(g, t, cfg.exact_cap, &blown))
      return finish(g, std::move(*p), "exact", 0, true);
    // exhausting the space contradicts the bound's existence guarantee;
    // either way the general machinery below still applies
  }

  // (2) + (3) linear-time constructions from high degrees
  if (auto o = max_degree_path(g, cfg)) return *o;
  if (auto o = two_high_degree_path(g, cfg)) return *o;

  // (4) + (5) engine rounds with escalating restarts
  int restarts_total = 0;
  consider(hill_climb(g, random_partition(g, cfg.seed), cfg));
  for (int round = 0; round < 4; ++round) {
    SearchConfig ecfg = cfg;
    for (int i = 0; i < round; ++i) ecfg.max_restarts *= 4;
    if (round > 0) ecfg.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(4096 + round));

    auto eng = engine_partition(g, eps_num, eps_den, ecfg);
    restarts_total += eng ? eng->restarts_used : ecfg.max_restarts;
    if (!eng) continue;

    consider(eng->partition);
    if (verify_good(g, eng->partition).meets_bound)
      return finish(g, std::move(eng->partition), "engine-good", restarts_total, false);
    if (eng->three_good) continue;  // above threshold but not at 3/5: retry

    // discrete certificates the reduced partition must satisfy before the
    // continuations may run
    const auto& d = eng->degrees;
    if (d[0] + d[1] + d[2] < 4 * m - 3 * (t - 1)) continue;
    if (d[0] + d[1] < 4 * m - 4 * (t - 1)) continue;

    const auto sizes = eng->partition.part_sizes();
    if (std::min(sizes[0], sizes[1]) >= 1 && std::min(sizes[0], sizes[1]) <= 2) {
      // restrict away the smaller of A, B and split the rest by the meeting
      // bound on the shrunken hypergraph
      const Part small = sizes[0] <= sizes[1] ? Part::A : Part::B;
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (eng->partition.label[static_cast<size_t>(v)] != small) keep.push_back(v);
      const MultiHypergraph h = restrict_to(g, keep);
      const MeetingResult mr = bipartition_hypergraph_meeting(h, cfg);
      Tripartition q;
      q.label.assign(static_cast<size_t>(n), Part::A);
      for (int v : keep)
        q.label[static_cast<size_t>(v)] =
            mr.bipartition.side[static_cast<size_t>(v)] == 0 ? Part::B : Part::C;
      consider(q);
      if (verify_good(g, q).meets_bound)
        return finish(g, std::move(q), "engine-restrict", restarts_total, false);
    }

    if (sizes[0] + sizes[1] >= 1 && sizes[0] + sizes[1] <= 9) {
      // both survivors are tiny: exhaust all reassignments of A ∪ B
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (eng->partition.label[static_cast<size_t>(v)] != Part::C) s.push_back(v);
      auto [q, mn] = reassign_bounded(g, eng->partition, s, t);
      consider(q);
      if (mn >= t && verify_good(g, q).meets_bound)
        return finish(g, std::move(q), "engine-bounded", restarts_total, false);
    }
  }

  // (5b) exact decision fallback
  {
    bool blown = false;
    if (auto p = decision_search(g, t, cfg.exact_cap, &blown))
      return finish(g, std::move(*p), "restart-exact-fallback", restarts_total, true);
    std::string why = blown ? "exact fallback exceeded its node budget"
                            : "exact fallback exhausted the search space";
    return finish(g, std::move(best_seen), "restart-exact-fallback", restarts_total, false,
                  "could not certify the 3m/5 bound: " + why +
                      "; returning the best partition found");
  }
}

}  // namespace jp
