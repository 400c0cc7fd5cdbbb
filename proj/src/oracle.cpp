#include "jp/oracle.hpp"

#include <algorithm>
#include <thread>

namespace jp {

namespace {

// Digit order for the incremental counters: vertices by ascending degree so
// the heaviest vertices change least often. Vertex `pinned` is excluded.
std::vector<int> enumeration_order(const Hypergraph3& g, int pinned) {
  std::vector<int> order;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != pinned) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.vertex_degree(a) < g.vertex_degree(b); });
  return order;
}

long long checked_power(long long base, int exp, long long budget) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) {
    p *= base;
    if (p > budget) throw BudgetExceeded("assignment space exceeds the enumeration budget");
  }
  return p;
}

}  // namespace

std::pair<Tripartition, long long> best_tripartition(const Hypergraph3& g, long long budget) {
  const int n = g.num_vertices();
  if (n == 0) return {Tripartition{}, 0};
  checked_power(3, n, budget);
  // vertex 0 stays pinned to A (classes are unordered), so only 3^(n-1)
  // assignments are actually visited

  const auto order = enumeration_order(g, 0);
  const int k = static_cast<int>(order.size());
  const int m = g.num_edges();

  std::vector<std::array<int, 3>> cnt(static_cast<size_t>(m), {0, 0, 0});
  std::array<long long, 3> d{};
  Tripartition cur;
  cur.label.assign(static_cast<size_t>(n), Part::A);
  const auto assign = [&](int v, int c, int dir) {
    for (int e : g.incident_edges(v)) {
      auto& ce = cnt[static_cast<size_t>(e)];
      ce[static_cast<size_t>(c)] += dir;
      if (dir > 0 && ce[static_cast<size_t>(c)] == 1) ++d[static_cast<size_t>(c)];
      if (dir < 0 && ce[static_cast<size_t>(c)] == 0) --d[static_cast<size_t>(c)];
    }
  };
  for (int v = 0; v < n; ++v) assign(v, 0, 1);

  Tripartition best = cur;
  long long best_min = std::min({d[0], d[1], d[2]});
  std::vector<int> digit(static_cast<size_t>(k), 0);
  for (;;) {
    // ripple the base-3 counter over `order`
    int i = 0;
    while (i < k && digit[static_cast<size_t>(i)] == 2) {
      assign(order[static_cast<size_t>(i)], 2, -1);
      assign(order[static_cast<size_t>(i)], 0, 1);
      cur.label[static_cast<size_t>(order[static_cast<size_t>(i)])] = Part::A;
      digit[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
    const int v = order[static_cast<size_t>(i)];
    const int from = digit[static_cast<size_t>(i)]++;
    assign(v, from, -1);
    assign(v, from + 1, 1);
    cur.label[static_cast<size_t>(v)] = static_cast<Part>(from + 1);

    const long long mn = std::min({d[0], d[1], d[2]});
    if (mn > best_min) {
      best_min = mn;
      best = cur;
    }
  }
  return {std::move(best), best_min};
}

std::pair<Bipartition, long long> best_bipartition_special(const SpecialMultigraph& sm,
                                                           long long budget) {
  const int n = sm.num_vertices();
  if (n == 0) return {Bipartition{}, 0};
  checked_power(2, n, budget);
  // vertex 0 stays pinned to side 0 (sides are unordered), so only 2^(n-1)
  // assignments are actually visited

  std::vector<int> order;
  for (int v = 1; v < n; ++v) order.push_back(v);
  const int k = static_cast<int>(order.size());

  Bipartition cur;
  cur.side.assign(static_cast<size_t>(n), 0);
  std::array<long long, 2> e{};  // edges spanned per side
  std::array<long long, 2> f{};  // specials per side
  for (const auto& p : sm.pairs()) e[0] += p.multiplicity;
  f[0] = sm.num_specials();
  const auto flip = [&](int v) {
    const int s = cur.side[static_cast<size_t>(v)];
    const int o = 1 - s;
    for (const auto& [u, mult] : sm.neighbours(v)) {
      if (cur.side[static_cast<size_t>(u)] == s) e[static_cast<size_t>(s)] -= mult;
      if (cur.side[static_cast<size_t>(u)] == o) e[static_cast<size_t>(o)] += mult;
    }
    if (sm.is_special(v)) {
      --f[static_cast<size_t>(s)];
      ++f[static_cast<size_t>(o)];
    }
    cur.side[static_cast<size_t>(v)] = static_cast<std::uint8_t>(o);
  };

  Bipartition best = cur;
  long long best_obj = std::max(e[0] + f[0], e[1] + f[1]);
  std::vector<int> digit(static_cast<size_t>(k), 0);
  for (;;) {
    int i = 0;
    while (i < k && digit[static_cast<size_t>(i)] == 1) {
      flip(order[static_cast<size_t>(i)]);
      digit[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
    flip(order[static_cast<size_t>(i)]);
    digit[static_cast<size_t>(i)] = 1;

    const long long obj = std::max(e[0] + f[0], e[1] + f[1]);
    if (obj < best_obj) {
      best_obj = obj;
      best = cur;
    }
  }
  return {std::move(best), best_obj};
}

namespace {

std::vector<std::array<int, 3>> lex_triples(int n) {
  std::vector<std::array<int, 3>> ts;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) ts.push_back({a, b, c});
  return ts;
}

constexpr std::size_t kFailureCap = 32;

}  // namespace

OracleReport enumerate_hypergraphs(
    int n, const std::function<bool(const Hypergraph3&, std::uint64_t mask)>& visitor) {
  if (n < 0 || n > 6) throw std::invalid_argument("enumeration supports up to 6 vertices");
  const auto triples = lex_triples(n);
  const int t = static_cast<int>(triples.size());

  OracleReport rep;
  rep.instance = "all-" + std::to_string(n);
  const std::uint64_t total = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    std::vector<std::array<int, 3>> es;
    for (int i = 0; i < t; ++i)
      if (mask >> i & 1) es.push_back(triples[static_cast<size_t>(i)]);
    const Hypergraph3 g(n, std::move(es));
    ++rep.instances_checked;
    if (!visitor(g, mask)) {
      ++rep.failure_count;
      if (rep.failures.size() < kFailureCap)
        rep.failures.push_back("mask " + std::to_string(mask));
    }
  }
  return rep;
}

OracleReport exhaustive_theorem_check(int n, int threads) {
  if (n < 0 || n > 6) throw std::invalid_argument("enumeration supports up to 6 vertices");
  const auto triples = lex_triples(n);
  const int t = static_cast<int>(triples.size());
  const std::uint64_t total = (std::uint64_t{1} << t) - 1;

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  const auto workers = static_cast<std::uint64_t>(std::min<long long>(threads, 64));

  struct Chunk {
    OracleReport rep;
  };
  std::vector<Chunk> chunks(workers);

  const auto run_range = [&](std::uint64_t lo, std::uint64_t hi, OracleReport& rep) {
    for (std::uint64_t mask = lo; mask <= hi && mask != 0; ++mask) {
      std::vector<std::array<int, 3>> es;
      for (int i = 0; i < t; ++i)
        if (mask >> i & 1) es.push_back(triples[static_cast<size_t>(i)]);
      const Hypergraph3 g(n, std::move(es));
      const long long m = g.num_edges();
      const auto [p, best] = best_tripartition(g, 1'000'000);
      (void)p;
      ++rep.instances_checked;
      if (5 * best < 3 * m || 9 * best < 5 * m) {
        ++rep.failure_count;
        if (rep.failures.size() < kFailureCap)
          rep.failures.push_back("mask " + std::to_string(mask) + " best " + std::to_string(best) +
                                 " m " + std::to_string(m));
      }
    }
  };

  if (workers <= 1 || total < 2 * workers) {
    run_range(1, total, chunks[0].rep);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t span = total / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + w * span;
      const std::uint64_t hi = (w + 1 == workers) ? total : w * span + span;
      pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, chunks[static_cast<size_t>(w)].rep); });
    }
    for (auto& th : pool) th.join();
  }

  OracleReport rep;
  rep.instance = "theorem-" + std::to_string(n);
  for (const auto& c : chunks) {
    rep.instances_checked += c.rep.instances_checked;
    rep.failure_count += c.rep.failure_count;
    for (const auto& f : c.rep.failures)
      if (rep.failures.size() < kFailureCap) rep.failures.push_back(f);
  }
  return rep;
}

}  // namespace jp
