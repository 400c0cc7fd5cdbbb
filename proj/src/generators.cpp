#include "jp/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "jp/rng.hpp"

namespace jp {

Hypergraph3 grid3() {
  std::vector<std::array<int, 3>> edges;
  for (int r = 0; r < 3; ++r) edges.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (int c = 0; c < 3; ++c) edges.push_back({c, c + 3, c + 6});
  return Hypergraph3(9, std::move(edges));
}

Hypergraph3 tight15() {
  return Hypergraph3(7, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}});
}

Tripartition grid3_rows_partition() {
  Tripartition p;
  p.label = {Part::A, Part::A, Part::A, Part::B, Part::B, Part::B, Part::C, Part::C, Part::C};
  return p;
}

Tripartition tight15_partition() {
  Tripartition p;
  p.label = {Part::A, Part::B, Part::C, Part::A, Part::B, Part::C, Part::A};
  return p;
}

Hypergraph3 complete_hypergraph(int n) {
  if (n < 3) throw std::invalid_argument("complete hypergraph needs n >= 3");
  std::vector<std::array<int, 3>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) edges.push_back({i, j, k});
  return Hypergraph3(n, std::move(edges));
}

Hypergraph3 random_hypergraph(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative size");
  if (m > 0 && n < 3) throw std::invalid_argument("edges need n >= 3");
  const long long max_edges = n < 3 ? 0 : static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  if (m > max_edges) throw std::invalid_argument("more edges than distinct triples");

  std::mt19937_64 rng(seed);
  std::set<std::array<int, 3>> seen;
  std::vector<std::array<int, 3>> edges;
  while (static_cast<int>(edges.size()) < m) {
    int a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    int b, c;
    do b = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    while (b == a);
    do c = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    while (c == a || c == b);
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (seen.insert(t).second) edges.push_back(t);
  }
  return Hypergraph3(n, std::move(edges));
}

SpecialMultigraph random_special_multigraph(int n, long long m, int k, long long maxmult,
                                            std::uint64_t seed) {
  if (n < 0 || m < 0 || k < 0) throw std::invalid_argument("negative size");
  if (k > n) throw std::invalid_argument("more specials than vertices");
  if (maxmult < 1) throw std::invalid_argument("maxmult must be positive");
  const long long capacity = n < 2 ? 0 : maxmult * (static_cast<long long>(n) * (n - 1) / 2);
  if (m > capacity) throw std::invalid_argument("multiplicity budget exceeds capacity");

  std::mt19937_64 rng(seed);
  std::vector<int> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
  }
  std::vector<int> specials(ids.begin(), ids.begin() + k);

  std::map<std::pair<int, int>, long long> mult;
  long long placed = 0;
  while (placed < m) {
    int u = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    int v;
    do v = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    while (v == u);
    if (u > v) std::swap(u, v);
    auto& cur = mult[{u, v}];
    if (cur < maxmult) {
      ++cur;
      ++placed;
    }
  }
  std::vector<PairEdge> pairs;
  pairs.reserve(mult.size());
  for (const auto& [uv, c] : mult) pairs.push_back({uv.first, uv.second, c});
  return SpecialMultigraph(n, std::move(pairs), std::move(specials));
}

}  // namespace jp
