#include <doctest.h>

#include <algorithm>
#include <vector>

#include "jp/generators.hpp"
#include "jp/hypergraph.hpp"
#include "jp/special_bipartition.hpp"

using namespace jp;

namespace {

// one special centre s joined to two plain vertices
SpecialMultigraph two_ray_star() { return SpecialMultigraph(3, {{0, 1, 1}, {0, 2, 1}}, {0}); }

SpecialMultigraph triangle() { return SpecialMultigraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, {}); }

Bipartition all_on(int n, int side) {
  Bipartition b;
  b.side.assign(static_cast<size_t>(n), static_cast<std::uint8_t>(side));
  return b;
}

}  // namespace

TEST_CASE("side counts on small fixtures") {
  const SpecialMultigraph sm = two_ray_star();
  Bipartition b;
  b.side = {0, 1, 1};
  CHECK(spanned_counts(sm, b) == std::array<long long, 2>{0, 0});
  CHECK(special_counts(sm, b) == std::array<long long, 2>{1, 0});
  b.side = {0, 0, 1};
  CHECK(spanned_counts(sm, b) == std::array<long long, 2>{1, 0});
  const BipartitionCertificate c = bipartition_certificate(sm, b);
  CHECK(c.m == 2);
  CHECK(c.k == 1);
  CHECK(c.spanned[0] == 1);
  CHECK(c.specials[0] == 1);
  // side 0 carries e+f = 2 and 6*2 > 2*2 + 3*2, one unit over the bound
  CHECK(!c.holds);
  b.side = {0, 1, 1};
  CHECK(bipartition_certificate(sm, b).holds);  // the balanced split is fine
}

TEST_CASE("certificate arithmetic is exact at the boundary") {
  // single pair with multiplicity 3, no specials: a side spanning it has
  // 6*3 = 18 > 2*3 + 3 = 9, so the certificate must fail
  SpecialMultigraph sm(2, {{0, 1, 3}}, {});
  const BipartitionCertificate bad = bipartition_certificate(sm, all_on(2, 0));
  CHECK(!bad.holds);
  Bipartition split;
  split.side = {0, 1};
  CHECK(bipartition_certificate(sm, split).holds);
}

TEST_CASE("lex search walks the triangle to a balanced cut") {
  const SpecialMultigraph sm = triangle();
  const Bipartition b = lex_local_search(sm, all_on(3, 0));
  CHECK(b.side == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(spanned_counts(sm, b) == std::array<long long, 2>{1, 0});
}

TEST_CASE("lex search fixed points satisfy the degree inequalities") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const SpecialMultigraph sm = random_special_multigraph(9, 16, 3, 3, seed);
    const Bipartition b = lex_local_search(sm, all_on(9, 0));
    // every vertex prefers its own side: e(v, own) <= e(v, other)
    for (int v = 0; v < sm.num_vertices(); ++v) {
      long long own = 0, other = 0;
      for (auto [w, mult] : sm.neighbours(v))
        (b.side[static_cast<size_t>(w)] == b.side[static_cast<size_t>(v)] ? own : other) += mult;
      CHECK(own <= other);
    }
    // summed per side: 3 e(V_i) + e(V_j) <= m
    const auto sp = spanned_counts(sm, b);
    const long long m = sm.num_edges();
    CHECK(3 * sp[0] + sp[1] <= m);
    CHECK(3 * sp[1] + sp[0] <= m);
  }
}

TEST_CASE("maximal extension only grows the second side and keeps its bound") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const SpecialMultigraph sm = random_special_multigraph(8, 12, 2, 2, seed);
    Bipartition b = lex_local_search(sm, all_on(8, 0));
    const auto f = special_counts(sm, b);
    if (f[1] > f[0])
      for (auto& s : b.side) s ^= 1;
    const Bipartition w = maximal_extension(sm, b);
    for (int v = 0; v < 8; ++v)
      if (b.side[static_cast<size_t>(v)] == 1) CHECK(w.side[static_cast<size_t>(v)] == 1);
    const auto sp = spanned_counts(sm, w);
    const auto fw = special_counts(sm, w);
    const long long m = sm.num_edges(), k = sm.num_specials();
    CHECK(6 * (sp[1] + fw[1]) <= 2 * m + 3 * (k + 1));
  }
}

TEST_CASE("full bipartition run on the star fixture") {
  const auto [b, cert] = special_bipartition(two_ray_star());
  CHECK(b.side == std::vector<std::uint8_t>{0, 1, 1});
  CHECK(cert.spanned == std::array<long long, 2>{0, 0});
  CHECK(cert.specials == std::array<long long, 2>{1, 0});
  CHECK(cert.m == 2);
  CHECK(cert.k == 1);
  CHECK(cert.holds);
}

TEST_CASE("bipartition certificates hold on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SpecialMultigraph sm =
        random_special_multigraph(4 + static_cast<int>(seed % 9), 2 * (seed % 8), seed % 5, 3, seed);
    const auto [b, cert] = special_bipartition(sm);
    CHECK(cert.holds);
    const BipartitionCertificate again = bipartition_certificate(sm, b);
    CHECK(again.holds == cert.holds);
    CHECK(again.spanned == cert.spanned);
    CHECK(again.specials == cert.specials);
  }
}

TEST_CASE("bipartition rejects a zero restart budget") {
  SearchConfig cfg;
  cfg.max_restarts = 0;
  CHECK_THROWS_AS(special_bipartition(two_ray_star(), cfg), std::invalid_argument);
}

TEST_CASE("shrinking keeps pairs and turns singletons into specials") {
  const Hypergraph3 g = tight15();
  const std::vector<int> keep{2, 3, 4, 5, 6};
  const SpecialMultigraph sm = shrink_to_pairs(restrict_to(g, keep));
  CHECK(sm.num_edges() == 4);
  CHECK(sm.num_specials() == 1);
  CHECK(sm.specials() == std::vector<int>{2});
  REQUIRE(sm.pairs().size() == 4);
  CHECK(sm.pairs()[0] == PairEdge{2, 5, 1});  // {2,5,6} shrinks to its two smallest
  CHECK(sm.pairs()[1] == PairEdge{3, 4, 1});
  CHECK(sm.pairs()[2] == PairEdge{3, 6, 1});
  CHECK(sm.pairs()[3] == PairEdge{4, 6, 1});
}

TEST_CASE("shrinking conserves multiplicities") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph3 g = random_hypergraph(9, 18, seed);
    std::vector<int> keep;
    for (int v = 2; v < 9; ++v) keep.push_back(v);
    const MultiHypergraph h = restrict_to(g, keep);
    const SpecialMultigraph sm = shrink_to_pairs(h);
    long long pair_mult = 0, singles = 0;
    for (const auto& e : h.edges()) (e.arity == 1 ? singles : pair_mult) += e.multiplicity;
    CHECK(sm.num_edges() == pair_mult);
    CHECK(sm.num_specials() == singles);
  }
}

TEST_CASE("meeting bound on the shrunken tight fixture") {
  const Hypergraph3 g = tight15();
  const std::vector<int> keep{2, 3, 4, 5, 6};
  const MeetingResult r = bipartition_hypergraph_meeting(restrict_to(g, keep));
  CHECK(r.m == 4);
  CHECK(r.k == 1);
  CHECK(r.meets == std::array<long long, 2>{4, 4});
  CHECK(r.holds);
}

TEST_CASE("meeting bound is recomputable from the returned sides") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph3 g = random_hypergraph(10, 20, seed);
    std::vector<int> keep;
    for (int v = 2; v < 10; ++v) keep.push_back(v);
    const MultiHypergraph h = restrict_to(g, keep);
    const MeetingResult r = bipartition_hypergraph_meeting(h);
    std::array<long long, 2> meets{0, 0};
    long long m = 0, k = 0;
    for (const auto& e : h.edges()) {
      if (e.arity == 1) {
        ++k;
        meets[r.bipartition.side[static_cast<size_t>(e.v[0])]] += 1;
        continue;
      }
      m += e.multiplicity;
      bool on[2] = {false, false};
      for (int i = 0; i < e.arity; ++i) on[r.bipartition.side[static_cast<size_t>(e.v[i])]] = true;
      for (int s = 0; s < 2; ++s)
        if (on[s]) meets[s] += e.multiplicity;
    }
    CHECK(r.m == m);
    CHECK(r.k == k);
    CHECK(r.meets == meets);
    const bool holds = 6 * meets[0] >= 4 * m + 3 * (k - 1) && 6 * meets[1] >= 4 * m + 3 * (k - 1);
    CHECK(r.holds == holds);
    CHECK(r.holds);  // guaranteed by the bipartition bound
  }
}
