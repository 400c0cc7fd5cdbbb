#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "jp/generators.hpp"
#include "jp/hypergraph.hpp"

using namespace jp;

namespace {

Tripartition make_partition(int n, std::vector<int> b, std::vector<int> c) {
  Tripartition p;
  p.label.assign(static_cast<size_t>(n), Part::A);
  for (int v : b) p.label[static_cast<size_t>(v)] = Part::B;
  for (int v : c) p.label[static_cast<size_t>(v)] = Part::C;
  return p;
}

}  // namespace

TEST_CASE("edges are stored sorted and validated") {
  Hypergraph3 g(5, {{4, 2, 0}, {1, 3, 2}});
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 2);
  CHECK(g.edge(0) == std::array<int, 3>{0, 2, 4});
  CHECK(g.edge(1) == std::array<int, 3>{1, 2, 3});

  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 1}}), std::invalid_argument);             // repeated vertex
  CHECK_THROWS_AS(Hypergraph3(3, {{0, 1, 3}}), std::out_of_range);
}

TEST_CASE("incidence index matches the edge list") {
  const Hypergraph3 g = tight15();
  for (int v = 0; v < g.num_vertices(); ++v) {
    long long direct = 0;
    for (const auto& e : g.edges())
      if (std::find(e.begin(), e.end(), v) != e.end()) ++direct;
    CHECK(g.vertex_degree(v) == direct);
    for (int e : g.incident_edges(v)) {
      const auto& t = g.edge(e);
      CHECK(std::find(t.begin(), t.end(), v) != t.end());
    }
  }
}

TEST_CASE("degree and degree2 on the tight fixture") {
  const Hypergraph3 g = tight15();
  const std::vector<int> s{1, 4};  // vertices 1 and 4
  CHECK(degree(g, s) == 3);
  CHECK(degree2(g, s) == 1);  // only {1,4,6} contains both
  const std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
  CHECK(degree(g, all) == g.num_edges());
  const std::vector<int> dup{1, 1, 4};
  CHECK(degree(g, dup) == 3);  // duplicates absorbed
}

TEST_CASE("private degrees split degree against degree2") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph3 g = random_hypergraph(9, 16, seed);
    const std::vector<int> s{0, 3, 5, 8};
    long long priv = 0;
    for (int a : s) priv += private_degree(g, a, s);
    CHECK(degree(g, s) == priv + degree2(g, s));
  }
}

TEST_CASE("signature counts sum to m and match the pair view") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph3 g = random_hypergraph(10, 20, seed);
    const Tripartition p = make_partition(10, {1, 4, 7}, {2, 5, 8});
    const auto cc = cross_counts(g, p);
    long long total = 0;
    for (long long c : cc) total += c;
    CHECK(total == g.num_edges());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto ip = incident_pair_counts(g, p, v);
      long long s = 0;
      for (long long c : ip) s += c;
      CHECK(s == g.vertex_degree(v));
    }
  }
}

TEST_CASE("signature and pair indices cover their ranges") {
  // sorted multisets over {A,B,C} in lexicographic order
  const std::array<std::array<Part, 3>, 10> sigs{{{Part::A, Part::A, Part::A},
                                                  {Part::A, Part::A, Part::B},
                                                  {Part::A, Part::A, Part::C},
                                                  {Part::A, Part::B, Part::B},
                                                  {Part::A, Part::B, Part::C},
                                                  {Part::A, Part::C, Part::C},
                                                  {Part::B, Part::B, Part::B},
                                                  {Part::B, Part::B, Part::C},
                                                  {Part::B, Part::C, Part::C},
                                                  {Part::C, Part::C, Part::C}}};
  for (int i = 0; i < 10; ++i) {
    CHECK(signature_index(sigs[i][0], sigs[i][1], sigs[i][2]) == i);
    CHECK(signature_index(sigs[i][2], sigs[i][0], sigs[i][1]) == i);  // order-free
  }
  int k = 0;
  for (Part x : all_parts)
    for (Part y : all_parts) {
      if (static_cast<int>(y) < static_cast<int>(x)) continue;
      CHECK(pair_index(x, y) == k);
      CHECK(pair_index(y, x) == k);
      ++k;
    }
  CHECK(k == 6);
}

TEST_CASE("triple degree identity") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Hypergraph3 g = random_hypergraph(11, 25, seed);
    const Tripartition p = make_partition(11, {0, 2, 9}, {3, 6});
    const auto d = part_degrees(g, p);
    const auto cc = cross_counts(g, p);
    const long long td = triple_degree(g, p);
    CHECK(td == d[0] + d[1] + d[2]);
    const long long aaa = cc[signature_index(Part::A, Part::A, Part::A)];
    const long long bbb = cc[signature_index(Part::B, Part::B, Part::B)];
    const long long ccc = cc[signature_index(Part::C, Part::C, Part::C)];
    const long long abc = cc[signature_index(Part::A, Part::B, Part::C)];
    CHECK(td == 2 * g.num_edges() + abc - aaa - bbb - ccc);
  }
}

TEST_CASE("edges missed by a class are exactly the ones inside the others") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Hypergraph3 g = random_hypergraph(10, 18, seed);
    const Tripartition p = make_partition(10, {1, 5, 6}, {2, 7});
    const auto d = part_degrees(g, p);
    const auto cc = cross_counts(g, p);
    auto sig = [&](Part x, Part y, Part z) { return cc[signature_index(x, y, z)]; };
    // edges avoiding C split into the four A/B-only signatures
    CHECK(sig(Part::A, Part::A, Part::A) + sig(Part::B, Part::B, Part::B) +
              sig(Part::A, Part::A, Part::B) + sig(Part::A, Part::B, Part::B) ==
          g.num_edges() - d[2]);
    // edges meeting C are at least the ones counted by these signatures
    CHECK(sig(Part::A, Part::B, Part::C) + sig(Part::A, Part::C, Part::C) +
              sig(Part::B, Part::B, Part::C) + sig(Part::C, Part::C, Part::C) <=
          d[2]);
  }
}

TEST_CASE("restriction drops vertices but keeps the indexing") {
  const Hypergraph3 g = tight15();
  const std::vector<int> keep{2, 3, 4, 5, 6};
  const MultiHypergraph h = restrict_to(g, keep);
  CHECK(h.num_vertices() == g.num_vertices());
  CHECK(h.total_multiplicity() == g.num_edges());
  const auto& es = h.edges();
  REQUIRE(es.size() == 5);
  CHECK(es[0].arity == 1);
  CHECK(es[0].v[0] == 2);
  CHECK(es[1].arity == 3);
  CHECK((es[1].v == std::array<int, 3>{2, 5, 6}));
  CHECK(es[2].arity == 3);
  CHECK((es[2].v == std::array<int, 3>{3, 4, 5}));
  CHECK(es[3].arity == 2);
  CHECK(es[3].v[0] == 3);
  CHECK(es[3].v[1] == 6);
  CHECK(es[4].arity == 2);
  CHECK(es[4].v[0] == 4);
  CHECK(es[4].v[1] == 6);
}

TEST_CASE("restriction preserves total multiplicity") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph3 g = random_hypergraph(9, 20, seed);
    std::vector<int> keep;
    for (int v = 2; v < 9; ++v) keep.push_back(v);
    const MultiHypergraph h = restrict_to(g, keep);
    CHECK(h.total_multiplicity() == g.num_edges());
  }
}

TEST_CASE("restriction rejects dropping more than two vertices") {
  const Hypergraph3 g = tight15();
  const std::vector<int> keep_four{3, 4, 5, 6};  // drops 0,1,2
  CHECK_THROWS_AS(restrict_to(g, keep_four), std::invalid_argument);
  Hypergraph3 h2(4, {{0, 1, 2}, {1, 2, 3}});
  const std::vector<int> keep_two{2, 3};  // drops 0,1; first edge shrinks to {2}
  const MultiHypergraph r = restrict_to(h2, keep_two);
  CHECK(r.edges().size() == 2);
  CHECK(r.edges()[0].arity == 1);
}

TEST_CASE("multi hypergraph aggregates duplicate sets") {
  MultiHypergraph h(6, {{{1, 0, 0}, 2, 3}, {{0, 1, 0}, 2, 2}, {{5, 0, 0}, 1, 1}});
  REQUIRE(h.edges().size() == 2);
  CHECK(h.edges()[0].v[0] == 0);
  CHECK(h.edges()[0].v[1] == 1);
  CHECK(h.edges()[0].multiplicity == 5);
  CHECK(h.edges()[1].arity == 1);
  CHECK(h.total_multiplicity() == 6);
  CHECK_THROWS_AS(MultiHypergraph(3, {{{0, 0, 0}, 1, 2}}), std::invalid_argument);  // unit mult
  CHECK_THROWS_AS(MultiHypergraph(3, {{{0, 1, 0}, 2, 0}}), std::invalid_argument);  // zero mult
}

TEST_CASE("multi hypergraph degrees respect multiplicity") {
  MultiHypergraph h(5, {{{0, 1, 0}, 2, 3}, {{1, 2, 3}, 3, 2}, {{4, 0, 0}, 1, 1}});
  const std::vector<int> s{1};
  CHECK(degree(h, s) == 5);
  const std::vector<int> s2{1, 2};
  CHECK(degree(h, s2) == 5);
  CHECK(degree2(h, s2) == 2);  // the triple, with multiplicity
  const std::vector<int> s3{0, 1};
  CHECK(degree2(h, s3) == 3);
}

TEST_CASE("special multigraph normalizes and validates") {
  SpecialMultigraph sm(4, {{2, 1, 2}, {1, 2, 1}, {0, 3, 1}}, {3, 0});
  REQUIRE(sm.pairs().size() == 2);
  CHECK(sm.pairs()[0].u == 0);
  CHECK(sm.pairs()[0].v == 3);
  CHECK(sm.pairs()[1].u == 1);
  CHECK(sm.pairs()[1].v == 2);
  CHECK(sm.pairs()[1].multiplicity == 3);
  CHECK(sm.num_edges() == 4);
  CHECK(sm.num_specials() == 2);
  CHECK(sm.is_special(0));
  CHECK(!sm.is_special(1));
  long long via_adj = 0;
  for (auto [w, mult] : sm.neighbours(1)) {
    CHECK(w == 2);
    via_adj += mult;
  }
  CHECK(via_adj == 3);
  CHECK_THROWS_AS(SpecialMultigraph(3, {}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SpecialMultigraph(3, {{0, 0, 1}}, {}), std::invalid_argument);  // loop
}

TEST_CASE("partition helpers") {
  const Tripartition p = make_partition(6, {1, 3}, {5});
  CHECK(p.part_vertices(Part::A) == std::vector<int>{0, 2, 4});
  CHECK(p.part_vertices(Part::B) == std::vector<int>{1, 3});
  CHECK(p.part_vertices(Part::C) == std::vector<int>{5});
  CHECK(p.part_sizes() == std::array<int, 3>{3, 2, 1});
  Bipartition b;
  b.side = {0, 1, 1, 0};
  CHECK(b.side_vertices(0) == std::vector<int>{0, 3});
  CHECK(b.side_vertices(1) == std::vector<int>{1, 2});
}
