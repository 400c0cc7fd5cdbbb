#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "jp/generators.hpp"
#include "jp/hypergraph.hpp"
#include "jp/oracle.hpp"
#include "jp/special_bipartition.hpp"

using namespace jp;

namespace {

long long min_part_degree(const Hypergraph3& g, const Tripartition& p) {
  const auto d = part_degrees(g, p);
  return std::min({d[0], d[1], d[2]});
}

}  // namespace

TEST_CASE("exact tripartition optima on the fixtures") {
  const auto [pt, vt] = best_tripartition(tight15());
  CHECK(vt == 4);
  CHECK(min_part_degree(tight15(), pt) == 4);

  const auto [pg, vg] = best_tripartition(grid3());
  CHECK(vg == 6);  // every class can meet all six edges
  CHECK(min_part_degree(grid3(), pg) == 6);

  CHECK(best_tripartition(complete_hypergraph(4)).second == 3);
  CHECK(best_tripartition(complete_hypergraph(6)).second == 16);

  const Hypergraph3 single(3, {{0, 1, 2}});
  CHECK(best_tripartition(single).second == 1);

  const Hypergraph3 empty_vertices(0, {});
  CHECK(best_tripartition(empty_vertices).second == 0);
}

TEST_CASE("exact optimum on the complete nine vertex instance") {
  const auto [p, v] = best_tripartition(complete_hypergraph(9), 100'000);
  CHECK(v == 64);
  auto sizes = p.part_sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::array<int, 3>{3, 3, 3});
}

TEST_CASE("tripartition oracle pins the first vertex") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Hypergraph3 g = random_hypergraph(8, 12, seed);
    const auto [p, v] = best_tripartition(g);
    CHECK(p.label[0] == Part::A);
    CHECK(min_part_degree(g, p) == v);
  }
}

TEST_CASE("tripartition oracle respects its budget") {
  CHECK_THROWS_AS(best_tripartition(complete_hypergraph(14), 1000), BudgetExceeded);
  CHECK_NOTHROW(best_tripartition(complete_hypergraph(6), 729));  // 3^6 exactly
  CHECK_THROWS_AS(best_tripartition(complete_hypergraph(6), 728), BudgetExceeded);
}

TEST_CASE("exact bipartition optima on small special multigraphs") {
  const SpecialMultigraph triangle(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, {});
  CHECK(best_bipartition_special(triangle).second == 1);

  const SpecialMultigraph star(3, {{0, 1, 1}, {0, 2, 1}}, {0});
  CHECK(best_bipartition_special(star).second == 1);

  const SpecialMultigraph edgeless(2, {}, {0, 1});
  CHECK(best_bipartition_special(edgeless).second == 1);

  const SpecialMultigraph lone(1, {}, {});
  CHECK(best_bipartition_special(lone).second == 0);
}

TEST_CASE("bipartition oracle matches a direct recomputation") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const SpecialMultigraph sm = random_special_multigraph(7, 10, 2, 2, seed);
    const auto [b, v] = best_bipartition_special(sm);
    const auto sp = spanned_counts(sm, b);
    const auto f = special_counts(sm, b);
    CHECK(std::max(sp[0] + f[0], sp[1] + f[1]) == v);
  }
}

TEST_CASE("bipartition oracle respects its budget") {
  const SpecialMultigraph sm = random_special_multigraph(20, 30, 4, 2, 1);
  CHECK_THROWS_AS(best_bipartition_special(sm, 1000), BudgetExceeded);
}

TEST_CASE("hypergraph enumeration visits every nonempty edge subset") {
  int calls = 0;
  const OracleReport r4 = enumerate_hypergraphs(4, [&](const Hypergraph3& g, std::uint64_t) {
    ++calls;
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() >= 1);
    return true;
  });
  CHECK(calls == 15);  // 2^4 - 1 subsets of the four triples
  CHECK(r4.instances_checked == 15);
  CHECK(r4.failure_count == 0);

  std::set<std::uint64_t> masks;
  const OracleReport r5 = enumerate_hypergraphs(5, [&](const Hypergraph3&, std::uint64_t mask) {
    masks.insert(mask);
    return true;
  });
  CHECK(masks.size() == 1023);  // 2^10 - 1
  CHECK(r5.instances_checked == 1023);

  CHECK_THROWS_AS(enumerate_hypergraphs(7, [](const Hypergraph3&, std::uint64_t) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("enumeration reports failures without truncating the count") {
  const OracleReport r = enumerate_hypergraphs(
      4, [](const Hypergraph3& g, std::uint64_t) { return g.num_edges() != 2; });
  CHECK(r.failure_count == 6);  // choose 2 of 4 triples
  CHECK(r.failures.size() == 6);
}

TEST_CASE("the bound holds on every hypergraph with up to five vertices") {
  const OracleReport r4 = exhaustive_theorem_check(4);
  CHECK(r4.instances_checked == 15);
  CHECK(r4.failure_count == 0);

  const OracleReport r5 = exhaustive_theorem_check(5, 1);
  CHECK(r5.instances_checked == 1023);
  CHECK(r5.failure_count == 0);
}
