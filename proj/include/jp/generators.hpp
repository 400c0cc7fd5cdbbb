#pragma once

#include <cstdint>

#include "jp/hypergraph.hpp"

namespace jp {

// 3x3 grid: nine vertices in row-major order, one edge per row and per
// column. n = 9, m = 6.
Hypergraph3 grid3();

// Seven vertices 0..6, five edges {0,1,2},{3,4,5},{0,3,6},{1,4,6},{2,5,6}.
// The partition ({0,3,6},{1,4},{2,5}) is locally optimal with two parts
// sitting exactly on the 3m/5 bound (degrees 5,3,3).
Hypergraph3 tight15();

// Standard fixture partitions for the two instances above.
Tripartition grid3_rows_partition();
Tripartition tight15_partition();

// All n-choose-3 triples. Requires n >= 3.
Hypergraph3 complete_hypergraph(int n);

// m distinct triples drawn uniformly without replacement; deterministic per
// seed (see rng.hpp for the documented generator).
Hypergraph3 random_hypergraph(int n, int m, std::uint64_t seed);

// Pair multigraph with total multiplicity m (per-pair cap maxmult) and k
// special vertices, deterministic per seed.
SpecialMultigraph random_special_multigraph(int n, long long m, int k, long long maxmult,
                                            std::uint64_t seed);

}  // namespace jp
