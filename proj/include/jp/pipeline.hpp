#pragma once

#include <optional>
#include <string>

#include "jp/hypergraph.hpp"
#include "jp/local_search.hpp"

namespace jp {

// A part is good when it meets at least 3m/5 edges: 5*d(S) >= 3m.
bool is_good(const Hypergraph3& g, std::span<const int> s);

// Smallest integer degree a good part needs, ceil(3m/5).
long long good_degree_target(long long m);

struct SolveOutcome {
  Tripartition partition;
  Certificate certificate;
  std::string method;
  int restarts_used = 0;
  std::string warning;  // set only when the bound could not be certified
};

// Fast path: a vertex set A that no edge meets twice and that is itself good
// (single vertices always qualify for the first condition). The remaining
// vertices are split by pairing every edge away from A. Returns nothing when
// no such A is found or the final check fails.
std::optional<SolveOutcome> max_degree_path(const Hypergraph3& g, const SearchConfig& cfg = {});

// Fast path for m >= 10: two vertices a, b of degree >= ceil(3m/5)-1 extend
// to good pairs {a,c}, {b,d} with c, d taken from edges missing a resp. b;
// the rest misses at most four edges. Returns nothing when the hypotheses or
// the final check fail.
std::optional<SolveOutcome> two_high_degree_path(const Hypergraph3& g,
                                                 const SearchConfig& cfg = {});

// Produce a tripartition in which every class meets at least 3m/5 edges.
// Dispatch: exact search when 3^n fits cfg.exact_cap or m <= 24, then the
// two fast paths, then the local-search engine at eps = 1/15 with its
// restriction / bounded-reassignment continuations, then restart escalation
// and an exact fallback. Requires m >= 1.
SolveOutcome solve(const Hypergraph3& g, const SearchConfig& cfg = {}, long long eps_num = 1,
                   long long eps_den = 15);

// Recompute the certificate for an arbitrary partition; trusts nothing.
Certificate verify_good(const Hypergraph3& g, const Tripartition& p);

}  // namespace jp
