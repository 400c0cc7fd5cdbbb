#pragma once

#include <array>
#include <utility>

#include "jp/hypergraph.hpp"
#include "jp/local_search.hpp"

namespace jp {

// Bound witness for a special multigraph bipartition: both sides must
// satisfy e(V_i) + f(V_i) <= m/3 + (k+1)/2, checked in integers as
// 6*(e+f) <= 2m + 3(k+1). e counts edges spanned by the side (with
// multiplicity), f counts specials on the side.
struct BipartitionCertificate {
  std::array<long long, 2> spanned{};
  std::array<long long, 2> specials{};
  long long m = 0;
  long long k = 0;
  bool holds = false;
};

std::array<long long, 2> spanned_counts(const SpecialMultigraph& sm, const Bipartition& b);
std::array<long long, 2> special_counts(const SpecialMultigraph& sm, const Bipartition& b);
BipartitionCertificate bipartition_certificate(const SpecialMultigraph& sm, const Bipartition& b);

// First-improvement descent on the pair (e(V1)+e(V2), |f(V1)-f(V2)|),
// compared lexicographically, over single-vertex moves; scan order ascending
// id. At a fixed point e(v, own side) <= e(v, other side) for every v, and
// when the special counts differ by more than one, every special on the
// heavy side satisfies the strict form e(v, own)+1 <= e(v, other).
Bipartition lex_local_search(const SpecialMultigraph& sm, Bipartition b,
                             const SearchConfig& cfg = {});

// Greedily grow side 2 by single vertices (ascending id, repeated passes)
// while 6*(e(W2)+f(W2)) <= 2m + 3(k+1) keeps holding.
Bipartition maximal_extension(const SpecialMultigraph& sm, const Bipartition& b);

// Full pipeline: start from specials alternating between sides (non-specials
// on side 1), run lex_local_search, put the side with fewer specials second,
// extend it maximally, and certify. On certificate failure falls back to
// exact search when 2^n fits cfg.exact_cap, otherwise retries from random
// starts; if everything is exhausted the best failing attempt is returned
// with its (non-holding) certificate.
std::pair<Bipartition, BipartitionCertificate> special_bipartition(const SpecialMultigraph& sm,
                                                                   const SearchConfig& cfg = {});

// Pair multigraph obtained by shrinking every 3-vertex edge to its two
// smallest vertices; 1-vertex edges become specials. Multiplicities of
// coinciding pairs aggregate.
SpecialMultigraph shrink_to_pairs(const MultiHypergraph& h);

// Bipartition the vertex set of h so that each side's count of size>=2 edges
// met plus its specials is at least 2m/3 + (k-1)/2, i.e. 6d >= 4m + 3(k-1)
// in integers (m = multiplicity of size>=2 edges, k = number of size-1
// edges). Works through shrink_to_pairs + special_bipartition.
struct MeetingResult {
  Bipartition bipartition;
  std::array<long long, 2> meets{};
  long long m = 0;
  long long k = 0;
  bool holds = false;
};
MeetingResult bipartition_hypergraph_meeting(const MultiHypergraph& h,
                                             const SearchConfig& cfg = {});

}  // namespace jp
