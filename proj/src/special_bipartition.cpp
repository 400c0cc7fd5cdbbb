#include "jp/special_bipartition.hpp"

#include <algorithm>
#include <stdexcept>

#include "jp/oracle.hpp"
#include "jp/rng.hpp"

namespace jp {

namespace {

void require_matching(const SpecialMultigraph& sm, const Bipartition& b) {
  if (b.size() != sm.num_vertices()) throw std::invalid_argument("bipartition size mismatch");
}

long long adjacency_to_side(const SpecialMultigraph& sm, const Bipartition& b, int v, int side) {
  long long t = 0;
  for (const auto& [u, mult] : sm.neighbours(v))
    if (b.side[static_cast<size_t>(u)] == side) t += mult;
  return t;
}

bool side_bound(long long e, long long f, long long m, long long k) {
  return 6 * (e + f) <= 2 * m + 3 * (k + 1);
}

}  // namespace

std::array<long long, 2> spanned_counts(const SpecialMultigraph& sm, const Bipartition& b) {
  require_matching(sm, b);
  std::array<long long, 2> e{};
  for (const auto& p : sm.pairs()) {
    const auto su = b.side[static_cast<size_t>(p.u)];
    const auto sv = b.side[static_cast<size_t>(p.v)];
    if (su == sv) e[su] += p.multiplicity;
  }
  return e;
}

std::array<long long, 2> special_counts(const SpecialMultigraph& sm, const Bipartition& b) {
  require_matching(sm, b);
  std::array<long long, 2> f{};
  for (int v : sm.specials()) ++f[b.side[static_cast<size_t>(v)]];
  return f;
}

BipartitionCertificate bipartition_certificate(const SpecialMultigraph& sm, const Bipartition& b) {
  BipartitionCertificate c;
  c.spanned = spanned_counts(sm, b);
  c.specials = special_counts(sm, b);
  c.m = sm.num_edges();
  c.k = sm.num_specials();
  c.holds = side_bound(c.spanned[0], c.specials[0], c.m, c.k) &&
            side_bound(c.spanned[1], c.specials[1], c.m, c.k);
  return c;
}

Bipartition lex_local_search(const SpecialMultigraph& sm, Bipartition b, const SearchConfig&) {
  require_matching(sm, b);
  auto f = special_counts(sm, b);
  for (;;) {
    bool moved = false;
    for (int v = 0; v < sm.num_vertices() && !moved; ++v) {
      const int s = b.side[static_cast<size_t>(v)];
      const int o = 1 - s;
      const long long de = adjacency_to_side(sm, b, v, o) - adjacency_to_side(sm, b, v, s);
      bool take = de < 0;
      if (!take && de == 0 && sm.is_special(v)) {
        // tie on spanned edges: accept only if the special-count gap shrinks
        long long nf0 = f[0], nf1 = f[1];
        if (s == 0) {
          --nf0;
          ++nf1;
        } else {
          ++nf0;
          --nf1;
        }
        take = std::abs(nf0 - nf1) < std::abs(f[0] - f[1]);
      }
      if (take) {
        b.side[static_cast<size_t>(v)] = static_cast<std::uint8_t>(o);
        if (sm.is_special(v)) {
          --f[s];
          ++f[o];
        }
        moved = true;
      }
    }
    if (!moved) return b;
  }
}

Bipartition maximal_extension(const SpecialMultigraph& sm, const Bipartition& b) {
  require_matching(sm, b);
  Bipartition w = b;
  const long long m = sm.num_edges();
  const long long k = sm.num_specials();
  auto e = spanned_counts(sm, w);
  auto f = special_counts(sm, w);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < sm.num_vertices(); ++v) {
      if (w.side[static_cast<size_t>(v)] != 0) continue;
      const long long e2 = e[1] + adjacency_to_side(sm, w, v, 1);
      const long long f2 = f[1] + (sm.is_special(v) ? 1 : 0);
      if (side_bound(e2, f2, m, k)) {
        w.side[static_cast<size_t>(v)] = 1;
        e[1] = e2;
        f[1] = f2;
        grew = true;
      }
    }
  }
  return w;
}

std::pair<Bipartition, BipartitionCertificate> special_bipartition(const SpecialMultigraph& sm,
                                                                   const SearchConfig& cfg) {
  if (cfg.max_restarts < 1) throw std::invalid_argument("max_restarts must be positive");
  const int n = sm.num_vertices();

  const auto attempt = [&](Bipartition start) {
    Bipartition p = lex_local_search(sm, std::move(start), cfg);
    const auto f = special_counts(sm, p);
    if (f[1] > f[0])  // extend the side with fewer specials
      for (auto& s : p.side) s = static_cast<std::uint8_t>(1 - s);
    Bipartition w = maximal_extension(sm, p);
    auto cert = bipartition_certificate(sm, w);
    return std::make_pair(std::move(w), cert);
  };

  Bipartition start;
  start.side.assign(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < sm.specials().size(); ++i)
    start.side[static_cast<size_t>(sm.specials()[i])] = static_cast<std::uint8_t>(i % 2);
  auto best = attempt(std::move(start));
  if (best.second.holds) return best;

  // The balanced start missed; an exact pass settles small instances.
  bool exact_fits = n < 63;
  if (exact_fits) {
    long long total = 1;
    for (int i = 0; i < n && exact_fits; ++i) {
      total *= 2;
      if (total > cfg.exact_cap) exact_fits = false;
    }
    if (exact_fits) {
      auto [b, obj] = best_bipartition_special(sm, cfg.exact_cap);
      (void)obj;
      return {b, bipartition_certificate(sm, b)};
    }
  }

  const auto load = [](const BipartitionCertificate& c) {
    return std::max(c.spanned[0] + c.specials[0], c.spanned[1] + c.specials[1]);
  };
  for (int r = 1; r < cfg.max_restarts; ++r) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    Bipartition s2;
    s2.side.resize(static_cast<size_t>(n));
    for (auto& s : s2.side) s = static_cast<std::uint8_t>(bounded(rng, 2));
    auto cand = attempt(std::move(s2));
    if (cand.second.holds) return cand;
    if (load(cand.second) < load(best.second)) best = std::move(cand);
  }
  return best;
}

SpecialMultigraph shrink_to_pairs(const MultiHypergraph& h) {
  std::vector<PairEdge> pairs;
  std::vector<int> specials;
  for (const auto& e : h.edges()) {
    if (e.arity == 1) {
      specials.push_back(e.v[0]);
    } else {
      // vertices are stored sorted, so the two smallest come first
      pairs.push_back({e.v[0], e.v[1], e.multiplicity});
    }
  }
  return SpecialMultigraph(h.num_vertices(), std::move(pairs), std::move(specials));
}

MeetingResult bipartition_hypergraph_meeting(const MultiHypergraph& h, const SearchConfig& cfg) {
  const SpecialMultigraph sm = shrink_to_pairs(h);
  auto [b, cert] = special_bipartition(sm, cfg);

  MeetingResult r;
  r.bipartition = std::move(b);
  r.m = sm.num_edges();
  r.k = sm.num_specials();
  for (const auto& e : h.edges()) {
    if (e.arity == 1) {
      ++r.meets[r.bipartition.side[static_cast<size_t>(e.v[0])]];
    } else {
      bool met[2] = {false, false};
      for (int i = 0; i < e.arity; ++i)
        met[r.bipartition.side[static_cast<size_t>(e.v[static_cast<size_t>(i)])]] = true;
      for (int s = 0; s < 2; ++s)
        if (met[s]) r.meets[static_cast<size_t>(s)] += e.multiplicity;
    }
  }
  r.holds = 6 * r.meets[0] >= 4 * r.m + 3 * (r.k - 1) && 6 * r.meets[1] >= 4 * r.m + 3 * (r.k - 1);
  return r;
}

}  // namespace jp
