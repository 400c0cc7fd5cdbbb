#include "jp/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jp {

namespace {

std::vector<char> set_mask(int n, std::span<const int> s) {
  std::vector<char> mask(static_cast<size_t>(n), 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    mask[static_cast<size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace

std::vector<int> Tripartition::part_vertices(Part p) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (label[static_cast<size_t>(v)] == p) out.push_back(v);
  return out;
}

std::array<int, 3> Tripartition::part_sizes() const {
  std::array<int, 3> s{};
  for (Part p : label) ++s[static_cast<size_t>(p)];
  return s;
}

std::vector<int> Bipartition::side_vertices(int s) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (side[static_cast<size_t>(v)] == s) out.push_back(v);
  return out;
}

Hypergraph3::Hypergraph3(int n, std::vector<std::array<int, 3>> triples) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(triples.size());
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= n) throw std::out_of_range("edge vertex out of range");
    if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("edge with repeated vertex");
    edges_.push_back(t);
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge");

  inc_start_.assign(static_cast<size_t>(n) + 1, 0);
  for (const auto& e : edges_)
    for (int v : e) ++inc_start_[static_cast<size_t>(v) + 1];
  for (size_t i = 1; i < inc_start_.size(); ++i) inc_start_[i] += inc_start_[i - 1];
  inc_flat_.resize(edges_.size() * 3);
  std::vector<int> fill(inc_start_.begin(), inc_start_.end() - 1);
  for (int e = 0; e < num_edges(); ++e)
    for (int v : edges_[static_cast<size_t>(e)]) inc_flat_[static_cast<size_t>(fill[static_cast<size_t>(v)]++)] = e;
}

std::span<const int> Hypergraph3::incident_edges(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  const auto lo = static_cast<size_t>(inc_start_[static_cast<size_t>(v)]);
  const auto hi = static_cast<size_t>(inc_start_[static_cast<size_t>(v) + 1]);
  return {inc_flat_.data() + lo, hi - lo};
}

int Hypergraph3::vertex_degree(int v) const {
  return static_cast<int>(incident_edges(v).size());
}

MultiHypergraph::MultiHypergraph(int n, std::vector<MultiEdge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::map<std::vector<int>, long long> agg;
  for (const auto& e : edges) {
    if (e.arity < 1 || e.arity > 3) throw std::invalid_argument("edge arity must be 1..3");
    if (e.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    std::vector<int> key(e.v.begin(), e.v.begin() + e.arity);
    std::sort(key.begin(), key.end());
    if (key.front() < 0 || key.back() >= n) throw std::out_of_range("edge vertex out of range");
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw std::invalid_argument("edge with repeated vertex");
    agg[key] += e.multiplicity;
  }
  for (const auto& [key, mult] : agg) {
    if (key.size() == 1 && mult != 1)
      throw std::invalid_argument("single-vertex edge with multiplicity != 1");
    MultiEdge e;
    e.arity = static_cast<int>(key.size());
    e.multiplicity = mult;
    std::copy(key.begin(), key.end(), e.v.begin());
    edges_.push_back(e);
  }
}

long long MultiHypergraph::total_multiplicity() const {
  long long t = 0;
  for (const auto& e : edges_) t += e.multiplicity;
  return t;
}

SpecialMultigraph::SpecialMultigraph(int n, std::vector<PairEdge> pairs, std::vector<int> specials)
    : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::map<std::pair<int, int>, long long> agg;
  for (const auto& p : pairs) {
    int u = std::min(p.u, p.v), v = std::max(p.u, p.v);
    if (u < 0 || v >= n) throw std::out_of_range("pair vertex out of range");
    if (u == v) throw std::invalid_argument("pair edge with equal endpoints");
    if (p.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    agg[{u, v}] += p.multiplicity;
  }
  for (const auto& [uv, mult] : agg) {
    pairs_.push_back({uv.first, uv.second, mult});
    m_ += mult;
  }

  special_mask_.assign(static_cast<size_t>(n), 0);
  std::sort(specials.begin(), specials.end());
  if (std::adjacent_find(specials.begin(), specials.end()) != specials.end())
    throw std::invalid_argument("duplicate special vertex");
  for (int v : specials) {
    if (v < 0 || v >= n) throw std::out_of_range("special vertex out of range");
    special_mask_[static_cast<size_t>(v)] = 1;
  }
  specials_ = std::move(specials);

  adj_start_.assign(static_cast<size_t>(n) + 1, 0);
  for (const auto& p : pairs_) {
    ++adj_start_[static_cast<size_t>(p.u) + 1];
    ++adj_start_[static_cast<size_t>(p.v) + 1];
  }
  for (size_t i = 1; i < adj_start_.size(); ++i) adj_start_[i] += adj_start_[i - 1];
  adj_flat_.resize(pairs_.size() * 2);
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (const auto& p : pairs_) {
    adj_flat_[static_cast<size_t>(fill[static_cast<size_t>(p.u)]++)] = {p.v, p.multiplicity};
    adj_flat_[static_cast<size_t>(fill[static_cast<size_t>(p.v)]++)] = {p.u, p.multiplicity};
  }
}

std::span<const std::pair<int, long long>> SpecialMultigraph::neighbours(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  const auto lo = static_cast<size_t>(adj_start_[static_cast<size_t>(v)]);
  const auto hi = static_cast<size_t>(adj_start_[static_cast<size_t>(v) + 1]);
  return {adj_flat_.data() + lo, hi - lo};
}

long long degree(const Hypergraph3& g, std::span<const int> s) {
  const auto mask = set_mask(g.num_vertices(), s);
  long long d = 0;
  for (const auto& e : g.edges())
    if (mask[static_cast<size_t>(e[0])] || mask[static_cast<size_t>(e[1])] ||
        mask[static_cast<size_t>(e[2])])
      ++d;
  return d;
}

long long degree(const MultiHypergraph& h, std::span<const int> s) {
  const auto mask = set_mask(h.num_vertices(), s);
  long long d = 0;
  for (const auto& e : h.edges()) {
    for (int i = 0; i < e.arity; ++i)
      if (mask[static_cast<size_t>(e.v[static_cast<size_t>(i)])]) {
        d += e.multiplicity;
        break;
      }
  }
  return d;
}

long long degree2(const Hypergraph3& g, std::span<const int> s) {
  const auto mask = set_mask(g.num_vertices(), s);
  long long d = 0;
  for (const auto& e : g.edges()) {
    int hits = mask[static_cast<size_t>(e[0])] + mask[static_cast<size_t>(e[1])] +
               mask[static_cast<size_t>(e[2])];
    if (hits >= 2) ++d;
  }
  return d;
}

long long degree2(const MultiHypergraph& h, std::span<const int> s) {
  const auto mask = set_mask(h.num_vertices(), s);
  long long d = 0;
  for (const auto& e : h.edges()) {
    int hits = 0;
    for (int i = 0; i < e.arity; ++i) hits += mask[static_cast<size_t>(e.v[static_cast<size_t>(i)])];
    if (hits >= 2) d += e.multiplicity;
  }
  return d;
}

long long private_degree(const Hypergraph3& g, int a, std::span<const int> s) {
  const auto mask = set_mask(g.num_vertices(), s);
  if (a < 0 || a >= g.num_vertices() || !mask[static_cast<size_t>(a)])
    throw std::invalid_argument("private_degree requires a member of the set");
  long long d = 0;
  for (int e : g.incident_edges(a)) {
    const auto& t = g.edge(e);
    int hits = mask[static_cast<size_t>(t[0])] + mask[static_cast<size_t>(t[1])] +
               mask[static_cast<size_t>(t[2])];
    if (hits == 1) ++d;
  }
  return d;
}

int signature_index(Part x, Part y, Part z) {
  std::array<int, 3> s{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)};
  std::sort(s.begin(), s.end());
  // Rank of the sorted triple among the ten multisets over {0,1,2}.
  int idx = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = b; c <= 2; ++c) {
        if (a == s[0] && b == s[1] && c == s[2]) return idx;
        ++idx;
      }
  return -1;  // unreachable
}

std::array<long long, 10> cross_counts(const Hypergraph3& g, const Tripartition& p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  std::array<long long, 10> c{};
  for (const auto& e : g.edges()) {
    const Part a = p.label[static_cast<size_t>(e[0])];
    const Part b = p.label[static_cast<size_t>(e[1])];
    const Part d = p.label[static_cast<size_t>(e[2])];
    ++c[static_cast<size_t>(signature_index(a, b, d))];
  }
  return c;
}

long long cross_count(const Hypergraph3& g, const Tripartition& p, std::array<Part, 3> signature) {
  return cross_counts(g, p)[static_cast<size_t>(signature_index(signature[0], signature[1], signature[2]))];
}

int pair_index(Part x, Part y) {
  int a = static_cast<int>(x), b = static_cast<int>(y);
  if (a > b) std::swap(a, b);
  static constexpr int rank[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
  return rank[a][b];
}

std::array<long long, 6> incident_pair_counts(const Hypergraph3& g, const Tripartition& p, int v) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  std::array<long long, 6> c{};
  for (int e : g.incident_edges(v)) {
    const auto& t = g.edge(e);
    Part other[2];
    int j = 0;
    for (int u : t)
      if (u != v) other[j++] = p.label[static_cast<size_t>(u)];
    ++c[static_cast<size_t>(pair_index(other[0], other[1]))];
  }
  return c;
}

std::array<long long, 3> part_degrees(const Hypergraph3& g, const Tripartition& p) {
  if (p.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
  std::array<long long, 3> d{};
  for (const auto& e : g.edges()) {
    bool met[3] = {false, false, false};
    for (int u : e) met[static_cast<size_t>(p.label[static_cast<size_t>(u)])] = true;
    for (int i = 0; i < 3; ++i)
      if (met[i]) ++d[static_cast<size_t>(i)];
  }
  return d;
}

long long triple_degree(const Hypergraph3& g, const Tripartition& p) {
  const auto d = part_degrees(g, p);
  return d[0] + d[1] + d[2];
}

MultiHypergraph restrict_to(const Hypergraph3& g, std::span<const int> keep) {
  const auto mask = set_mask(g.num_vertices(), keep);
  long long kept = 0;
  for (char c : mask) kept += c;
  if (g.num_vertices() - kept > 2)
    throw std::invalid_argument("restriction may drop at most two vertices");
  std::vector<MultiEdge> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    MultiEdge me;
    me.multiplicity = 1;
    for (int u : e)
      if (mask[static_cast<size_t>(u)]) me.v[static_cast<size_t>(me.arity++)] = u;
    if (me.arity == 0) throw std::invalid_argument("restriction would empty an edge");
    out.push_back(me);
  }
  return MultiHypergraph(g.num_vertices(), std::move(out));
}

}  // namespace jp
