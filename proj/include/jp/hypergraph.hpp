#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jp {

// Class labels for tripartitions. Bipartitions use side indices 0/1.
enum class Part : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Part, 3> all_parts{Part::A, Part::B, Part::C};

// Total assignment of vertices 0..n-1 to classes A/B/C. Classes may be empty.
struct Tripartition {
  std::vector<Part> label;

  int size() const { return static_cast<int>(label.size()); }
  std::vector<int> part_vertices(Part p) const;
  std::array<int, 3> part_sizes() const;
  bool operator==(const Tripartition&) const = default;
};

// Total assignment of vertices 0..n-1 to sides 0/1.
struct Bipartition {
  std::vector<std::uint8_t> side;

  int size() const { return static_cast<int>(side.size()); }
  std::vector<int> side_vertices(int s) const;
  bool operator==(const Bipartition&) const = default;
};

// 3-uniform hypergraph: edges are unordered triples of distinct vertices,
// stored sorted, duplicates rejected. The per-vertex incidence index is built
// once at construction; treat instances as immutable values afterwards.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  Hypergraph3(int n, std::vector<std::array<int, 3>> triples);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }
  const std::array<int, 3>& edge(int e) const { return edges_[e]; }
  std::span<const int> incident_edges(int v) const;
  int vertex_degree(int v) const;

 private:
  int n_ = 0;
  std::vector<std::array<int, 3>> edges_;
  std::vector<int> inc_start_;  // CSR incidence index
  std::vector<int> inc_flat_;
};

// Hypergraph with edges of one, two or three distinct vertices and positive
// multiplicities. Distinct vertex sets appear once (construction aggregates);
// single-vertex edges must end up with multiplicity 1.
struct MultiEdge {
  std::array<int, 3> v{};  // first `arity` entries used, sorted
  int arity = 0;
  long long multiplicity = 0;

  bool operator==(const MultiEdge&) const = default;
};

class MultiHypergraph {
 public:
  MultiHypergraph() = default;
  MultiHypergraph(int n, std::vector<MultiEdge> edges);

  int num_vertices() const { return n_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  long long total_multiplicity() const;

 private:
  int n_ = 0;
  std::vector<MultiEdge> edges_;  // canonical order: by (arity? no: by vertex set)
};

// Multigraph on pair edges plus a set of "special" vertices. m is the total
// edge multiplicity, k the number of specials.
struct PairEdge {
  int u = 0, v = 0;  // u < v
  long long multiplicity = 0;

  bool operator==(const PairEdge&) const = default;
};

class SpecialMultigraph {
 public:
  SpecialMultigraph() = default;
  SpecialMultigraph(int n, std::vector<PairEdge> pairs, std::vector<int> specials);

  int num_vertices() const { return n_; }
  const std::vector<PairEdge>& pairs() const { return pairs_; }
  const std::vector<int>& specials() const { return specials_; }
  bool is_special(int v) const { return special_mask_[static_cast<size_t>(v)] != 0; }
  long long num_edges() const { return m_; }  // with multiplicity
  int num_specials() const { return static_cast<int>(specials_.size()); }
  // Adjacency as (neighbour, multiplicity) lists.
  std::span<const std::pair<int, long long>> neighbours(int v) const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<PairEdge> pairs_;
  std::vector<int> specials_;
  std::vector<char> special_mask_;
  std::vector<int> adj_start_;
  std::vector<std::pair<int, long long>> adj_flat_;
};

// Integer-arithmetic bound witness for a tripartition: every part must meet
// at least (num/den)*m edges, checked as den*degree >= num*m.
struct Certificate {
  std::array<long long, 3> part_degrees{};
  long long m = 0;
  long long threshold_num = 0;
  long long threshold_den = 1;
  bool meets_bound = false;
  std::string method;
  bool semi_optimal = false;
  bool locally_optimal = false;
  bool exact = false;
};

// --- counting -------------------------------------------------------------
//
// d(S)  = number of edges meeting S (any intersection), multiplicity-aware
//         for MultiHypergraph.
// d2(S) = number of edges meeting S in at least two vertices.
// Sets are given as vertex lists; duplicates are absorbed.

long long degree(const Hypergraph3& g, std::span<const int> s);
long long degree(const MultiHypergraph& h, std::span<const int> s);
long long degree2(const Hypergraph3& g, std::span<const int> s);
long long degree2(const MultiHypergraph& h, std::span<const int> s);

// Number of edges whose intersection with S is exactly {a}. Requires a in S.
long long private_degree(const Hypergraph3& g, int a, std::span<const int> s);

// Canonical index of an unordered class triple; the ten values in sorted
// order are AAA, AAB, AAC, ABB, ABC, ACC, BBB, BBC, BCC, CCC -> 0..9.
int signature_index(Part x, Part y, Part z);

// All ten signature counts of the partition at once; they sum to m.
std::array<long long, 10> cross_counts(const Hypergraph3& g, const Tripartition& p);
long long cross_count(const Hypergraph3& g, const Tripartition& p, std::array<Part, 3> signature);

// Canonical index of an unordered class pair: AA, AB, AC, BB, BC, CC -> 0..5.
int pair_index(Part x, Part y);

// For the edges containing v: counts indexed by the class pair of the other
// two vertices.
std::array<long long, 6> incident_pair_counts(const Hypergraph3& g, const Tripartition& p, int v);

std::array<long long, 3> part_degrees(const Hypergraph3& g, const Tripartition& p);

// d(A) + d(B) + d(C); equals 2m + e(ABC) - e(AAA) - e(BBB) - e(CCC).
long long triple_degree(const Hypergraph3& g, const Tripartition& p);

// Restriction to a vertex subset: every edge is replaced by its intersection
// with `keep`, multiplicities aggregate. At most two vertices may be dropped
// and every edge must still meet `keep`. The result keeps the original vertex
// indexing; dropped vertices simply become isolated.
MultiHypergraph restrict_to(const Hypergraph3& g, std::span<const int> keep);

}  // namespace jp
