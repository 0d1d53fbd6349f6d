#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <vector>

#include "cliquevec/nat.hpp"

namespace cliquevec {

// Counting a full clique vector without a size cap is refused beyond this
// many vertices (the subset space explodes); capped counts are allowed on
// any graph the storage can hold.
inline constexpr int kEnumerationCap = 64;
inline constexpr int kMaxExplicitVertices = 4096;

// Clique counts c_0..c_d. c_0 = 1 for every graph (the empty clique),
// c_1 = n; when untruncated the last entry is positive and d is the
// clique number.
struct CliqueVector {
  std::vector<Nat> counts;

  Nat at(int i) const {
    return i >= 0 && i < static_cast<int>(counts.size()) ? counts[i] : Nat(0);
  }
};

// Finite simple graph on vertices 0..n-1 (no loops, no multi-edges).
// File formats and printed labels are 1-based.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long long edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const boost::dynamic_bitset<>& neighbors(int v) const { return adj_[v]; }

  // Induced subgraph on the given (distinct) vertices, relabelled 0..k-1
  // in the given order.
  Graph induced(const std::vector<int>& keep) const;
  Graph without_vertex(int v) const;

  // This graph plus a disjoint copy of `other`.
  Graph disjoint_union(const Graph& other) const;

  static Graph complete(int n);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<boost::dynamic_bitset<>> adj_;
};

// Exact clique counts by ordered backtracking over candidate neighbor
// sets: every clique is visited once, not just the maximal ones. With
// max_size the counts stop there (and larger graphs are accepted);
// without it the graph must have at most kEnumerationCap vertices.
CliqueVector clique_vector(const Graph& g,
                           std::optional<int> max_size = std::nullopt);

// Induced subgraph on the common neighbors of `clique` (which must be a
// clique; throws std::invalid_argument otherwise).
Graph link(const Graph& g, const std::vector<int>& clique);

// Part sizes of the balanced partition of n into r parts, descending.
std::vector<long long> turan_parts(long long n, long long r);

// The Turan graph T_{n,r}: n vertices in r near-equal parts, adjacent iff
// in different parts. Parts occupy consecutive label ranges, larger parts
// first.
Graph turan_graph(long long n, long long r);

}  // namespace cliquevec
