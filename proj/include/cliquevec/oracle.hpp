#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cliquevec/graphs.hpp"
#include "cliquevec/nat.hpp"

namespace cliquevec::oracle {

// Enumeration is refused above the hard cap; callers must opt in to the
// slowest size explicitly.
inline constexpr int kDefaultVertexCap = 7;
inline constexpr int kHardVertexCap = 8;

// Adjacency-mask graph small enough for the exhaustive sweeps.
struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, kHardVertexCap> adj{};

  Graph to_graph() const;
};

// Clique counts c_0..c_8 and the clique number of a small graph.
struct SmallCliqueCounts {
  std::array<std::uint64_t, kHardVertexCap + 1> counts{};
  int omega = 0;
};
SmallCliqueCounts small_clique_counts(const SmallGraph& g);

// Visits every labeled simple graph on n vertices exactly once (all edge
// subsets, in increasing code order) and returns how many were visited.
// With prune set, only graphs whose degree sequence is non-increasing in
// the vertex labels are visited; every graph is isomorphic to such a
// representative, so the set of clique vectors encountered is unchanged.
// Throws ResourceError for n above the default cap unless allow_large is
// set, and always for n above the hard cap.
std::uint64_t enumerate_graphs(int n,
                               const std::function<void(const SmallGraph&)>& consumer,
                               bool allow_large = false, bool prune = false);

struct OracleCell {
  bool any = false;
  Nat max;
  std::uint64_t witness_code = 0;
  std::string witness6;
};

struct ExtremalRow {
  OracleCell all;            // max c_{k+1} over every graph with c_k = m
  OracleCell with_clique;    // ... restricted to graphs with a clique on the
                             // leading cascade term of m
  OracleCell without_clique; // ... restricted to graphs without one
  // True when the with-clique maximum meets the large-clique bound, i.e.
  // the extremal value for this row is settled at this vertex count;
  // otherwise the row is a lower bound only.
  bool extremal_exact = false;
};

struct ExtremalTable {
  int k = 0;
  int n_max = 0;
  std::vector<ExtremalRow> rows;  // indexed by m = 0 .. C(n_max, k)

  // Columns: m, max_all, max_with_clique, max_without, lgbd, smbd, oldbd,
  // witness6 (empty fields for empty cells / undefined bounds; witness6 is
  // the overall-max witness).
  std::string to_csv() const;
};

// Exact conditional maxima per m over all graphs on exactly n_max labeled
// vertices (isolated vertices cover the smaller sizes, since the counted
// clique sizes are all >= 2). Requires k >= 2. Chunked deterministically
// across `threads` workers.
ExtremalTable build_extremal_table(int k, int n_max, int threads = 1,
                                   bool allow_large = false);

struct VerifyReport {
  int k = 0;
  int n_max = 0;
  std::uint64_t graphs = 0;
  std::uint64_t combined_violations = 0;
  std::uint64_t refined_violations = 0;
  std::vector<std::string> counterexamples;  // graph6, at most one per row
  std::uint64_t rows_nonempty = 0;
  std::uint64_t rows_attaining_bound = 0;

  bool ok() const { return combined_violations == 0 && refined_violations == 0; }
};

// Checks, for every enumerated graph: c_{k+1} is at most the combined
// bound of c_k; refined by clique content, graphs with a clique on the
// leading cascade term respect the large-clique bound and the rest the
// small-clique bound.
VerifyReport verify_combined_bound(int k, int n_max, int threads = 1,
                                 bool allow_large = false);

// Same checks against an already-built table.
VerifyReport verify_table(const ExtremalTable& table);

struct NonexistenceResult {
  bool exists = false;             // a witness was found at this scale
  bool certified_by_bound = false; // ruled out at every scale by the bound
  std::string witness6;
};

// Does any graph with c_k = m have c_{k+i} = target? Certified impossible
// when the multistep bound already excludes the target; otherwise settled
// by enumeration up to n_max vertices only.
NonexistenceResult verify_nonexistence(int k, int i, const Nat& m,
                                       const Nat& target, int n_max,
                                       bool allow_large = false);

}  // namespace cliquevec::oracle
