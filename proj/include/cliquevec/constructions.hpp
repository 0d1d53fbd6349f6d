#pragma once

#include <string>
#include <vector>

#include "cliquevec/graphs.hpp"
#include "cliquevec/nat.hpp"

namespace cliquevec {

enum class ConstructionKind {
  // K_lead plus a vertex joined to `second` of it plus a vertex joined to
  // the first tail term of it. Attains the large-clique bound.
  CliquePlusTwo = 1,
  // As above, but the two added vertices are adjacent and share a
  // prescribed number of neighbors. Attains the large-clique bound under
  // a weaker condition on the tail.
  CliquePlusLinked = 2,
  // A Turan graph plus one vertex joined to an induced smaller Turan
  // graph. Attains the small-clique bound.
  TuranPlusOne = 3,
};

struct ConstructionPlan {
  ConstructionKind kind = ConstructionKind::CliquePlusTwo;
  int k = 0;
  Nat m;
  // Parameters actually used to build the graph, in construction order
  // (core size, attachment sizes / colored term sizes).
  std::vector<Nat> parameters;
  long long padding_blocks = 0;  // disjoint K_k components appended
  Nat predicted_ck;
  Nat predicted_ck1;
  // True once the counts above were re-derived by exhaustive clique
  // enumeration of the built graph (done automatically for graphs within
  // the enumeration cap).
  bool verified = false;
};

struct BuiltConstruction {
  ConstructionPlan plan;
  Graph graph;
};

// Each builder throws InapplicableError when its applicability condition
// fails, std::invalid_argument on domain errors, and ResourceError when
// the explicit graph would be too large to materialize. On success the
// built graph has exactly m k-cliques, and its (k+1)-clique count equals
// the corresponding bound.
BuiltConstruction construction1(const Nat& m, int k);
BuiltConstruction construction2(const Nat& m, int k);
BuiltConstruction construction3(const Nat& m, int k);

BuiltConstruction build_construction(ConstructionKind kind, const Nat& m, int k);

}  // namespace cliquevec
