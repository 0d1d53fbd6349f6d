#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquevec/nat.hpp"

namespace cliquevec {

// A face is a strictly increasing list of positive vertex labels (the
// vertex universe is 1, 2, ...). Ranks are 0-based throughout: rank t is
// the (t+1)-th set in the order.
using Face = std::vector<int>;

// Simplicial complex given by its facets (mixed cardinalities allowed,
// no facet contains another). Every complex contains the empty face.
struct Complex {
  std::vector<Face> facets;
};

// Rev-lex order on equal-cardinality sets: A precedes B iff the largest
// element of the symmetric difference lies in B. Throws on unequal sizes.
bool revlex_precedes(const Face& a, const Face& b);

// The k-set at rank t, via the greedy cascade correspondence. Inverse of
// revlex_rank.
Face revlex_unrank(const Nat& t, int k);
Nat revlex_rank(const Face& f);

// The first m k-sets in rev-lex order.
std::vector<Face> revlex_faces(int k, const Nat& m);

// The pure complex on the first m k-sets. m = 0 yields the complex whose
// only face is empty.
Complex revlex_complex(int k, const Nat& m);

// Union of rev-lex complexes, one per (dimension, count) pair with strictly
// increasing dimensions. Throws std::invalid_argument when a count exceeds
// the iterated shadow bound of its predecessor (the union would overshoot
// a face count).
Complex multi_revlex_complex(const std::vector<std::pair<int, Nat>>& specs);

// True iff no two elements are congruent mod r.
bool is_r_permissible(const Face& f, long long r);

// The pure complex on the first m r-permissible k-sets in rev-lex order.
// Requires r >= k. Vertex label mod r is a proper coloring with at most r
// colors.
Complex colored_revlex_complex(int k, const Nat& m, long long r);
std::vector<Face> colored_revlex_faces(int k, const Nat& m, long long r);

// Face counts by cardinality from the downward closure of the facets;
// index 0 counts the empty face, so a complex with no facets yields {1}.
std::vector<Nat> face_vector(const Complex& c);

// One face per line, space-separated ascending labels. Facets are emitted
// sorted by cardinality then rev-lex.
std::string to_facet_text(const Complex& c);
Complex from_facet_text(std::string_view text);

// Explicit face lists are capped at this many faces; larger complexes must
// be handled through their representations.
inline constexpr long long kMaxExplicitFaces = 1'000'000;

}  // namespace cliquevec
