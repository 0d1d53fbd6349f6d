#pragma once

#include <vector>

#include "cliquevec/binomial.hpp"
#include "cliquevec/nat.hpp"

namespace cliquevec {

// The unique expansion m = C(t_0, k) + C(t_1, k-1) + ... with strictly
// decreasing terms, t_i >= k - i, and a positive last level k - s.
struct CascadeRep {
  int k = 0;
  std::vector<Nat> terms;  // terms[i] lives at binomial level k - i

  // Re-evaluates the terms with all binomial levels shifted: value at
  // level j is sum_i C(terms[i], j - i). level(k) recomposes the source.
  Nat level(int j) const { return r_sum(j, terms); }
  Nat value() const { return level(k); }
};

// The two-leading-terms-plus-lower-cascade form
//   m = C(lead, k) + C(second, k-1) + q,   q = r_{k-1}(tail),
// with C(second, k-2) > q. When the cascade of m has a single term, second
// holds the sentinel value k-2 ("absent"): its binomial contributions
// vanish at every level used, so recomposition needs no special cases.
struct TwoTermRep {
  int k = 0;
  Nat lead;
  Nat second;
  std::vector<Nat> tail;  // cascade terms of q at level k-1; empty iff q = 0

  bool second_absent() const { return second == k - 2; }
  Nat remainder() const { return r_sum(k - 1, tail); }
  // sum_shifted(d) = C(lead, k+d) + C(second, k-1+d) + r_{k-1+d}(tail).
  Nat sum_shifted(int d) const {
    return binom(lead, k + d) + binom(second, k - 1 + d) +
           r_sum(k - 1 + d, tail);
  }
  Nat value() const { return sum_shifted(0); }
};

// One term of a colored representation: a Turan binomial C(n, level)_color.
struct ColoredTerm {
  Nat n;
  long long color = 0;
};

// The unique expansion m = sum_i C(t_i, k-i)_{r-i} with the gap condition
// t_i - floor(t_i / (r-i)) > t_{i+1} and a positive last level.
struct ColoredRep {
  int k = 0;
  long long r = 0;
  std::vector<ColoredTerm> terms;  // terms[i] at clique level k - i

  // Value with all clique levels shifted by d (d = 0 recomposes m).
  Nat level_shifted(int d) const;
  Nat value() const { return level_shifted(0); }
};

// Greedy cascade decomposition: the leading term is the largest t with
// C(t, k) <= m, recursing on the remainder one level down. Throws
// std::invalid_argument for m = 0 or k < 1 (bound evaluation treats 0
// separately before calling here).
CascadeRep cascade_rep(const Nat& m, int k);

// Largest t with C(t, k) <= m (m >= 1, k >= 1). Binary search on t, since
// m may be far too large for a linear scan.
Nat cascade_leading_term(const Nat& m, int k);

// Splits m into the two leading cascade terms plus the cascade of the
// remainder one level down. Throws std::invalid_argument for m = 0 or
// k < 2 (the k = 1 form is never defined; bounds fall back to the plain
// cascade bound for k < 3).
TwoTermRep two_term_rep(const Nat& m, int k);

// Greedy colored decomposition at color budget r >= k >= 1: the leading
// term is the largest t with turan_binom(t, k, r) <= m, recursing on the
// remainder at (k-1, r-1). Throws std::invalid_argument for m = 0 or
// r < k; throws InvariantError if the color budget were ever exhausted
// before m (impossible for valid inputs).
ColoredRep colored_rep(const Nat& m, int k, long long r);

}  // namespace cliquevec
