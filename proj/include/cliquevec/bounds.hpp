#pragma once

#include <optional>
#include <vector>

#include "cliquevec/nat.hpp"
#include "cliquevec/representations.hpp"

namespace cliquevec {

// Which of the two case bounds supplies the combined bound.
enum class Winner { Large, Small, Tie };

// All consecutive-dimension bounds for one (m, k) pair.
//
// small_clique is absent exactly when the cascade of m has leading term k
// (for m >= 1); reports must distinguish that from a value of 0, and in
// the combined maximum an absent value always loses.
struct BoundReport {
  Nat m;
  int k = 0;
  Nat kruskal_katona;
  Nat large_clique;
  std::optional<Nat> small_clique;
  Nat combined;
  Winner winner = Winner::Tie;
};

// The two routes of the multistep bound; the colored route must come from
// the one-shot colored form, never from iterating the one-step bound.
struct MultistepReport {
  Nat m;
  int k = 0;
  int step = 0;
  Nat clique_route;
  std::optional<Nat> colored_route;
  Nat bound;
};

// Exact-rational tightness statistics for one (m, k) pair.
struct RatioStats {
  Nat m;
  int k = 0;
  Nat constructive_lower;
  Rational ratio_proxy;
  std::optional<Rational> ratbound_rhs;  // k^2 / (t_2 - k^2) when t_2 > k^2
};

// Classical shadow bound: the cascade of m with every binomial level
// shifted up by one. 0 at m = 0.
Nat kruskal_katona_bound(const Nat& m, int k);

// Bound on c_{k+1} for graphs that contain a clique on the leading cascade
// term of m. Evaluated from the two-term representation for k >= 3; equals
// the classical bound for k < 3. 0 at m = 0.
Nat large_clique_bound(const Nat& m, int k);

// Bound on c_{k+1} for graphs with no (r+1)-clique: the colored
// representation of m at budget r with every clique level shifted up by
// one. 0 at m = 0. Requires r >= k.
Nat kalai_eckhoff_bound(const Nat& m, int k, long long r);

// Bound on c_{k+1} for graphs lacking a clique on the leading cascade term
// t of m: the Kalai-Eckhoff bound at budget t - 1. Absent when t = k.
// Nat(0) at m = 0.
std::optional<Nat> small_clique_bound(const Nat& m, int k);

// max{large_clique_bound, small_clique_bound}, an absent small bound
// losing, with the winner tag (ties reported as Tie).
BoundReport combined_bound(const Nat& m, int k);

// Bound on c_{k+i}: the larger of the clique route (two-term form shifted
// by i) and the colored route (colored form shifted by i). At i = 1 this
// equals the combined bound.
MultistepReport multistep_report(const Nat& m, int k, int i);
Nat multistep_bound(const Nat& m, int k, int i);

// Constructive lower bound on the best possible c_{k+1} among graphs with
// m k-cliques and a clique on the leading cascade term: a clique on `lead`
// vertices plus one vertex adjacent to `second` of them plus one vertex
// adjacent to the first tail term of them. Requires k >= 3, m >= 1.
Nat constructive_lower_bound(const Nat& m, int k);

// (large_clique_bound - constructive_lower) / (kruskal_katona -
// constructive_lower) as an exact rational; 1 when the denominator
// vanishes. Upper-bounds the true tightness ratio, whose exact value
// needs the (unknown in general) extremal count. Requires k >= 3, m >= 1.
Rational ratio_proxy(const Nat& m, int k);

RatioStats ratio_stats(const Nat& m, int k);

// Fraction of m in [1, j] where the large-clique bound strictly beats the
// small-clique bound (an absent small bound counts as a win). k >= 3.
Rational large_win_fraction(unsigned long long j, int k);

}  // namespace cliquevec
