#pragma once

#include <vector>

#include "cliquevec/nat.hpp"

namespace cliquevec {

// Binomial coefficient C(n, k) with the zero conventions C(n, k) = 0 for
// k < 0 or n < k, and C(n, 0) = 1 for n >= 0. Total on all inputs.
Nat binom(const Nat& n, long long k);

// r_sum(k, [n_0, n_1, ..., n_s]) = sum_i C(n_i, k - i).
// The empty sum is 0. Entries beyond position k contribute via the
// C(n, 0) = 1 / C(n, <0) = 0 conventions, so sentinel terms need no
// special handling by callers.
Nat r_sum(int k, const std::vector<Nat>& terms);

// Number of k-cliques of the Turan graph T_{n,r} (n vertices split into r
// parts as evenly as possible, adjacent iff in different parts). Computed
// as the degree-k elementary symmetric function of the part sizes, via the
// closed form over the two distinct part sizes, so it scales to large n
// without touching an explicit graph.
//
// Equals C(n, k) when r >= n and 0 when k > r. Throws std::invalid_argument
// for r = 0 with n > 0 (no valid partition).
Nat turan_binom(const Nat& n, long long k, long long r);

}  // namespace cliquevec
