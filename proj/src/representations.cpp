#include "cliquevec/representations.hpp"

#include <stdexcept>

namespace cliquevec {

Nat ColoredRep::level_shifted(int d) const {
  Nat total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += turan_binom(terms[i].n, k - static_cast<long long>(i) + d,
                         terms[i].color);
  }
  return total;
}

Nat cascade_leading_term(const Nat& m, int k) {
  if (m < 1) throw std::invalid_argument("cascade_leading_term: m must be >= 1");
  if (k < 1) throw std::invalid_argument("cascade_leading_term: k must be >= 1");
  // C(k, k) = 1 <= m, so the answer is at least k. Grow an upper bracket,
  // then bisect on the monotone predicate C(t, k) <= m.
  Nat lo = k;
  Nat hi = Nat(k) + 1;
  while (binom(hi, k) <= m) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Nat mid = (lo + hi) / 2;
    if (binom(mid, k) <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

CascadeRep cascade_rep(const Nat& m, int k) {
  if (m < 1) throw std::invalid_argument("cascade_rep: m must be >= 1");
  if (k < 1) throw std::invalid_argument("cascade_rep: k must be >= 1");
  CascadeRep rep;
  rep.k = k;
  Nat rest = m;
  int level = k;
  while (rest > 0) {
    // The greedy remainder is < C(t, level-1), so the recursion reaches 0
    // no later than level 1.
    Nat t = cascade_leading_term(rest, level);
    rest -= binom(t, level);
    rep.terms.push_back(t);
    --level;
  }
  return rep;
}

TwoTermRep two_term_rep(const Nat& m, int k) {
  if (m < 1) throw std::invalid_argument("two_term_rep: m must be >= 1");
  if (k < 2) throw std::invalid_argument("two_term_rep: k must be >= 2");
  CascadeRep cascade = cascade_rep(m, k);
  TwoTermRep rep;
  rep.k = k;
  rep.lead = cascade.terms[0];
  rep.second = cascade.terms.size() > 1 ? cascade.terms[1] : Nat(k - 2);
  Nat q = m - binom(rep.lead, k) - binom(rep.second, k - 1);
  if (q > 0) {
    rep.tail = cascade_rep(q, k - 1).terms;
  }
  // The greedy choice of the second term forces C(second, k-2) > q; a
  // violation here means the decomposition above is broken.
  if (binom(rep.second, k - 2) <= q) {
    throw InvariantError("two_term_rep: remainder not dominated");
  }
  return rep;
}

namespace {

// Largest t with turan_binom(t, k, r) <= m, for m >= 1, r >= k >= 1.
Nat colored_leading_term(const Nat& m, int k, long long r) {
  Nat lo = k;  // turan_binom(k, k, r) = 1 <= m when r >= k
  Nat hi = Nat(k) + 1;
  while (turan_binom(hi, k, r) <= m) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Nat mid = (lo + hi) / 2;
    if (turan_binom(mid, k, r) <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

ColoredRep colored_rep(const Nat& m, int k, long long r) {
  if (m < 1) throw std::invalid_argument("colored_rep: m must be >= 1");
  if (k < 1) throw std::invalid_argument("colored_rep: k must be >= 1");
  if (r < k) throw std::invalid_argument("colored_rep: requires r >= k");
  ColoredRep rep;
  rep.k = k;
  rep.r = r;
  Nat rest = m;
  int level = k;
  long long color = r;
  while (rest > 0) {
    if (level < 1 || color < level) {
      throw InvariantError("colored_rep: color budget exhausted");
    }
    Nat t = colored_leading_term(rest, level, color);
    rest -= turan_binom(t, level, color);
    if (!rep.terms.empty()) {
      // Gap condition between consecutive terms.
      const ColoredTerm& prev = rep.terms.back();
      if (prev.n - prev.n / prev.color <= t) {
        throw InvariantError("colored_rep: gap condition violated");
      }
    }
    rep.terms.push_back({t, color});
    --level;
    --color;
  }
  return rep;
}

}  // namespace cliquevec
