#include "cliquevec/bounds.hpp"

#include <stdexcept>

namespace cliquevec {

Nat kruskal_katona_bound(const Nat& m, int k) {
  if (k < 1) throw std::invalid_argument("kruskal_katona_bound: k must be >= 1");
  if (m == 0) return 0;
  return cascade_rep(m, k).level(k + 1);
}

Nat large_clique_bound(const Nat& m, int k) {
  if (k < 1) throw std::invalid_argument("large_clique_bound: k must be >= 1");
  if (m == 0) return 0;
  if (k < 3) return kruskal_katona_bound(m, k);
  return two_term_rep(m, k).sum_shifted(1);
}

Nat kalai_eckhoff_bound(const Nat& m, int k, long long r) {
  if (k < 1) throw std::invalid_argument("kalai_eckhoff_bound: k must be >= 1");
  if (r < k) throw std::invalid_argument("kalai_eckhoff_bound: requires r >= k");
  if (m == 0) return 0;
  return colored_rep(m, k, r).level_shifted(1);
}

std::optional<Nat> small_clique_bound(const Nat& m, int k) {
  if (k < 1) throw std::invalid_argument("small_clique_bound: k must be >= 1");
  if (m == 0) return Nat(0);
  Nat lead = cascade_leading_term(m, k);
  if (lead == k) return std::nullopt;
  return kalai_eckhoff_bound(m, k, static_cast<long long>(lead) - 1);
}

BoundReport combined_bound(const Nat& m, int k) {
  BoundReport report;
  report.m = m;
  report.k = k;
  report.kruskal_katona = kruskal_katona_bound(m, k);
  report.large_clique = large_clique_bound(m, k);
  report.small_clique = small_clique_bound(m, k);
  if (!report.small_clique) {
    report.combined = report.large_clique;
    report.winner = Winner::Large;
  } else if (report.large_clique > *report.small_clique) {
    report.combined = report.large_clique;
    report.winner = Winner::Large;
  } else if (report.large_clique < *report.small_clique) {
    report.combined = *report.small_clique;
    report.winner = Winner::Small;
  } else {
    report.combined = report.large_clique;
    report.winner = Winner::Tie;
  }
  return report;
}

MultistepReport multistep_report(const Nat& m, int k, int i) {
  if (k < 1) throw std::invalid_argument("multistep_report: k must be >= 1");
  if (i < 1) throw std::invalid_argument("multistep_report: step must be >= 1");
  MultistepReport report;
  report.m = m;
  report.k = k;
  report.step = i;
  if (m == 0) {
    report.clique_route = 0;
    report.colored_route = Nat(0);
    report.bound = 0;
    return report;
  }
  if (k >= 2) {
    report.clique_route = two_term_rep(m, k).sum_shifted(i);
  } else {
    // The cascade of m at k = 1 is the single term [m].
    report.clique_route = binom(m, 1 + i);
  }
  Nat lead = cascade_leading_term(m, k);
  if (lead > k) {
    report.colored_route =
        colored_rep(m, k, static_cast<long long>(lead) - 1).level_shifted(i);
  }
  report.bound = report.clique_route;
  if (report.colored_route && *report.colored_route > report.bound) {
    report.bound = *report.colored_route;
  }
  return report;
}

Nat multistep_bound(const Nat& m, int k, int i) {
  return multistep_report(m, k, i).bound;
}

Nat constructive_lower_bound(const Nat& m, int k) {
  if (k < 3) throw std::invalid_argument("constructive_lower_bound: k must be >= 3");
  if (m < 1) throw std::invalid_argument("constructive_lower_bound: m must be >= 1");
  TwoTermRep rep = two_term_rep(m, k);
  Nat value = binom(rep.lead, k + 1) + binom(rep.second, k);
  if (!rep.tail.empty()) value += binom(rep.tail[0], k);
  return value;
}

Rational ratio_proxy(const Nat& m, int k) {
  Nat lower = constructive_lower_bound(m, k);
  Nat kk = kruskal_katona_bound(m, k);
  if (kk <= lower) return 1;
  Nat lg = large_clique_bound(m, k);
  return Rational(lg - lower, kk - lower);
}

RatioStats ratio_stats(const Nat& m, int k) {
  RatioStats stats;
  stats.m = m;
  stats.k = k;
  stats.constructive_lower = constructive_lower_bound(m, k);
  stats.ratio_proxy = ratio_proxy(m, k);
  CascadeRep cascade = cascade_rep(m, k);
  if (cascade.terms.size() >= 3) {
    const Nat& third = cascade.terms[2];
    Nat ksq = Nat(k) * k;
    if (third > ksq) {
      stats.ratbound_rhs = Rational(ksq, third - ksq);
    }
  }
  return stats;
}

Rational large_win_fraction(unsigned long long j, int k) {
  if (j < 1) throw std::invalid_argument("large_win_fraction: j must be >= 1");
  if (k < 3) throw std::invalid_argument("large_win_fraction: k must be >= 3");
  unsigned long long wins = 0;
  for (unsigned long long m = 1; m <= j; ++m) {
    Nat large = large_clique_bound(Nat(m), k);
    std::optional<Nat> small = small_clique_bound(Nat(m), k);
    if (!small || large > *small) ++wins;
  }
  return Rational(Nat(wins), Nat(j));
}

}  // namespace cliquevec
